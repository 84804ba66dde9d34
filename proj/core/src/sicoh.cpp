#include "wfusion/sicoh.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfusion::sicoh {

long RelBasisState::weight() const
{
    long s = 0;
    for (long k : bplus)
        s += k;
    for (long k : bminus)
        s += k;
    for (long k : f)
        s += k;
    for (long k : fs)
        s += k;
    return s;
}

namespace {

std::vector<std::vector<long>> partitions(long w)
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, w, w);
    return out;
}

std::vector<std::vector<long>> strict_sets(long w)
{
    // strictly increasing sequences of distinct positive integers summing to w
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long minpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = minpart; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p, p + 1);
            cur.pop_back();
        }
    };
    rec(rec, w, 1);
    return out;
}

// Sparse accumulation of d applied to one state.
using Image = std::map<RelBasisState, Rat>;

void add_image(Image& im, RelBasisState s, const Rat& c)
{
    if (c == 0)
        return;
    im[std::move(s)] += c;
}

long count_below(const std::vector<long>& v, long k)
{
    long c = 0;
    for (long x : v)
        if (x < k)
            ++c;
    return c;
}

// d = sum_{k>=1} [ A_{(-k)} phi*_{(k)} + phi*_{(-k)} A_{(k)} ],
// A = B^+ + B^-, [B^pm_m, B^pm_k] = pm b m delta_{m+k,0}.
Image differential(const RelBasisState& s, const Rat& b)
{
    Image im;
    // phi*_{(k)} contracts a phi mode, then A_{(-k)} creates a boson mode.
    for (std::size_t t = 0; t < s.f.size(); ++t) {
        long k = s.f[t];
        Rat sgn = (static_cast<long>(t) % 2 == 0) ? 1 : -1; // pass earlier phi modes
        RelBasisState base = s;
        base.f.erase(base.f.begin() + t);
        {
            RelBasisState ns = base;
            ns.bplus.push_back(k);
            std::sort(ns.bplus.begin(), ns.bplus.end(), std::greater<long>());
            add_image(im, std::move(ns), sgn);
        }
        {
            RelBasisState ns = base;
            ns.bminus.push_back(k);
            std::sort(ns.bminus.begin(), ns.bminus.end(), std::greater<long>());
            add_image(im, std::move(ns), sgn);
        }
    }
    // A_{(k)} contracts a boson mode, then phi*_{(-k)} creates a phi* mode.
    auto boson_term = [&](const std::vector<long>& modes, bool plus) {
        // distinct modes only; multiplicity enters the coefficient
        std::vector<long> seen;
        for (std::size_t t = 0; t < modes.size(); ++t) {
            long k = modes[t];
            if (std::find(seen.begin(), seen.end(), k) != seen.end())
                continue;
            seen.push_back(k);
            long mult = std::count(modes.begin(), modes.end(), k);
            if (std::binary_search(s.fs.begin(), s.fs.end(), k))
                continue; // phi*_{-k} already occupied
            Rat coeff = Rat(mult) * Rat(k) * (plus ? b : -b);
            // sign: phi*_{-k} passes all phi modes, then earlier phi* modes
            long passes = static_cast<long>(s.f.size()) + count_below(s.fs, k);
            if (passes % 2)
                coeff = -coeff;
            RelBasisState ns = s;
            auto& v = plus ? ns.bplus : ns.bminus;
            v.erase(std::find(v.begin(), v.end(), k));
            ns.fs.insert(std::upper_bound(ns.fs.begin(), ns.fs.end(), k), k);
            add_image(im, std::move(ns), coeff);
        }
    };
    boson_term(s.bplus, true);
    boson_term(s.bminus, false);
    return im;
}

} // namespace

WeightBlock build_block(const Rat& b, long w)
{
    WeightBlock blk;
    blk.weight = w;
    blk.b = b;

    // Enumerate states: split w over the four factors.
    for (long w1 = 0; w1 <= w; ++w1)
        for (long w2 = 0; w1 + w2 <= w; ++w2)
            for (long w3 = 0; w1 + w2 + w3 <= w; ++w3) {
                long w4 = w - w1 - w2 - w3;
                for (const auto& p1 : partitions(w1))
                    for (const auto& p2 : partitions(w2))
                        for (const auto& f : strict_sets(w3))
                            for (const auto& fs : strict_sets(w4)) {
                                RelBasisState s{p1, p2, f, fs};
                                blk.basis[s.ghost()].push_back(std::move(s));
                            }
            }
    for (auto& [p, states] : blk.basis)
        std::sort(states.begin(), states.end());

    for (const auto& [p, states] : blk.basis) {
        auto tgt = blk.basis.find(p + 1);
        if (tgt == blk.basis.end()) {
            blk.d[p] = {};
            continue;
        }
        const auto& tstates = tgt->second;
        std::vector<std::vector<Rat>> M(tstates.size(),
                                        std::vector<Rat>(states.size(), Rat(0)));
        for (std::size_t j = 0; j < states.size(); ++j) {
            for (const auto& [ns, c] : differential(states[j], b)) {
                auto it = std::lower_bound(tstates.begin(), tstates.end(), ns);
                if (it == tstates.end() || !(*it == ns))
                    throw std::logic_error("differential left the weight block");
                M[it - tstates.begin()][j] += c;
            }
        }
        blk.d[p] = std::move(M);
    }
    return blk;
}

bool check_d_squared(const WeightBlock& blk)
{
    for (const auto& [p, M1] : blk.d) {
        auto it = blk.d.find(p + 1);
        if (it == blk.d.end() || M1.empty() || it->second.empty())
            continue;
        const auto& M2 = it->second;
        // M2 * M1 must vanish.
        for (std::size_t i = 0; i < M2.size(); ++i)
            for (std::size_t j = 0; j < M1[0].size(); ++j) {
                Rat s = 0;
                for (std::size_t k = 0; k < M1.size(); ++k)
                    s += M2[i][k] * M1[k][j];
                if (s != 0)
                    return false;
            }
    }
    return true;
}

long exact_rank(const std::vector<std::vector<Rat>>& Min)
{
    if (Min.empty() || Min[0].empty())
        return 0;
    const std::size_t rows = Min.size(), cols = Min[0].size();
    // Clear denominators row by row.
    std::vector<std::vector<Int>> M(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (const auto& x : Min[i]) {
            Int d = rat_den(x);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat v = Min[i][j] * Rat(l);
            M[i][j] = rat_num(v);
        }
    }
    // Bareiss fraction-free elimination.
    long rank = 0;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && M[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(M[piv], M[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                M[i][j] = (M[i][j] * M[row][col] - M[i][col] * M[row][j]) / prev;
            M[i][col] = 0;
        }
        prev = M[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

std::map<long, long> block_cohomology(const WeightBlock& blk)
{
    std::map<long, long> out;
    std::map<long, long> rank;
    for (const auto& [p, M] : blk.d)
        rank[p] = exact_rank(M);
    for (const auto& [p, states] : blk.basis) {
        long dim = static_cast<long>(states.size());
        long rout = rank.count(p) ? rank[p] : 0;
        long rin = rank.count(p - 1) ? rank[p - 1] : 0;
        out[p] = dim - rout - rin;
        if (out[p] < 0)
            throw std::logic_error("block_cohomology: negative dimension");
    }
    return out;
}

std::map<long, long> rel_cohomology(const Rat& lambda, const Rat& mu, const Rat& b, long w)
{
    if (lambda + mu != 0)
        return {}; // A_(0) acts by a nonzero scalar: the complex vanishes
    if (w == 0)
        return {{0, 1}};
    auto blk = build_block(b, w);
    if (!check_d_squared(blk))
        throw std::logic_error("rel_cohomology: d^2 != 0");
    auto h = block_cohomology(blk);
    for (auto it = h.begin(); it != h.end();)
        it = it->second == 0 ? h.erase(it) : std::next(it);
    return h;
}

std::map<long, long> koszul_dims(long m)
{
    std::map<long, long> out;
    for (long e = 0; e <= 1; ++e)
        for (long fdeg = 0; fdeg <= 1; ++fdeg) {
            long rest = m - e - fdeg;
            if (rest < 0)
                continue;
            out[fdeg - e] += rest + 1; // choices of (alpha, beta), alpha+beta = rest
        }
    return out;
}

std::map<long, long> koszul_cohomology(long m)
{
    // Monomial basis (alpha, beta, e, f) with alpha+beta+e+f = m.
    struct Mono {
        long a, bdeg, e, f;
        auto operator<=>(const Mono&) const = default;
    };
    std::map<long, std::vector<Mono>> basis;
    for (long e = 0; e <= 1; ++e)
        for (long f = 0; f <= 1; ++f)
            for (long a = 0; a + e + f <= m; ++a) {
                long bd = m - a - e - f;
                basis[f - e].push_back({a, bd, e, f});
            }
    for (auto& [p, v] : basis)
        std::sort(v.begin(), v.end());

    std::map<long, long> rank;
    for (const auto& [p, src] : basis) {
        auto tgt = basis.find(p + 1);
        if (tgt == basis.end()) {
            rank[p] = 0;
            continue;
        }
        std::vector<std::vector<Rat>> M(tgt->second.size(),
                                        std::vector<Rat>(src.size(), Rat(0)));
        auto idx = [&](const Mono& mo) {
            auto it = std::lower_bound(tgt->second.begin(), tgt->second.end(), mo);
            if (it == tgt->second.end() || !(*it == mo))
                throw std::logic_error("koszul: image outside block");
            return static_cast<std::size_t>(it - tgt->second.begin());
        };
        for (std::size_t j = 0; j < src.size(); ++j) {
            const Mono& mo = src[j];
            // psi* d/dy: kills y once, adds psi*; sign from passing psi.
            if (mo.bdeg > 0 && mo.f == 0) {
                Mono t{mo.a, mo.bdeg - 1, mo.e, 1};
                Rat c = Rat(mo.bdeg) * (mo.e ? -1 : 1);
                M[idx(t)][j] += c;
            }
            // x d/dpsi: removes psi, adds x.
            if (mo.e == 1) {
                Mono t{mo.a + 1, mo.bdeg, 0, mo.f};
                M[idx(t)][j] += 1;
            }
        }
        rank[p] = exact_rank(M);
    }

    std::map<long, long> out;
    for (const auto& [p, v] : basis) {
        long rout = rank.count(p) ? rank[p] : 0;
        long rin = rank.count(p - 1) ? rank[p - 1] : 0;
        out[p] = static_cast<long>(v.size()) - rout - rin;
    }
    return out;
}

} // namespace wfusion::sicoh
