#include "wfusion/ringkit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wfusion::ringkit {

namespace {
const std::map<int, Int> kEmpty;

long gcd_l(long a, long b)
{
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}
} // namespace

const std::map<int, Int>& FusionRing::product(int i, int j) const
{
    if (i > j)
        std::swap(i, j);
    auto it = constants.find({i, j});
    return it == constants.end() ? kEmpty : it->second;
}

int FusionRing::pic_product(int i, int j) const
{
    const auto& p = product(i, j);
    if (p.size() != 1 || p.begin()->second != 1)
        throw std::logic_error("pic_product: product is not a single simple");
    return p.begin()->first;
}

void FusionRing::check_consistency() const
{
    const int B = size();
    for (int i = 0; i < B; ++i) {
        const auto& p = product(unit, i);
        if (p.size() != 1 || p.begin()->first != i || p.begin()->second != 1)
            throw std::logic_error("fusion ring: unit fails to act as identity");
    }
    // Associativity (x y) z = x (y z).
    auto mul_vec = [&](const std::map<int, Int>& v, int z) {
        std::map<int, Int> out;
        for (const auto& [k, c] : v)
            for (const auto& [t, d] : product(k, z))
                out[t] += c * d;
        return out;
    };
    for (int x = 0; x < B; ++x)
        for (int y = x; y < B; ++y)
            for (int z = y; z < B; ++z) {
                auto lhs = mul_vec(product(x, y), z);
                auto rhs = mul_vec(product(y, z), x);
                for (auto it = lhs.begin(); it != lhs.end();)
                    it = it->second == 0 ? lhs.erase(it) : std::next(it);
                for (auto it = rhs.begin(); it != rhs.end();)
                    it = it->second == 0 ? rhs.erase(it) : std::next(it);
                if (lhs != rhs)
                    throw std::logic_error("fusion ring: associativity fails");
            }
}

FusionRing group_ring(long M, bool lattice_weights)
{
    if (M < 1)
        throw std::invalid_argument("group_ring: M must be positive");
    FusionRing R;
    for (long a = 0; a < M; ++a)
        R.labels.push_back("g" + std::to_string(a));
    R.unit = 0;
    for (long a = 0; a < M; ++a)
        R.pic.push_back(static_cast<int>(a));
    for (long a = 0; a < M; ++a)
        for (long b = a; b < M; ++b)
            R.constants[{static_cast<int>(a), static_cast<int>(b)}] = {
                {static_cast<int>((a + b) % M), Int(1)}};
    if (lattice_weights)
        for (long a = 0; a < M; ++a)
            R.h.push_back(Rat(a * a, 2 * M));
    return R;
}

Rat monodromy_phase(const FusionRing& ring, int s, int x)
{
    if (ring.h.empty())
        throw std::logic_error("monodromy_phase: ring carries no conformal weights");
    int k = ring.pic_product(s, x);
    return mod1(ring.h[k] - ring.h[s] - ring.h[x]);
}

std::vector<Rat> monodromy_grading(const FusionRing& ring, int current, long order)
{
    const int B = ring.size();
    std::vector<Rat> phi(B);
    for (int x = 0; x < B; ++x)
        phi[x] = monodromy_phase(ring, current, x);
    // Multiplicativity along powers of the current.
    int s = ring.unit;
    for (long k = 0; k < order; ++k) {
        for (int x = 0; x < B; ++x)
            if (mod1(monodromy_phase(ring, s, x) - Rat(k) * phi[x]) != 0)
                throw std::logic_error("monodromy_grading: phases are not multiplicative");
        s = ring.pic_product(s, current);
    }
    if (s != ring.unit)
        throw std::logic_error("monodromy_grading: current order mismatch");
    return phi;
}

ExtendedRing extend(const ExtensionDatum& datum)
{
    const FusionRing& V = datum.base;
    const long M = datum.disc.M;
    const long step = datum.disc.reduce(datum.step);
    const long g = gcd_l(step == 0 ? M : step, M);
    const long order = M / g; // |N/L|

    auto phi = monodromy_grading(V, datum.current, order);

    // Powers of the extending current.
    std::vector<int> powers(order);
    powers[0] = V.unit;
    for (long k = 1; k < order; ++k)
        powers[k] = V.pic_product(powers[k - 1], datum.current);

    // Local pairs (x, a): phi_x + (a|step)/M integral.
    struct Pair {
        int x;
        long a;
        auto operator<=>(const Pair&) const = default;
    };
    std::vector<Pair> local;
    for (long a = 0; a < M; ++a)
        for (int x = 0; x < V.size(); ++x)
            if (mod1(phi[x] + datum.disc.pairing(a, step)) == 0)
                local.push_back({x, a});

    auto act = [&](const Pair& p, long k) {
        return Pair{V.pic_product(powers[k % order], p.x),
                    datum.disc.reduce(p.a + k * step)};
    };
    auto canonical = [&](const Pair& p) {
        Pair best = p;
        for (long k = 1; k < order; ++k) {
            Pair q = act(p, k);
            if (std::tie(q.a, q.x) < std::tie(best.a, best.x))
                best = q;
        }
        return best;
    };

    // Orbit basis, checking the action is free on local pairs.
    std::map<Pair, int> index;
    std::vector<Pair> reps;
    for (const auto& p : local) {
        std::vector<Pair> orbit;
        for (long k = 0; k < order; ++k)
            orbit.push_back(act(p, k));
        std::sort(orbit.begin(), orbit.end());
        if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end())
            throw std::logic_error("extend: current action on local pairs is not free");
        Pair c = canonical(p);
        if (!index.count(c)) {
            index[c] = static_cast<int>(reps.size());
            reps.push_back(c);
        }
    }
    std::sort(reps.begin(), reps.end(),
              [](const Pair& a, const Pair& b) { return std::tie(a.a, a.x) < std::tie(b.a, b.x); });
    index.clear();
    for (int i = 0; i < static_cast<int>(reps.size()); ++i)
        index[reps[i]] = i;

    if (static_cast<long>(reps.size()) * order != static_cast<long>(local.size()))
        throw std::logic_error("extend: orbit count mismatch");

    ExtendedRing E;
    E.disc = datum.disc;
    E.step = step;
    E.rep.reserve(reps.size());
    for (const auto& p : reps)
        E.rep.emplace_back(p.x, p.a);

    FusionRing& R = E.ring;
    for (const auto& p : reps) {
        std::ostringstream os;
        os << "(" << V.labels[p.x] << "," << p.a << ")";
        R.labels.push_back(os.str());
    }
    R.unit = index.at(canonical({V.unit, 0}));
    if (!V.h.empty())
        for (const auto& p : reps)
            R.h.push_back(V.h[p.x] + datum.disc.q(p.a) / 2);

    const int B = static_cast<int>(reps.size());
    for (int i = 0; i < B; ++i)
        for (int j = i; j < B; ++j) {
            std::map<int, Int> out;
            long a = reps[i].a + reps[j].a;
            for (const auto& [z, c] : V.product(reps[i].x, reps[j].x))
                out[index.at(canonical({z, datum.disc.reduce(a)}))] += c;
            R.constants[{i, j}] = std::move(out);
        }

    // Invertible classes.
    for (int e = 0; e < B; ++e)
        for (int f = 0; f < B; ++f) {
            const auto& p = R.product(e, f);
            if (p.size() == 1 && p.begin()->first == R.unit && p.begin()->second == 1) {
                R.pic.push_back(e);
                break;
            }
        }

    // Orthogonal subgroup N'/L = {a : a * step = 0 mod M}, generated by M/g.
    E.nprime_step = M / g;
    for (long k = 0; k < g; ++k)
        E.lattice_family.push_back(
            index.at(canonical({V.unit, datum.disc.reduce(k * E.nprime_step)})));

    return E;
}

DeextensionResult deextend(const ExtendedRing& ext)
{
    const FusionRing& E = ext.ring;
    const long M = ext.disc.M;
    const long np = ext.nprime_step;
    const long np_size = static_cast<long>(ext.lattice_family.size()); // |N'/L|
    if (np_size == 0 || ext.disc.reduce(np * np_size) != 0)
        throw std::invalid_argument("deextend: inconsistent lattice family");
    // Dual subgroup N/L = {c : c * np = 0 mod M}.
    const long n_gen = M / gcd_l(np == 0 ? M : np, M);

    struct Pair {
        int x;
        long c;
        auto operator<=>(const Pair&) const = default;
    };
    // (O, c) is local when a0(O) + c lies in N/L.
    auto is_local = [&](int x, long c) {
        return ext.disc.reduce(ext.rep[x].second + c) % n_gen == 0;
    };
    auto act = [&](const Pair& p, long k) {
        return Pair{E.pic_product(ext.lattice_family[k % np_size], p.x),
                    ext.disc.reduce(p.c - k * np)};
    };
    auto canonical = [&](const Pair& p) {
        Pair best = p;
        for (long k = 1; k < np_size; ++k) {
            Pair q = act(p, k);
            if (std::tie(q.c, q.x) < std::tie(best.c, best.x))
                best = q;
        }
        return best;
    };

    std::vector<Pair> reps;
    std::map<Pair, int> index;
    for (long c = 0; c < M; ++c)
        for (int x = 0; x < E.size(); ++x) {
            if (!is_local(x, c))
                continue;
            std::vector<Pair> orbit;
            for (long k = 0; k < np_size; ++k)
                orbit.push_back(act({x, c}, k));
            std::sort(orbit.begin(), orbit.end());
            if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end())
                throw std::logic_error("deextend: lattice action is not free");
            Pair cano = canonical({x, c});
            if (!index.count(cano)) {
                index[cano] = static_cast<int>(reps.size());
                reps.push_back(cano);
            }
        }
    std::sort(reps.begin(), reps.end(),
              [](const Pair& a, const Pair& b) { return std::tie(a.c, a.x) < std::tie(b.c, b.x); });
    index.clear();
    for (int i = 0; i < static_cast<int>(reps.size()); ++i)
        index[reps[i]] = i;

    DeextensionResult out;
    FusionRing& R = out.ring;
    for (const auto& p : reps) {
        std::ostringstream os;
        os << "(" << E.labels[p.x] << ";" << p.c << ")";
        R.labels.push_back(os.str());
        out.rep.emplace_back(p.x, p.c);
    }
    R.unit = index.at(canonical({E.unit, 0}));
    if (!E.h.empty())
        for (const auto& p : reps)
            R.h.push_back(E.h[p.x] + ext.disc.q(p.c) / 2);

    const int B = static_cast<int>(reps.size());
    for (int i = 0; i < B; ++i)
        for (int j = i; j < B; ++j) {
            std::map<int, Int> cs;
            long c = reps[i].c + reps[j].c;
            for (const auto& [z, m] : E.product(reps[i].x, reps[j].x))
                cs[index.at(canonical({z, ext.disc.reduce(c)}))] += m;
            R.constants[{i, j}] = std::move(cs);
        }

    for (int e = 0; e < B; ++e)
        for (int f = 0; f < B; ++f) {
            const auto& p = R.product(e, f);
            if (p.size() == 1 && p.begin()->first == R.unit && p.begin()->second == 1) {
                R.pic.push_back(e);
                break;
            }
        }
    return out;
}

bool is_isomorphism(const FusionRing& A, const FusionRing& B, const std::vector<int>& p)
{
    const int n = A.size();
    if (B.size() != n || static_cast<int>(p.size()) != n)
        return false;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (p[i] < 0 || p[i] >= n || seen[p[i]])
            return false;
        seen[p[i]] = true;
    }
    if (p[A.unit] != B.unit)
        return false;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::map<int, Int> lhs;
            for (const auto& [k, c] : A.product(i, j))
                lhs[p[k]] = c;
            if (lhs != B.product(p[i], p[j]))
                return false;
        }
    return true;
}

namespace {

// Permutation-invariant fingerprint of a basis element.
std::string fingerprint(const FusionRing& R, int x)
{
    std::vector<std::string> rows;
    for (int y = 0; y < R.size(); ++y) {
        std::vector<std::string> vals;
        for (const auto& [z, c] : R.product(x, y))
            vals.push_back(c.str() + (z == x ? "s" : "") + (z == y ? "t" : "") +
                           (z == R.unit ? "u" : ""));
        std::sort(vals.begin(), vals.end());
        std::string row = (y == x ? "d:" : "o:");
        for (auto& v : vals)
            row += v + ",";
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    std::string out = x == R.unit ? "U|" : "";
    for (auto& r : rows)
        out += r + ";";
    return out;
}

bool backtrack(const FusionRing& A, const FusionRing& B, std::vector<int>& p,
               std::vector<bool>& used, int i,
               const std::vector<std::string>& fa, const std::vector<std::string>& fb)
{
    const int n = A.size();
    if (i == n)
        return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || fa[i] != fb[cand])
            continue;
        if ((i == A.unit) != (cand == B.unit))
            continue;
        p[i] = cand;
        used[cand] = true;
        bool ok = true;
        for (int j = 0; j <= i && ok; ++j) {
            const auto& pa = A.product(i, j);
            const auto& pb = B.product(p[i], p[j]);
            // Totals must agree; assigned targets must map correctly.
            Int ta = 0, tb = 0;
            for (const auto& [k, c] : pa)
                ta += c;
            for (const auto& [k, c] : pb)
                tb += c;
            if (ta != tb) {
                ok = false;
                break;
            }
            for (const auto& [k, c] : pa)
                if (k <= i) {
                    auto it = pb.find(p[k]);
                    if (it == pb.end() || it->second != c) {
                        ok = false;
                        break;
                    }
                }
        }
        if (ok && backtrack(A, B, p, used, i + 1, fa, fb))
            return true;
        used[cand] = false;
        p[i] = -1;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const FusionRing& A, const FusionRing& B)
{
    const int n = A.size();
    if (B.size() != n)
        return std::nullopt;
    std::vector<std::string> fa(n), fb(n);
    for (int i = 0; i < n; ++i) {
        fa[i] = fingerprint(A, i);
        fb[i] = fingerprint(B, i);
    }
    {
        auto sa = fa, sb = fb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }
    std::vector<int> p(n, -1);
    std::vector<bool> used(n, false);
    if (!backtrack(A, B, p, used, 0, fa, fb))
        return std::nullopt;
    if (!is_isomorphism(A, B, p))
        throw std::logic_error("find_isomorphism: internal verification failed");
    return p;
}

} // namespace wfusion::ringkit
