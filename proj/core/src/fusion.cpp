#include "wfusion/fusion.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wfusion::fusion {

namespace {

// Dynkin labels of the positive roots of sl_r.
std::vector<FiniteWeight> positive_roots(int r)
{
    // alpha_i has labels given by the i-th row of the Cartan matrix.
    auto simple = [r](int i) {
        FiniteWeight v(r - 1, 0);
        v[i] = 2;
        if (i > 0)
            v[i - 1] = -1;
        if (i < r - 2)
            v[i + 1] = -1;
        return v;
    };
    std::vector<FiniteWeight> roots;
    for (int i = 0; i < r - 1; ++i) {
        FiniteWeight acc(r - 1, 0);
        for (int j = i; j < r - 1; ++j) {
            FiniteWeight a = simple(j);
            for (int t = 0; t < r - 1; ++t)
                acc[t] += a[t];
            roots.push_back(acc);
        }
    }
    return roots;
}

// Orthogonal-basis partial sums: t_i = sum_{j >= i} d_j, i = 1..r (t_r = 0).
std::vector<long> eps_coords(const FiniteWeight& d)
{
    int r = static_cast<int>(d.size()) + 1;
    std::vector<long> t(r, 0);
    for (int i = r - 2; i >= 0; --i)
        t[i] = t[i + 1] + d[i];
    return t;
}

FiniteWeight labels_from_eps(const std::vector<long>& t)
{
    FiniteWeight d(t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        d[i] = t[i] - t[i + 1];
    return d;
}

// Dominant representative of the Weyl orbit (unshifted action).
FiniteWeight dominant_rep(const FiniteWeight& d)
{
    auto t = eps_coords(d);
    std::sort(t.begin(), t.end(), std::greater<long>());
    return labels_from_eps(t);
}

long inversion_parity(const std::vector<long>& t)
{
    long inv = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] < t[j])
                ++inv;
    return inv & 1;
}

} // namespace

std::map<FiniteWeight, Int> dominant_weight_multiplicities(const FiniteWeight& mu, int r)
{
    if (static_cast<int>(mu.size()) != r - 1)
        throw std::invalid_argument("dominant_weight_multiplicities: rank mismatch");
    for (long d : mu)
        if (d < 0)
            throw std::invalid_argument("dominant_weight_multiplicities: mu not dominant");
    if (r == 1)
        return {{FiniteWeight{}, Int(1)}};

    auto roots = positive_roots(r);
    // Root-basis coefficients of mu - w are bounded by (mu | w_i).
    std::vector<long> bound(r - 1, 0);
    for (int i = 0; i < r - 1; ++i) {
        FiniteWeight wi(r - 1, 0);
        wi[i] = 1;
        bound[i] = static_cast<long>(rat_floor(rootdata::inner_product(mu, wi, r)));
        if (bound[i] < 0)
            bound[i] = 0;
    }

    // Candidate dominant weights mu - sum_i c_i alpha_i, grouped by height.
    struct Cand {
        FiniteWeight w;
        long ht;
    };
    std::vector<Cand> cands;
    std::vector<long> c(r - 1, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == r - 1) {
            FiniteWeight w = mu;
            // labels of sum c_i alpha_i: apply the Cartan matrix to c.
            for (int i = 0; i < r - 1; ++i) {
                long v = 2 * c[i];
                if (i > 0)
                    v -= c[i - 1];
                if (i < r - 2)
                    v -= c[i + 1];
                w[i] -= v;
            }
            for (long d : w)
                if (d < 0)
                    return;
            long ht = 0;
            for (long x : c)
                ht += x;
            cands.push_back({std::move(w), ht});
            return;
        }
        for (c[pos] = 0; c[pos] <= bound[pos]; ++c[pos])
            self(self, pos + 1);
        c[pos] = 0;
    };
    rec(rec, 0);
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.ht < b.ht; });

    std::map<FiniteWeight, Int> mult;
    FiniteWeight rho(r - 1, 1);
    auto norm_sh = [&](const FiniteWeight& w) {
        FiniteWeight ws(w);
        for (int i = 0; i < r - 1; ++i)
            ws[i] += 1;
        return rootdata::inner_product(ws, ws, r);
    };
    Rat top = norm_sh(mu);

    for (const auto& cand : cands) {
        if (cand.ht == 0) {
            mult[cand.w] = 1;
            continue;
        }
        Rat denom = top - norm_sh(cand.w);
        if (denom == 0)
            continue; // not a weight of V_mu
        Rat sum = 0;
        for (const auto& alpha : roots) {
            for (long k = 1;; ++k) {
                FiniteWeight u = cand.w;
                for (int i = 0; i < r - 1; ++i)
                    u[i] += k * alpha[i];
                auto it = mult.find(dominant_rep(u));
                // All weights above cand have already been processed, so a
                // missing entry means multiplicity zero.  Heights decrease
                // strictly with k, giving the termination bound.
                if (k > cand.ht)
                    break;
                if (it != mult.end() && it->second != 0)
                    sum += rootdata::inner_product(u, alpha, r) * Rat(it->second);
            }
        }
        Rat m = 2 * sum / denom;
        if (!is_integer(m) || m < 0)
            throw std::logic_error("Freudenthal recursion produced a non-integer");
        auto v = rat_num(m);
        if (v != 0)
            mult[cand.w] = v;
    }
    return mult;
}

std::map<FiniteWeight, Int> weight_multiplicities(const FiniteWeight& mu, int r)
{
    auto dom = dominant_weight_multiplicities(mu, r);
    std::map<FiniteWeight, Int> all;
    for (const auto& [w, m] : dom) {
        auto t = eps_coords(w);
        std::sort(t.begin(), t.end());
        do {
            all[labels_from_eps(t)] += m;
        } while (std::next_permutation(t.begin(), t.end()));
    }
    return all;
}

std::map<FiniteWeight, Int> tensor_multiplicities(const FiniteWeight& lam,
                                                  const FiniteWeight& mu, int r)
{
    if (lam.size() != mu.size() || static_cast<int>(lam.size()) != r - 1)
        throw std::invalid_argument("tensor_multiplicities: rank mismatch");
    auto wts = weight_multiplicities(mu, r);
    std::map<FiniteWeight, Int> out;
    for (const auto& [nu, m] : wts) {
        FiniteWeight w(lam);
        for (int i = 0; i < r - 1; ++i)
            w[i] += nu[i] + 1; // shift by rho
        auto t = eps_coords(w);
        bool wall = false;
        for (std::size_t i = 0; i < t.size() && !wall; ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                if (t[i] == t[j]) {
                    wall = true;
                    break;
                }
        if (wall)
            continue;
        long par = inversion_parity(t);
        std::sort(t.begin(), t.end(), std::greater<long>());
        FiniteWeight target = labels_from_eps(t);
        for (auto& d : target)
            d -= 1;
        out[target] += (par ? -m : m);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else {
            if (it->second < 0)
                throw std::logic_error("negative tensor multiplicity");
            ++it;
        }
    }
    return out;
}

namespace {

// Reflect the rho-shifted affine labels b (summing to n + r) into the
// interior of the dominant alcove.  Returns the sign, or 0 when the weight
// lies on a wall.  b is overwritten with the dominant representative.
int affine_reflect(std::vector<long>& b, int* iterations = nullptr)
{
    int r = static_cast<int>(b.size());
    int sign = 1;
    for (int guard = 0; guard < 100000; ++guard) {
        int neg = -1;
        for (int i = 0; i < r; ++i) {
            if (b[i] == 0)
                return 0;
            if (b[i] < 0) {
                neg = i;
                break;
            }
        }
        if (neg < 0) {
            if (iterations)
                *iterations = guard;
            return sign;
        }
        long v = b[neg];
        if (r == 2) {
            // A_1^(1): the two labels are linked by an edge of weight 2.
            b[neg] = -v;
            b[1 - neg] += 2 * v;
        } else {
            b[neg] = -v;
            b[(neg + 1) % r] += v;
            b[(neg + r - 1) % r] += v;
        }
        sign = -sign;
    }
    throw std::logic_error("affine_reflect failed to terminate");
}

} // namespace

std::map<AffineWeight, Int> affine_fusion(const AffineWeight& lam, const AffineWeight& mu,
                                          long n)
{
    int r = lam.rank();
    if (mu.rank() != r)
        throw std::invalid_argument("affine_fusion: rank mismatch");
    if (lam.level() != n || mu.level() != n)
        throw std::invalid_argument("affine_fusion: weights not at the stated level");
    for (long a : lam.labels)
        if (a < 0)
            throw std::invalid_argument("affine_fusion: lam not dominant");
    for (long a : mu.labels)
        if (a < 0)
            throw std::invalid_argument("affine_fusion: mu not dominant");

    auto fin = tensor_multiplicities(lam.finite_part(), mu.finite_part(), r);
    std::map<AffineWeight, Int> out;
    for (const auto& [nu, c] : fin) {
        long lvl = 0;
        for (long d : nu)
            lvl += d;
        std::vector<long> b(r);
        b[0] = n - lvl + 1;
        for (int i = 1; i < r; ++i)
            b[i] = nu[i - 1] + 1;
        int sign = affine_reflect(b);
        if (sign == 0)
            continue;
        for (auto& x : b)
            x -= 1;
        out[AffineWeight{b}] += sign * c;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else {
            if (it->second < 0)
                throw std::logic_error("negative fusion multiplicity");
            ++it;
        }
    }
    return out;
}

int SMatrix::index_of(const AffineWeight& w) const
{
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it == basis.end() || !(*it == w))
        throw std::invalid_argument("SMatrix::index_of: weight not in basis");
    return static_cast<int>(it - basis.begin());
}

SMatrix smatrix_affine(int r, long n)
{
    SMatrix sm;
    sm.r = r;
    sm.n = n;
    sm.basis = rootdata::dominant_weights(r, n);
    std::sort(sm.basis.begin(), sm.basis.end());
    const int B = static_cast<int>(sm.basis.size());
    const double kappa = static_cast<double>(n + r);

    // Traceless orthogonal coordinates of lambda + rho.
    auto coords = [&](const AffineWeight& w) {
        FiniteWeight d = w.finite_part();
        for (auto& x : d)
            x += 1;
        auto t = eps_coords(d);
        double mean = 0;
        for (long x : t)
            mean += static_cast<double>(x);
        mean /= static_cast<double>(r);
        std::vector<double> out(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            out[i] = static_cast<double>(t[i]) - mean;
        return out;
    };
    std::vector<std::vector<double>> xs(B);
    for (int i = 0; i < B; ++i)
        xs[i] = coords(sm.basis[i]);

    // Normalization i^{r(r-1)/2} (n+r)^{-(r-1)/2} r^{-1/2}.
    Cplx pref = std::pow(Cplx(0.0, 1.0), (r * (r - 1)) / 2);
    pref *= std::pow(kappa, -(r - 1) / 2.0) / std::sqrt(static_cast<double>(r));

    // Permutations of 1..r with signs.
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i)
        perm[i] = i;
    std::vector<std::pair<std::vector<int>, int>> perms;
    do {
        long inv = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[i] > perm[j])
                    ++inv;
        perms.emplace_back(perm, (inv & 1) ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    sm.S.assign(B, std::vector<Cplx>(B));
    const double twopi = 2.0 * std::numbers::pi;
    for (int i = 0; i < B; ++i)
        for (int j = i; j < B; ++j) {
            Cplx acc(0.0, 0.0);
            for (const auto& [p, sgn] : perms) {
                double dot = 0;
                for (int t = 0; t < r; ++t)
                    dot += xs[i][p[t]] * xs[j][t];
                acc += static_cast<double>(sgn) *
                       std::exp(Cplx(0.0, -twopi * dot / kappa));
            }
            sm.S[i][j] = sm.S[j][i] = pref * acc;
        }
    return sm;
}

std::map<AffineWeight, Int> verlinde_fusion(const SMatrix& sm, const AffineWeight& lam,
                                            const AffineWeight& mu, double tol,
                                            double* max_residual)
{
    const int B = static_cast<int>(sm.basis.size());
    std::vector<long> vac(sm.r, 0);
    vac[0] = sm.n;
    const int v = sm.index_of(AffineWeight{vac});
    const int i = sm.index_of(lam);
    const int j = sm.index_of(mu);

    std::map<AffineWeight, Int> out;
    double worst = 0.0;
    for (int k = 0; k < B; ++k) {
        Cplx acc(0.0, 0.0);
        for (int t = 0; t < B; ++t)
            acc += sm.S[i][t] * sm.S[j][t] * std::conj(sm.S[k][t]) / sm.S[v][t];
        double re = acc.real();
        double rounded = std::round(re);
        double resid = std::max(std::abs(re - rounded), std::abs(acc.imag()));
        worst = std::max(worst, resid);
        if (resid >= tol)
            throw std::runtime_error("verlinde_fusion: rounding residual " +
                                     std::to_string(resid) + " exceeds tolerance");
        long m = static_cast<long>(rounded);
        if (m < 0)
            throw std::runtime_error("verlinde_fusion: negative coefficient");
        if (m != 0)
            out[sm.basis[k]] = m;
    }
    if (max_residual)
        *max_residual = worst;
    return out;
}

AffineWeight conjugate(const AffineWeight& lam)
{
    std::vector<long> out(lam.labels);
    std::reverse(out.begin() + 1, out.end());
    return AffineWeight{std::move(out)};
}

} // namespace wfusion::fusion
