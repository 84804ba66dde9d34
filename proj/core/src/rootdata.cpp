#include "wfusion/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace wfusion::rootdata {

std::vector<AffineWeight> dominant_weights(int r, long n)
{
    if (r < 1 || n < 0)
        throw std::invalid_argument("dominant_weights: need r >= 1, n >= 0");
    std::vector<AffineWeight> out;
    std::vector<long> cur(r, 0);
    // Enumerate compositions of n into r parts, lexicographically.
    auto rec = [&](auto&& self, int pos, long rest) -> void {
        if (pos == r - 1) {
            cur[pos] = rest;
            out.push_back(AffineWeight{cur});
            return;
        }
        for (long a = 0; a <= rest; ++a) {
            cur[pos] = a;
            self(self, pos + 1, rest - a);
        }
    };
    rec(rec, 0, n);
    return out;
}

Rat inner_product(const FiniteWeight& x, const FiniteWeight& y, int r)
{
    if (static_cast<int>(x.size()) != r - 1 || static_cast<int>(y.size()) != r - 1)
        throw std::invalid_argument("inner_product: rank mismatch");
    Rat s = 0;
    for (int i = 1; i <= r - 1; ++i)
        for (int j = 1; j <= r - 1; ++j) {
            if (x[i - 1] == 0 || y[j - 1] == 0)
                continue;
            Rat f = Rat(std::min(i, j)) - Rat(static_cast<long>(i) * j, r);
            s += Rat(x[i - 1]) * Rat(y[j - 1]) * f;
        }
    return s;
}

Rat inner_with_rho(const FiniteWeight& x, int r)
{
    // (w_i | rho) = i(r-i)/2.
    Rat s = 0;
    for (int i = 1; i <= r - 1; ++i)
        s += Rat(x[i - 1]) * Rat(static_cast<long>(i) * (r - i), 2);
    return s;
}

int pi_pq(const AffineWeight& lambda)
{
    int r = lambda.rank();
    long s = 0;
    for (int i = 1; i < r; ++i)
        s += static_cast<long>(i) * lambda.labels[i];
    long m = s % r;
    if (m < 0)
        m += r;
    return static_cast<int>(m);
}

AffineWeight sigma(const AffineWeight& lambda, long k)
{
    int r = lambda.rank();
    std::vector<long> out(r);
    long kk = ((k % r) + r) % r;
    for (int i = 0; i < r; ++i)
        out[(i + kk) % r] = lambda.labels[i];
    return AffineWeight{std::move(out)};
}

Rat conformal_dim_prinw(const AffineWeight& lambda, long n)
{
    int r = lambda.rank();
    FiniteWeight lam = lambda.finite_part();
    // k + r = (r+n)/(r+1)
    Rat kpr = Rat(r + n, r + 1);
    Rat quad = inner_product(lam, lam, r) + 2 * inner_with_rho(lam, r);
    return quad / (2 * kpr) - inner_with_rho(lam, r);
}

Rat conformal_dim_affine(const AffineWeight& lambda, long n)
{
    int r = lambda.rank();
    FiniteWeight lam = lambda.finite_part();
    Rat quad = inner_product(lam, lam, r) + 2 * inner_with_rho(lam, r);
    return quad / (2 * Rat(n + r));
}

YoungDiagram YoungDiagram::transpose() const
{
    YoungDiagram t;
    if (column_heights.empty())
        return t;
    long rows = column_heights.front();
    for (long i = 0; i < rows; ++i) {
        long len = 0;
        for (long h : column_heights)
            if (h > i)
                ++len;
        t.column_heights.push_back(len);
    }
    return t;
}

YoungDiagram to_young(const AffineWeight& lambda)
{
    int r = lambda.rank();
    YoungDiagram d;
    for (int i = r - 1; i >= 1; --i)
        for (long c = 0; c < lambda.labels[i]; ++c)
            d.column_heights.push_back(i);
    return d;
}

AffineWeight from_young(const YoungDiagram& d, int r, long m)
{
    std::vector<long> labels(r, 0);
    for (long h : d.column_heights) {
        if (h < 0 || h > r)
            throw std::invalid_argument("from_young: column height out of range");
        if (h == r || h == 0)
            continue; // full and empty columns are trivial
        ++labels[h];
    }
    long used = 0;
    for (int i = 1; i < r; ++i)
        used += labels[i];
    if (used > m)
        throw std::invalid_argument("from_young: diagram does not fit at this level");
    labels[0] = m - used;
    return AffineWeight{std::move(labels)};
}

AffineWeight transpose_weight(const AffineWeight& lambda)
{
    long m = lambda.level();
    int r = lambda.rank();
    if (m < 1)
        throw std::invalid_argument("transpose_weight: level must be positive");
    YoungDiagram t = to_young(lambda).transpose();
    return from_young(t, static_cast<int>(m), r);
}

long box_count(const AffineWeight& lambda)
{
    return to_young(lambda).boxes();
}

} // namespace wfusion::rootdata
