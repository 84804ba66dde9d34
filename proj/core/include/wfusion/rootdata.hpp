#pragma once

// Weight combinatorics for sl_r: affine dominant weights at a fixed level,
// inner products in the fundamental-weight basis, the cyclic diagram
// rotation, Young diagrams and transposition.

#include "wfusion/rational.hpp"

#include <vector>

namespace wfusion::rootdata {

// Finite weight of sl_r given by its r-1 Dynkin labels (may be negative).
using FiniteWeight = std::vector<long>;

// Affine weight of sl_r^(1) at a fixed level, given by r Dynkin labels
// a_0, ..., a_{r-1}.  Dominant at level n means all labels >= 0 and they
// sum to n.
struct AffineWeight {
    std::vector<long> labels;

    int rank() const { return static_cast<int>(labels.size()); }
    long level() const
    {
        long s = 0;
        for (long a : labels)
            s += a;
        return s;
    }
    FiniteWeight finite_part() const
    {
        return FiniteWeight(labels.begin() + 1, labels.end());
    }
    bool operator==(const AffineWeight&) const = default;
    auto operator<=>(const AffineWeight&) const = default;
};

// All dominant affine weights of sl_r at level n, in lexicographic order of
// the label vector.  Count is binomial(n+r-1, r-1).
std::vector<AffineWeight> dominant_weights(int r, long n);

// Inner product on the finite weight lattice in the fundamental-weight
// basis: (w_i | w_j) = min(i,j) - i*j/r  with i,j in 1..r-1.
Rat inner_product(const FiniteWeight& x, const FiniteWeight& y, int r);

// (lambda | rho) with rho = sum of fundamental weights.
Rat inner_with_rho(const FiniteWeight& x, int r);

// pi_{P/Q}: index of the weight in P/Q = Z_r, Lambda_i -> i.
// For an affine weight, computed from the finite labels.
int pi_pq(const AffineWeight& lambda);

// Diagram rotation sigma: Lambda_i -> Lambda_{i+1 mod r}.  sigma^k.
AffineWeight sigma(const AffineWeight& lambda, long k = 1);

// Conformal weight of the simple module L_W(lambda) of the principal
// W-algebra W_pr(r, n):  (lam|lam+2rho)/(2(k+r)) - (lam|rho) with
// k + r = (r+n)/(r+1), evaluated on finite parts.
Rat conformal_dim_prinw(const AffineWeight& lambda, long n);

// Conformal weight of L(lambda) in the affine model L_n(sl_r):
// (lam|lam+2rho)/(2(n+r)).
Rat conformal_dim_affine(const AffineWeight& lambda, long n);

// Young diagram as weakly decreasing column heights (no trailing zeros).
struct YoungDiagram {
    std::vector<long> column_heights;
    long boxes() const
    {
        long s = 0;
        for (long h : column_heights)
            s += h;
        return s;
    }
    YoungDiagram transpose() const;
    bool operator==(const YoungDiagram&) const = default;
};

// Affine weight sum a_i Lambda_i of sl_r at level m  ->  diagram with a_i
// columns of height i (i = 1..r-1); fits in an r x m box.
YoungDiagram to_young(const AffineWeight& lambda);

// Inverse of to_young for sl_r at level m: columns of height r are
// discarded, label a_0 makes the labels sum to m.
AffineWeight from_young(const YoungDiagram& d, int r, long m);

// Box-transpose: for a dominant lambda of sl_r at level m, transpose the
// diagram, drop columns of full height m, and read off a dominant sl_m
// weight at level r.
AffineWeight transpose_weight(const AffineWeight& lambda);

// Number of boxes of the diagram of lambda.
long box_count(const AffineWeight& lambda);

} // namespace wfusion::rootdata
