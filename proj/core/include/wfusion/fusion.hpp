#pragma once

// Tensor product and fusion multiplicities for sl_r.
//
// Finite tensor products use Freudenthal weight multiplicities together
// with the signed reflection rule (Racah-Speiser).  Affine fusion at level
// n applies signed affine Weyl reflections into the level-n alcove
// (Kac-Walton).  A numeric Verlinde evaluation through the modular
// S-matrix serves as an independent cross-check.

#include "wfusion/rational.hpp"
#include "wfusion/rootdata.hpp"

#include <complex>
#include <map>
#include <vector>

namespace wfusion::fusion {

using rootdata::AffineWeight;
using rootdata::FiniteWeight;

// Multiplicities of all weights (dominant and not) of the irreducible
// sl_r module with highest weight mu.
std::map<FiniteWeight, Int> weight_multiplicities(const FiniteWeight& mu, int r);

// Multiplicities of the dominant weights only.
std::map<FiniteWeight, Int> dominant_weight_multiplicities(const FiniteWeight& mu, int r);

// Decomposition of the finite tensor product V_lam (x) V_mu into
// irreducibles.
std::map<FiniteWeight, Int> tensor_multiplicities(const FiniteWeight& lam,
                                                  const FiniteWeight& mu, int r);

// Fusion product of L(lam) and L(mu) in L_n(sl_r); lam and mu must be
// dominant at level n.
std::map<AffineWeight, Int> affine_fusion(const AffineWeight& lam,
                                          const AffineWeight& mu, long n);

using Cplx = std::complex<double>;

// Modular S-matrix of L_n(sl_r), rows and columns indexed by
// dominant_weights(r, n) in lexicographic order.
struct SMatrix {
    int r = 0;
    long n = 0;
    std::vector<AffineWeight> basis;
    std::vector<std::vector<Cplx>> S;

    int index_of(const AffineWeight& w) const;
};

SMatrix smatrix_affine(int r, long n);

// Fusion multiplicities from the Verlinde sum.  Each coefficient is
// rounded to the nearest integer; if any rounding residual reaches `tol`
// an exception is thrown.  The largest residual encountered is written to
// *max_residual when non-null.
std::map<AffineWeight, Int> verlinde_fusion(const SMatrix& sm, const AffineWeight& lam,
                                            const AffineWeight& mu, double tol = 1e-6,
                                            double* max_residual = nullptr);

// Index of the charge conjugate weight (reverse the finite labels).
AffineWeight conjugate(const AffineWeight& lam);

} // namespace wfusion::fusion
