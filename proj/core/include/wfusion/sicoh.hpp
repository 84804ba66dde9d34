#pragma once

// Desk-scale checks of relative semi-infinite cohomology for a pair of
// rank-one Heisenberg Fock modules of opposite norms b and -b, with the
// bc-like fermion pair generated by phi(z) and the derivative of phi*(z).
// The differential is the zero mode of A(z) phi*(z) with A = B^+ + B^-.
// All linear algebra is exact; ranks come from fraction-free elimination.

#include "wfusion/rational.hpp"

#include <map>
#include <vector>

namespace wfusion::sicoh {

// Basis state of the relative complex at fixed weight: partitions of
// creation modes for the two bosons and strictly increasing mode sets for
// the two fermions.  All modes are >= 1.
struct RelBasisState {
    std::vector<long> bplus;  // B^+ modes, weakly decreasing
    std::vector<long> bminus; // B^- modes, weakly decreasing
    std::vector<long> f;      // phi modes, strictly increasing
    std::vector<long> fs;     // phi* modes, strictly increasing
    long weight() const;
    long ghost() const { return static_cast<long>(fs.size()) - static_cast<long>(f.size()); }
    auto operator<=>(const RelBasisState&) const = default;
};

// Weight-w block of the complex: bases by ghost number and the matrices of
// the differential d: C^p -> C^{p+1} (rows indexed by the target basis).
struct WeightBlock {
    long weight = 0;
    Rat b;
    std::map<long, std::vector<RelBasisState>> basis;
    std::map<long, std::vector<std::vector<Rat>>> d;
};

WeightBlock build_block(const Rat& b, long w);

// Verifies d composed with d vanishes on the block.
bool check_d_squared(const WeightBlock& blk);

// Exact rank of a rational matrix (Bareiss fraction-free elimination after
// clearing denominators row by row).
long exact_rank(const std::vector<std::vector<Rat>>& M);

// Cohomology dimensions of the block by ghost number.
std::map<long, long> block_cohomology(const WeightBlock& blk);

// Cohomology of the relative complex for highest weights lambda, mu of the
// two bosons: the whole complex vanishes unless lambda + mu = 0, and then
// the weight-w block contributes delta_{w,0} delta_{p,0}.
std::map<long, long> rel_cohomology(const Rat& lambda, const Rat& mu, const Rat& b, long w);

// Koszul model: the degree-m block of C[x, y] (x) Lambda[psi, psi*] with
// D = psi* d/dy + x d/dpsi.  Returns cohomology by ghost number; exact for
// every m since D preserves the total degree.
std::map<long, long> koszul_cohomology(long m);

// Dimensions by ghost number of the degree-m Koszul block (for Kunneth
// style cross-checks).
std::map<long, long> koszul_dims(long m);

} // namespace wfusion::sicoh
