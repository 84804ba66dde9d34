#pragma once

// Generic fusion ring machinery: a sparse structure-constant container,
// cyclic discriminant forms of rank-one lattices, simple-current extension
// and de-extension at the level of Grothendieck rings, monodromy gradings,
// and a small ring-isomorphism search.

#include "wfusion/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wfusion::ringkit {

// Commutative unital based ring with non-negative integer structure
// constants.  Constants are stored sparsely for i <= j.
struct FusionRing {
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> pic; // invertible basis elements (unit first when cyclic)
    std::map<std::pair<int, int>, std::map<int, Int>> constants;
    // Conformal weights of the basis elements, exact rationals; empty when
    // not available.  Used to derive monodromy phases by balancing.
    std::vector<Rat> h;

    int size() const { return static_cast<int>(labels.size()); }
    const std::map<int, Int>& product(int i, int j) const;
    // Product of an invertible element with any element: the unique k with
    // N_{ij}^k = 1.
    int pic_product(int i, int j) const;
    void check_consistency() const; // unit, commutativity, associativity
};

// Group ring Z[Z_M] with basis g^0..g^{M-1}.  When lattice_weights is set
// the basis element a carries conformal weight a^2/(2M), matching the
// simple modules of the lattice vertex algebra of sqrt(M) Z.
FusionRing group_ring(long M, bool lattice_weights = true);

// Discriminant form of the rank-one lattice sqrt(M) Z: the cyclic group
// Z_M with pairing (a|b) = ab/M mod 1 and quadratic form q(a) = a^2/M
// mod 2.
struct DiscriminantForm {
    long M = 1;
    long reduce(long a) const { return ((a % M) + M) % M; }
    Rat pairing(long a, long b) const { return mod1(Rat(a) * Rat(b) / Rat(M)); }
    Rat q(long a) const { return Rat(a) * Rat(a) / Rat(M); }
};

// Monodromy phase of the invertible element s with x, from balancing of
// conformal weights: h(s*x) - h(s) - h(x) mod 1.  Requires ring.h.
Rat monodromy_phase(const FusionRing& ring, int s, int x);

// Character table of the basis under a cyclic group of simple currents
// generated by `current`: phases phi_x(current^k) = k * phi_x(current)
// mod 1.  Throws if monodromy fails to be multiplicative along the orbit.
std::vector<Rat> monodromy_grading(const FusionRing& ring, int current, long order);

// Datum for a simple-current extension of V (x) V_L with L = sqrt(M') Z of
// cyclic discriminant Z_M.  The extending group N/L is generated by `step`
// in Z_M, paired with the invertible element `current` of the base ring.
struct ExtensionDatum {
    FusionRing base;
    DiscriminantForm disc;
    long step = 0;
    int current = 0;
};

// Result of an extension, with enough provenance to invert it.
struct ExtendedRing {
    FusionRing ring;
    DiscriminantForm disc;
    // Representative pair (base index, coset) of each orbit basis element.
    std::vector<std::pair<int, long>> rep;
    long step = 0;          // generator of N/L
    long nprime_step = 0;   // generator of the orthogonal subgroup N'/L
    // Basis indices of the images of (vacuum, k * nprime_step).
    std::vector<int> lattice_family;
};

// Grothendieck ring of the simple-current extension of base (x) V_L.
// Basis: orbits of pairs (x, a) local for the extending group; throws if
// the group fails to act freely on local pairs.
ExtendedRing extend(const ExtensionDatum& datum);

// Inverse operation: recovers the Grothendieck ring of the un-extended
// theory from an extended ring plus its lattice data.  rep/lattice_family
// play the role of the monodromy bookkeeping.
struct DeextensionResult {
    FusionRing ring;
    std::vector<std::pair<int, long>> rep; // (extended index, coset)
};

DeextensionResult deextend(const ExtendedRing& ext);

// Permutation p with B.constants = A.constants transported along p.
bool is_isomorphism(const FusionRing& A, const FusionRing& B, const std::vector<int>& p);

// Backtracking search for a ring isomorphism mapping unit to unit.
std::optional<std::vector<int>> find_isomorphism(const FusionRing& A, const FusionRing& B);

} // namespace wfusion::ringkit
