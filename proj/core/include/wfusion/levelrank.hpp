#pragma once

// Level-rank duality: K(L_m(sl_n)) is isomorphic to the Z_m-invariant part
// of K(L_n(sl_m)) (x)_{Z[Z_m]} Z[Z_{nm}], with the isomorphism given by
// diagram transposition together with the box count.

#include "wfusion/ringkit.hpp"
#include "wfusion/rootdata.hpp"

#include <string>
#include <vector>

namespace wfusion::levelrank {

// The extended side: orbits of pairs (lambda, a) with lambda dominant for
// sl_m at level n, a mod nm, pi(lambda) = a mod m, under
// r . (lambda, a) = (sigma^r lambda, a + r n).
struct ExtendedSide {
    std::vector<std::pair<rootdata::AffineWeight, long>> basis;
    ringkit::FusionRing ring;
};

ExtendedSide extended_side(long n, long m);

// Explicit duality map lambda -> (transpose, box count mod nm) as a basis
// permutation from K(L_m(sl_n)) (sorted dominant weights) to the extended
// side; verifies it is a ring isomorphism and throws on failure.
std::vector<int> verify_duality(long n, long m);

// Checks that for every a in Z_{nm} and every dominant sl_n weight lambda
// at level m with pi(lambda) = a mod n, the branching partner shift
// (a - boxes(lambda))/n is integral.  Returns the number of pairs checked,
// which must equal m * |P^m_+(sl_n)|.
long branching_label_check(long n, long m);

} // namespace wfusion::levelrank
