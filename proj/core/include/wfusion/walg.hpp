#pragma once

// Simple modules, fusion rings and modular data of the rational subregular
// W-algebras W_sb(n, r) and the principal W-superalgebras W_spr(n, r),
// realized through simple-current extensions of W_pr(r, n) (x) lattice.

#include "wfusion/fusion.hpp"
#include "wfusion/rational.hpp"
#include "wfusion/ringkit.hpp"
#include "wfusion/rootdata.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace wfusion::walg {

using rootdata::AffineWeight;

// Raised on invalid (n, r) input; carries the violated condition.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family { Subregular, PrincipalSuper };

struct WModel {
    Family family;
    long n = 0;
    int r = 0;
    Rat level;           // level of the W-algebra itself
    Rat central_charge;  // exact
    long modulus = 1;    // order of the cyclic coset label group
    long step = 0;       // orbit shift of the coset label per sigma
    Rat eps_plus;        // norm of the Heisenberg field on the subregular side
    Rat eps_minus;       // norm on the principal-super side
    bool edge = false;   // r <= 1 closed forms
};

// Validates the rationality conditions and fills in the invariants.
// Throws ValidationError with the violated condition in the message.
WModel make_model(Family family, long n, int r);

// Simple module label: an affine sl_r weight at level n together with a
// coset label a modulo model.modulus; classes are taken modulo
// m . (lambda, a) = (sigma^m lambda, a + m * step).
struct WLabel {
    AffineWeight lambda;
    long a = 0;
    bool operator==(const WLabel&) const = default;
    auto operator<=>(const WLabel&) const = default;
};

// Canonical orbit representative: lexicographically least (a, labels).
WLabel canonical_label(const WModel& model, const WLabel& x);

// Canonical labels of all simple modules, sorted.
// |Irr| = binomial(n+r-1, n-1) for Subregular, binomial(n+r, n) for
// PrincipalSuper; edge cases r = 0 (one module) and r = 1 (lattice model)
// use a degenerate lambda of rank 1.
std::vector<WLabel> simple_modules(const WModel& model);

// Fusion ring of L_n(sl_r) on the lexicographically sorted dominant
// weights; conformal weights taken from the affine modules or from
// W_pr(r, n) under the Grothendieck ring identification.
ringkit::FusionRing affine_fusion_ring(int r, long n, bool prinw_weights = false);

// Fusion ring on the canonical labels (same order as simple_modules).
struct WRing {
    WModel model;
    std::vector<WLabel> basis;
    ringkit::ExtendedRing ext; // simple-current extension it came from
    ringkit::FusionRing ring;
    int index_of(const WLabel& x) const; // canonicalizes first
};

WRing fusion_ring(const WModel& model);

// Modular S-matrix over the canonical labels:
//   S_{(l,a),(m,b)} = e^{2 pi i a b / modulus} * sqrt(r / (modulus/r)) * S^W_{l m}
// with S^W the modular S-matrix of L_n(sl_r).
std::vector<std::vector<std::complex<double>>> smatrix(const WRing& wr);

// Label maps induced by the twisted relative semi-infinite cohomology
// functors.  xi must be an integer residue; the map vanishes (nullopt)
// unless xi = a mod n (plus direction) or xi = a mod n + r (minus).
std::optional<WLabel> hrel_plus(long n, int r, const WLabel& x, long xi);
std::optional<WLabel> hrel_minus(long n, int r, const WLabel& x, long xi);

// Exhaustive check that mapping then fusing agrees with fusing then
// mapping for all simples and residues; returns the number of compatible
// pairs checked.
long check_monoidality(long n, int r);

// The principal-super ring in its alternative parametrization: pairs over
// dominant sl_n weights at level r with coset labels mod n(n+r),
// pi = -a mod n, action m . (lambda, a) = (sigma^m lambda, a - m(n+r)).
WRing spr_alternative_ring(long n, int r);

std::string label_str(const WLabel& x);

} // namespace wfusion::walg
