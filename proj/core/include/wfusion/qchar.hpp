#pragma once

// Truncated series in rational powers of q with coefficients that are
// Laurent polynomials in rational powers of z, over exact rationals, and
// the character builders on top of them: eta powers, lattice theta sums
// over arithmetic progressions, the signed affine Weyl numerators of the
// principal W-algebra characters, and assembled characters of the
// subregular and principal-super families together with the character
// level form of the relative cohomology functor.

#include "wfusion/rational.hpp"
#include "wfusion/rootdata.hpp"

#include <map>
#include <string>

namespace wfusion::qchar {

using rootdata::AffineWeight;

// Laurent polynomial in z: exponent -> coefficient.
using ZPoly = std::map<Rat, Rat>;

struct QSeries {
    std::map<Rat, ZPoly> terms; // q exponent -> z polynomial
    Rat offset = 0;             // declared minimal possible q exponent
    Rat cap = 0;                // exponents strictly below cap are trusted

    void add_term(const Rat& qe, const Rat& ze, const Rat& c);
    void cleanup();

    QSeries& operator+=(const QSeries& o);
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const Rat& c) const;
    // Multiply by q^dq z^dz.
    QSeries shifted(const Rat& dq, const Rat& dz) const;

    // The coefficient series of z^ze.
    QSeries z_component(const Rat& ze) const;
    // All z exponents that occur.
    std::vector<Rat> z_support() const;

    bool is_zero() const;
    std::string str(int max_terms = 30) const;
};

inline QSeries operator+(QSeries a, const QSeries& b)
{
    a += b;
    return a;
}

// Equality of all terms with q exponent < min(caps, upto).
bool agree_below(const QSeries& a, const QSeries& b, const Rat& upto);

// q^{p/24} prod_{k>=1} (1 - q^k)^{p}, p any integer (negative for inverse
// powers); relative truncation order N.
QSeries eta_power(int p, long N);

// Sum over x = a0 + k*step, k in Z, of q^{x^2/(2 qden)} z^{x / zden};
// pass zden = 0 to omit the z variable.  Truncated N above the smallest
// exponent of the progression.
QSeries theta_progression(const Rat& a0, const Rat& step, const Rat& qden,
                          const Rat& zden, long N);

// Signed affine Weyl sum
//   sum_{u in W, beta in Q} eps(u) q^{|(1+r)(u(nu) + (n+r)beta) - (n+r)rho|^2
//                                      / (2 (n+r)(1+r))}
// with nu the finite part of sigma^i(lambda + rho^) in traceless
// coordinates; lambda dominant for sl_r at level n.
QSeries fkw_numerator(const AffineWeight& lambda, long n, long i, long N);

// Character of L_W(lambda) of W_pr(r, n): fkw numerator over eta^{r-1}.
QSeries char_prinw(const AffineWeight& lambda, long n, long N);

// Characters of the simple modules of W_sb(n, r) and W_spr(n, r), with z
// tracking the Heisenberg zero mode weight.
QSeries char_sb(const AffineWeight& lambda, long a, long n, long N);
QSeries char_spr(const AffineWeight& lambda, long a, long n, long N);

// Character-level relative cohomology: extracts branching functions of
// Heisenberg Fock characters of norm eps_src from chM at z exponents in
// xi0 + Z and reassembles them against Fock characters of norm eps_dst at
// shifted exponents.  Returns the zero series when no z exponent of chM is
// congruent to xi0.  Throws if the extracted branching functions fail to
// have non-negative integer coefficients.
QSeries relcoh_character(const QSeries& chM, const Rat& eps_src, const Rat& eps_dst,
                         const Rat& xi0, long N);

} // namespace wfusion::qchar
