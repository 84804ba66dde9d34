#include "wfusion/ringkit.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wfusion;
using namespace wfusion::ringkit;

TEST_CASE("group ring of Z_M is consistent and has the right grading")
{
    for (long M : {2L, 3L, 5L, 8L}) {
        auto g = group_ring(M);
        g.check_consistency();
        CHECK(g.size() == M);
        CHECK(Int(g.pic.size()) == M);
        for (long a = 0; a < M; ++a) {
            CHECK(g.h[a] == Rat(a * a) / (2 * M));
            for (long b = 0; b < M; ++b)
                CHECK(g.pic_product(static_cast<int>(a), static_cast<int>(b)) ==
                      (a + b) % M);
        }
    }
}

TEST_CASE("monodromy phases of the lattice ring equal the discriminant pairing")
{
    const long M = 6;
    auto g = group_ring(M);
    DiscriminantForm disc{M};
    for (long s = 0; s < M; ++s)
        for (long x = 0; x < M; ++x)
            CHECK(mod1(monodromy_phase(g, static_cast<int>(s), static_cast<int>(x))) ==
                  disc.pairing(s, x));
}

TEST_CASE("monodromy grading is a character of the cyclic current group")
{
    auto g = group_ring(8);
    auto phases = monodromy_grading(g, 2, 4); // current g^2 of order 4
    for (long x = 0; x < 8; ++x)
        CHECK(phases[x] == mod1(Rat(2 * x) / 8));
}

TEST_CASE("extending a lattice ring by a full isotropic subgroup")
{
    // sqrt(4) Z extended by its order-2 isotropic subgroup {0, 2}:
    // q(2) = 4/4 = 1, two local cosets {0, 2}, free orbit, one class per
    // orthogonal coset.
    ExtensionDatum datum;
    datum.base = FusionRing{{"1"}, 0, {0}, {}, {Rat(0)}};
    datum.base.constants[{0, 0}] = {{0, 1}};
    datum.disc = DiscriminantForm{4};
    datum.step = 2;
    datum.current = 0;
    auto ext = extend(datum);
    ext.ring.check_consistency();
    // The extension is the self-dual lattice Z: a single simple module.
    CHECK(ext.ring.size() == 1);
    CHECK(ext.nprime_step == 2);

    auto back = deextend(ext);
    back.ring.check_consistency();
    CHECK(back.ring.size() == 1); // recovers the base, not base x lattice
}

TEST_CASE("trivial step de-extends to the same ring")
{
    ExtensionDatum datum;
    datum.base = group_ring(3, true);
    datum.disc = DiscriminantForm{5};
    datum.step = 0;
    datum.current = 0;
    auto ext = extend(datum);
    CHECK(ext.ring.size() == 15); // nothing identified when the step is 0
    auto back = deextend(ext);
    CHECK(back.ring.size() == 3); // the base comes back
    CHECK(find_isomorphism(back.ring, datum.base).has_value());
}

TEST_CASE("isomorphism search finds relabelings and rejects mismatches")
{
    auto a = group_ring(4, false);
    // Relabel the basis by the permutation x -> 3x mod 4 (a group
    // automorphism), transported on the structure constants.
    FusionRing b = a;
    std::vector<int> perm{0, 3, 2, 1};
    b.constants.clear();
    for (const auto& [key, prod] : a.constants) {
        auto i = perm[key.first], j = perm[key.second];
        auto& dst = b.constants[std::minmax(i, j)];
        for (const auto& [k, m] : prod)
            dst[perm[k]] = m;
    }
    b.h.clear();
    auto p = find_isomorphism(a, b);
    REQUIRE(p.has_value());
    CHECK(is_isomorphism(a, b, *p));

    CHECK_FALSE(find_isomorphism(a, group_ring(5, false)).has_value());
    // Z_4 and Z_2 x Z_2 have the same size but different rings.
    FusionRing klein{{"00", "01", "10", "11"}, 0, {0, 1, 2, 3}, {}, {}};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            klein.constants[{i, j}] = {{i ^ j, 1}};
    klein.check_consistency();
    CHECK_FALSE(find_isomorphism(a, klein).has_value());
}
