#include "wfusion/walg.hpp"

#include <doctest.h>

#include <numeric>
#include <tuple>

using namespace wfusion;
using namespace wfusion::walg;

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(make_model(Family::Subregular, -1, 2), ValidationError);
    CHECK_THROWS_AS(make_model(Family::Subregular, 1, 2), ValidationError);
    CHECK_THROWS_AS(make_model(Family::Subregular, 3, 3), ValidationError); // gcd(2,4)=2
    CHECK_THROWS_AS(make_model(Family::PrincipalSuper, 5, 5), ValidationError);
    CHECK_THROWS_AS(make_model(Family::Subregular, 3, 1), ValidationError); // odd n, r=1
    CHECK_NOTHROW(make_model(Family::Subregular, 4, 1));
    CHECK_NOTHROW(make_model(Family::Subregular, 7, 0));
    CHECK_NOTHROW(make_model(Family::PrincipalSuper, 2, 5));
    CHECK_NOTHROW(make_model(Family::Subregular, 3, 4)); // gcd(2,5)=1
}

TEST_CASE("central charges and levels")
{
    // W_sb(2, r) is L_r(sl_2): central charge 3r/(r+2), level r.
    for (int r = 1; r <= 5; ++r) {
        auto m = make_model(Family::Subregular, 2, r);
        CHECK(m.central_charge == Rat(3 * r) / (r + 2));
        CHECK(m.level == Rat(r));
    }
    // r = 0 closed form: one-dimensional vertex algebra.
    CHECK(make_model(Family::Subregular, 5, 0).central_charge == 0);
    // The r = 1 edges are rank-one lattice models of central charge 1.
    CHECK(make_model(Family::PrincipalSuper, 4, 1).central_charge == 1);
    CHECK(make_model(Family::Subregular, 4, 1).central_charge == 1);
}

TEST_CASE("simple module counts")
{
    for (long n = 2; n <= 5; ++n)
        for (int r = 0; r <= 5; ++r) {
            bool sb_ok = r == 0 || (r == 1 ? n % 2 == 0 : std::gcd(n - 1, r + 1) == 1);
            if (!sb_ok)
                continue;
            auto msb = make_model(Family::Subregular, n, r);
            CHECK(Int(simple_modules(msb).size()) ==
                  binomial(static_cast<unsigned>(n + r - 1), static_cast<unsigned>(n - 1)));
            auto msp = make_model(Family::PrincipalSuper, n, r);
            CHECK(Int(simple_modules(msp).size()) ==
                  binomial(static_cast<unsigned>(n + r), static_cast<unsigned>(n)));
        }
}

TEST_CASE("subregular (2,2) realizes the Ising fusion rules")
{
    auto wr = fusion_ring(make_model(Family::Subregular, 2, 2));
    wr.ring.check_consistency();
    REQUIRE(wr.ring.size() == 3);
    // Identify sigma-type element by its self-product 1 + eps.
    int sig = -1;
    for (int i = 0; i < 3; ++i)
        if (wr.ring.product(i, i).size() == 2)
            sig = i;
    REQUIRE(sig >= 0);
    auto p = wr.ring.product(sig, sig);
    CHECK(p.at(wr.ring.unit) == 1);
    int eps = -1;
    for (const auto& [k, c] : p)
        if (k != wr.ring.unit) {
            eps = k;
            CHECK(c == 1);
        }
    REQUIRE(eps >= 0);
    CHECK(wr.ring.product(eps, eps).at(wr.ring.unit) == 1);
    CHECK(wr.ring.product(eps, sig).at(sig) == 1);
}

TEST_CASE("fusion rings are associative with invertible simple currents")
{
    for (auto [fam, n, r] : {std::tuple<Family, long, int>{Family::Subregular, 3, 2},
                             {Family::PrincipalSuper, 2, 3},
                             {Family::PrincipalSuper, 3, 2},
                             {Family::Subregular, 2, 4}}) {
        auto wr = fusion_ring(make_model(fam, n, r));
        wr.ring.check_consistency();
        CHECK(!wr.ring.pic.empty());
        CHECK(wr.basis.size() == wr.ring.labels.size());
    }
}

TEST_CASE("canonical labels are idempotent and orbit invariant")
{
    auto model = make_model(Family::Subregular, 3, 2);
    for (const auto& x : simple_modules(model)) {
        CHECK(canonical_label(model, x) == x);
        WLabel shifted{rootdata::sigma(x.lambda, 1),
                       (x.a + model.step) % model.modulus};
        CHECK(canonical_label(model, shifted) == x);
    }
}

TEST_CASE("hrel maps round trip through the twisted functors")
{
    const long n = 3;
    const int r = 2;
    auto sb = make_model(Family::Subregular, n, r);
    for (const auto& x : simple_modules(sb))
        for (long xi = -3; xi <= 7; ++xi) {
            auto y = hrel_plus(n, r, x, xi);
            bool admissible = ((xi - x.a) % n + n) % n == 0;
            CHECK(y.has_value() == admissible);
            if (y) {
                auto back = hrel_minus(n, r, *y, xi);
                REQUIRE(back.has_value());
                CHECK(canonical_label(sb, *back) == x);
            }
        }
}

TEST_CASE("alternative principal-super parametrization gives the same ring")
{
    for (auto [n, r] : {std::pair<long, int>{2, 2}, {2, 3}, {3, 2}}) {
        auto direct = fusion_ring(make_model(Family::PrincipalSuper, n, r));
        auto alt = spr_alternative_ring(n, r);
        REQUIRE(alt.ring.size() == direct.ring.size());
        CHECK(ringkit::find_isomorphism(alt.ring, direct.ring).has_value());
    }
}
