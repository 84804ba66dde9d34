#include "wfusion/fusion.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wfusion;
using namespace wfusion::fusion;
using rootdata::AffineWeight;
using rootdata::FiniteWeight;

// Weyl dimension formula for sl_2 and sl_3.
static Int dim_sl2(long m) { return m + 1; }
static Int dim_sl3(long a, long b) { return Int(a + 1) * (b + 1) * (a + b + 2) / 2; }

TEST_CASE("weight multiplicities sum to the Weyl dimension")
{
    for (long m = 0; m <= 6; ++m) {
        Int total = 0;
        for (const auto& [w, mult] : weight_multiplicities({m}, 2))
            total += mult;
        CHECK(total == dim_sl2(m));
    }
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b) {
            Int total = 0;
            for (const auto& [w, mult] : weight_multiplicities({a, b}, 3))
                total += mult;
            CHECK(total == dim_sl3(a, b));
        }
}

TEST_CASE("adjoint of sl_3 has a doubled zero weight")
{
    auto mults = weight_multiplicities({1, 1}, 3);
    CHECK(mults.at({0, 0}) == 2);
    CHECK(mults.at({1, 1}) == 1);
    CHECK(mults.size() == 7); // 6 roots and the doubled origin
}

TEST_CASE("sl_2 tensor products follow Clebsch-Gordan")
{
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b) {
            auto t = tensor_multiplicities({a}, {b}, 2);
            CHECK(Int(t.size()) == std::min(a, b) + 1);
            for (long c = std::abs(a - b); c <= a + b; c += 2)
                CHECK(t.at({c}) == 1);
        }
}

TEST_CASE("sl_3 tensor products: 3 x 3bar and 8 x 8")
{
    auto a = tensor_multiplicities({1, 0}, {0, 1}, 3);
    CHECK(a.size() == 2);
    CHECK(a.at({0, 0}) == 1);
    CHECK(a.at({1, 1}) == 1);

    auto b = tensor_multiplicities({1, 1}, {1, 1}, 3);
    CHECK(b.at({0, 0}) == 1);
    CHECK(b.at({1, 1}) == 2);
    CHECK(b.at({3, 0}) == 1);
    CHECK(b.at({0, 3}) == 1);
    CHECK(b.at({2, 2}) == 1);
    Int total = 0;
    for (const auto& [w, m] : b)
        total += m * dim_sl3(w[0], w[1]);
    CHECK(total == 64);
}

// Closed form for sl_2 level-k fusion: N_{ab}^c = 1 exactly when
// c = a + b mod 2, |a-b| <= c <= min(a+b, 2k-a-b).
TEST_CASE("sl_2 affine fusion matches the closed form")
{
    const long k = 4;
    for (long a = 0; a <= k; ++a)
        for (long b = 0; b <= k; ++b) {
            auto f = affine_fusion(AffineWeight{{k - a, a}}, AffineWeight{{k - b, b}}, k);
            for (long c = 0; c <= k; ++c) {
                bool expect = (a + b + c) % 2 == 0 && c >= std::abs(a - b) &&
                              c <= std::min(a + b, 2 * k - a - b);
                auto it = f.find(AffineWeight{{k - c, c}});
                CHECK((it != f.end() ? it->second : Int(0)) == Int(expect ? 1 : 0));
            }
        }
}

TEST_CASE("sl_3 level 1 fusion is the Z_3 group law")
{
    auto ws = rootdata::dominant_weights(3, 1);
    REQUIRE(ws.size() == 3);
    for (const auto& u : ws)
        for (const auto& v : ws) {
            auto f = affine_fusion(u, v, 1);
            REQUIRE(f.size() == 1);
            CHECK(rootdata::pi_pq(f.begin()->first) ==
                  (rootdata::pi_pq(u) + rootdata::pi_pq(v)) % 3);
        }
}

TEST_CASE("modular S-matrix of sl_2 matches the sine formula")
{
    for (long n = 1; n <= 5; ++n) {
        auto sm = smatrix_affine(2, n);
        REQUIRE(sm.basis.size() == static_cast<std::size_t>(n + 1));
        for (long a = 0; a <= n; ++a)
            for (long b = 0; b <= n; ++b) {
                int i = sm.index_of(AffineWeight{{n - a, a}});
                int j = sm.index_of(AffineWeight{{n - b, b}});
                double expect = std::sqrt(2.0 / (n + 2)) *
                                std::sin(std::numbers::pi * (a + 1) * (b + 1) / (n + 2));
                CHECK(std::abs(sm.S[i][j] - Cplx(expect)) < 1e-12);
            }
    }
}

TEST_CASE("Verlinde evaluation reproduces Kac-Walton fusion")
{
    for (auto [r, n] : {std::pair<int, long>{2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
        auto sm = smatrix_affine(r, n);
        for (const auto& u : sm.basis)
            for (const auto& v : sm.basis) {
                double resid = 0;
                auto ver = verlinde_fusion(sm, u, v, 1e-6, &resid);
                CHECK(resid < 1e-8);
                CHECK(ver == affine_fusion(u, v, n));
            }
    }
}

TEST_CASE("conjugation reverses the finite labels and fixes fusion units")
{
    AffineWeight w{{1, 2, 0, 1}};
    CHECK(conjugate(w) == AffineWeight{{1, 1, 0, 2}});
    // N_{lam, conj(lam)} contains the vacuum exactly once.
    for (const auto& u : rootdata::dominant_weights(3, 2)) {
        auto f = affine_fusion(u, conjugate(u), 2);
        CHECK(f.at(AffineWeight{{2, 0, 0}}) == 1);
    }
}
