#include "wfusion/rootdata.hpp"

#include <doctest.h>

using namespace wfusion;
using namespace wfusion::rootdata;

TEST_CASE("dominant weight counts match stars and bars")
{
    for (int r = 1; r <= 6; ++r)
        for (long n = 0; n <= 5; ++n) {
            auto ws = dominant_weights(r, n);
            CHECK(Int(ws.size()) == binomial(static_cast<unsigned>(n + r - 1),
                                             static_cast<unsigned>(r - 1)));
            for (const auto& w : ws) {
                CHECK(w.rank() == r);
                CHECK(w.level() == n);
            }
        }
    auto sl3 = dominant_weights(3, 2);
    REQUIRE(sl3.size() == 6);
    CHECK(sl3.front() == AffineWeight{{0, 0, 2}});
    CHECK(sl3.back() == AffineWeight{{2, 0, 0}});
}

// Independent Gram-matrix oracle: realize the fundamental weight w_i of
// sl_r as e_1 + ... + e_i - (i/r)(e_1 + ... + e_r) and take the ordinary
// dot product in R^r.
static Rat gram_oracle(int i, int j, int r)
{
    Rat s = 0;
    for (int k = 1; k <= r; ++k) {
        Rat xi = (k <= i ? 1 : 0) - Rat(i) / r;
        Rat xj = (k <= j ? 1 : 0) - Rat(j) / r;
        s += xi * xj;
    }
    return s;
}

TEST_CASE("inner product agrees with the epsilon-coordinate oracle")
{
    for (int r = 2; r <= 6; ++r)
        for (int i = 1; i < r; ++i)
            for (int j = 1; j < r; ++j) {
                FiniteWeight wi(r - 1, 0), wj(r - 1, 0);
                wi[i - 1] = 1;
                wj[j - 1] = 1;
                CHECK(inner_product(wi, wj, r) == gram_oracle(i, j, r));
            }
}

TEST_CASE("pairing with rho is i(r-i)/2 on fundamental weights")
{
    for (int r = 2; r <= 6; ++r)
        for (int i = 1; i < r; ++i) {
            FiniteWeight wi(r - 1, 0);
            wi[i - 1] = 1;
            CHECK(inner_with_rho(wi, r) == Rat(i * (r - i)) / 2);
        }
}

TEST_CASE("sigma rotates labels, preserves the level and has order r")
{
    for (int r = 2; r <= 5; ++r)
        for (const auto& w : dominant_weights(r, 3)) {
            auto s = sigma(w);
            CHECK(s.level() == 3);
            CHECK(s.labels[1 % r] == w.labels[0]);
            CHECK(sigma(w, r) == w);
            CHECK(sigma(w, -1) == sigma(w, r - 1));
        }
}

TEST_CASE("pi_pq is additive under sigma by the level")
{
    for (int r = 2; r <= 5; ++r)
        for (long n = 1; n <= 4; ++n)
            for (const auto& w : dominant_weights(r, n))
                CHECK(pi_pq(sigma(w)) == static_cast<int>(((pi_pq(w) + n) % r + r) % r));
}

TEST_CASE("principal W conformal weights at rescaled fundamental weights")
{
    // h_{n w_i} = i n (r - i) / (2 r).
    for (int r = 2; r <= 5; ++r)
        for (long n = 1; n <= 4; ++n)
            for (int i = 0; i < r; ++i) {
                std::vector<long> lab(r, 0);
                lab[i] = n;
                CHECK(conformal_dim_prinw(AffineWeight{lab}, n) ==
                      Rat(i) * n * (r - i) / (2 * r));
            }
}

TEST_CASE("affine conformal weights for sl_2 match j(j+2)/(4(n+2))")
{
    for (long n = 1; n <= 6; ++n)
        for (long j = 0; j <= n; ++j)
            CHECK(conformal_dim_affine(AffineWeight{{n - j, j}}, n) ==
                  Rat(j * (j + 2)) / (4 * (n + 2)));
}

TEST_CASE("young diagram round trip and transposition")
{
    AffineWeight w{{1, 1, 3}}; // sl_3, level 5
    auto d = to_young(w);
    CHECK(d.column_heights == std::vector<long>{2, 2, 2, 1});
    CHECK(d.boxes() == 7);
    CHECK(from_young(d, 3, 5) == w);
    CHECK(d.transpose().column_heights == std::vector<long>{4, 3});

    auto t = transpose_weight(w);
    CHECK(t == AffineWeight{{1, 0, 0, 1, 1}}); // sl_5, level 3
    CHECK(box_count(t) == box_count(w));
}

TEST_CASE("double transposition lands in the sigma orbit")
{
    // Dropping full-height columns is exactly the sigma ambiguity, so the
    // square of the transpose map is the identity up to diagram rotation.
    for (int r = 2; r <= 4; ++r)
        for (long m = 1; m <= 4; ++m)
            for (const auto& w : dominant_weights(r, m)) {
                auto t = transpose_weight(w);
                CHECK(t.rank() == m);
                CHECK(t.level() == r);
                auto tt = transpose_weight(t);
                bool in_orbit = false;
                for (int j = 0; j < r; ++j)
                    in_orbit = in_orbit || sigma(w, j) == tt;
                CHECK(in_orbit);
            }
}
