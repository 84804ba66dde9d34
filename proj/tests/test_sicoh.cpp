#include "wfusion/sicoh.hpp"

#include <doctest.h>

using namespace wfusion;
using namespace wfusion::sicoh;

// Independent counting oracle: the weight-w dimension of the state space
// is the coefficient of q^w in P(q)^2 * prod (1+q^k)^2, with P the
// partition generating function (two bosons, two fermions, modes >= 1).
static std::vector<long> state_counts(long wmax)
{
    std::vector<long> part(wmax + 1, 0);
    part[0] = 1;
    // two partition colors then two strict colors
    for (int rep = 0; rep < 2; ++rep)
        for (long k = 1; k <= wmax; ++k)
            for (long w = k; w <= wmax; ++w)
                part[w] += part[w - k];
    for (int rep = 0; rep < 2; ++rep)
        for (long k = 1; k <= wmax; ++k)
            for (long w = wmax; w >= k; --w)
                part[w] += part[w - k];
    return part;
}

TEST_CASE("block bases have the right dimensions")
{
    auto counts = state_counts(6);
    for (long w = 0; w <= 6; ++w) {
        auto blk = build_block(Rat(1), w);
        long total = 0;
        for (const auto& [p, basis] : blk.basis)
            total += static_cast<long>(basis.size());
        CHECK(total == counts[w]);
        for (const auto& [p, basis] : blk.basis)
            for (const auto& st : basis) {
                CHECK(st.weight() == w);
                CHECK(st.ghost() == p);
            }
    }
}

TEST_CASE("the differential squares to zero")
{
    for (Rat b : {Rat(1), Rat(-1), Rat(1, 2), Rat(3)})
        for (long w = 0; w <= 5; ++w)
            CHECK(check_d_squared(build_block(b, w)));
}

TEST_CASE("exact rank on reference matrices")
{
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{Rat(0), Rat(0)}}) == 0);
    CHECK(exact_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
    CHECK(exact_rank({{Rat(1, 2), Rat(1, 3)}, {Rat(1, 5), Rat(1, 7)}}) == 2);
    // 3x3 with rank 2
    CHECK(exact_rank({{Rat(1), Rat(2), Rat(3)},
                      {Rat(4), Rat(5), Rat(6)},
                      {Rat(7), Rat(8), Rat(9)}}) == 2);
}

TEST_CASE("relative cohomology is concentrated at weight 0, ghost 0")
{
    for (Rat b : {Rat(1), Rat(-1), Rat(1, 2)}) {
        auto h0 = rel_cohomology(0, 0, b, 0);
        REQUIRE(h0.size() == 1);
        CHECK(h0.at(0) == 1);
        for (long w = 1; w <= 6; ++w) {
            for (const auto& [p, d] : rel_cohomology(0, 0, b, w))
                CHECK(d == 0);
        }
    }
}

TEST_CASE("mismatched highest weights kill the complex")
{
    CHECK(rel_cohomology(Rat(1), Rat(0), Rat(1), 0).empty());
    CHECK(rel_cohomology(Rat(1, 2), Rat(1, 3), Rat(1), 2).empty());
    // Opposite weights are allowed.
    auto h = rel_cohomology(Rat(3, 2), Rat(-3, 2), Rat(1), 0);
    CHECK(!h.empty());
}

TEST_CASE("koszul model: cohomology sits in degree 0 only")
{
    auto h0 = koszul_cohomology(0);
    REQUIRE(h0.size() == 1);
    CHECK(h0.at(0) == 1);
    for (long m = 1; m <= 5; ++m)
        for (const auto& [p, d] : koszul_cohomology(m))
            CHECK(d == 0);
}

TEST_CASE("koszul dimensions satisfy the Euler characteristic identity")
{
    // sum_p (-1)^p dim C^p_m equals the q^m coefficient of
    // (1-q)^2 / (1-q)^2 = 1, i.e. delta_{m,0}.
    for (long m = 0; m <= 5; ++m) {
        long euler = 0;
        for (const auto& [p, d] : koszul_dims(m))
            euler += (p % 2 == 0 ? d : -d);
        CHECK(euler == (m == 0 ? 1 : 0));
    }
}
