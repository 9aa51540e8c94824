#include <doctest.h>

#include "symmul/costacct.hpp"

using namespace symmul;
using costacct::Context;
using costacct::CoordinateSplit;

namespace {

// Worst case over ways of spreading C coordinates on M places, at most 2 per
// place: a place holding one coordinate costs `single`, holding two `pair`.
std::int64_t spread_oracle(int C, int M, int single, int pair) {
    std::int64_t best = -1;
    for (int k = 0; 2 * k <= C; ++k) {
        const int singles = C - 2 * k;
        if (k + singles > M) continue;
        best = std::max<std::int64_t>(best, std::int64_t{pair} * k + std::int64_t{single} * singles);
    }
    return best;
}

template <typename F>
void for_grid(F&& f) {
    for (int n = 1; n <= 8; ++n)
        for (int g = 0; g <= 4; ++g)
            for (int N1 = 0; N1 <= 8; ++N1)
                for (int a1 = 0; a1 <= N1; ++a1)
                    for (int N2 = 0; N2 <= 4; ++N2)
                        for (int a2 = 0; a2 <= N2; ++a2) f(Context{n, g, N1, N2, a1, a2});
}

}  // namespace

TEST_CASE("pairing_cost is the worst spread over places") {
    for (int M = 0; M <= 6; ++M)
        for (int C = 0; C <= 2 * M; ++C) {
            CHECK(costacct::pairing_cost(C, M, 2, 3) == spread_oracle(C, M, 2, 3));
            CHECK(costacct::pairing_cost(C, M, 4, 6) == spread_oracle(C, M, 4, 6));
        }
}

TEST_CASE("split_cost examples") {
    const Context ctx{3, 0, 3, 1, 1, 0};
    const CoordinateSplit s{3, 1, 1, 0};
    REQUIRE(costacct::is_valid_split(ctx, s));
    CHECK(costacct::split_cost(ctx, s) == 7);
    CHECK(costacct::split_cost(ctx, s) == 2 * 3 + 0 - 1 + 1 + 1 + 3 * 0);

    const Context plain{4, 1, 8, 0, 0, 0};
    const CoordinateSplit all_deg1{2 * 4 + 1 - 1, 0, 0, 0};
    REQUIRE(costacct::is_valid_split(plain, all_deg1));
    CHECK(costacct::split_cost(plain, all_deg1) == 8);

    for (int N2 = 0; N2 <= 5; ++N2) CHECK(costacct::pairing_cost(2 * N2, N2, 2, 3) == 3 * N2);

    CHECK_THROWS_AS(costacct::split_cost(ctx, {4, 0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(costacct::split_cost(ctx, {0, 2, 0, 0}), std::invalid_argument);
    CHECK_FALSE(costacct::is_valid_split(ctx, {3, 1, 0, 0}));
}

TEST_CASE("theorem8_bounds") {
    auto b = costacct::theorem8_bounds({3, 0, 3, 1, 1, 0});
    REQUIRE(b);
    CHECK(b->bound1 == 7);
    CHECK(b->bound2 == Rational(19, 2));

    auto plain = costacct::theorem8_bounds({5, 2, 20, 0, 0, 0});
    REQUIRE(plain);
    CHECK(plain->bound2 == Rational(3 * 5 + 2 * 2));

    CHECK_FALSE(costacct::theorem8_bounds({5, 0, 3, 0, 0, 0}));
    CHECK(costacct::theorem7_bound(5, 2, 3) == 14);
}

TEST_CASE("brute_force_dominance examples") {
    CHECK(costacct::brute_force_dominance({3, 0, 3, 1, 1, 0}));
    CHECK(costacct::brute_force_dominance({4, 0, 3, 2, 2, 1}));
    CHECK_FALSE(costacct::brute_force_dominance({5, 0, 3, 0, 0, 0}));  // hypothesis fails
}

TEST_CASE("four-case bound dominates every split on the grid") {
    int points = 0, tight = 0, mutation_caught = 0;
    for_grid([&](const Context& c) {
        if (!costacct::hypothesis_holds(c)) return;
        ++points;
        const auto b = costacct::theorem8_bounds(c);
        const auto m = costacct::max_split_cost(c);
        REQUIRE(m);  // the hypothesis leaves room for a split
        CHECK(costacct::brute_force_dominance(c));
        tight += *m == b->bound1;
        mutation_caught += !costacct::dominated_by(c, b->bound1 - 1);
    });
    CHECK(points > 0);
    CHECK(tight > 0);
    CHECK(mutation_caught > 0);
}

TEST_CASE("theorem 7 is the degree-1 projection") {
    for_grid([](const Context& c) {
        if (c.N2 != 0 || c.a2 != 0 || !costacct::hypothesis_holds(c)) return;
        CHECK(costacct::theorem8_bounds(c)->bound1 == costacct::theorem7_bound(c.n, c.g, c.a1));
    });
}

TEST_CASE("full-inventory split prices the plain construction") {
    for_grid([](const Context& c) {
        const CoordinateSplit full{c.N1, c.a1, 2 * c.N2, 2 * c.a2};
        CHECK(costacct::split_cost(c, full) == c.N1 + 2 * c.a1 + 3 * c.N2 + 6 * c.a2);
    });
}

TEST_CASE("bound1 <= bound2 when the coordinate supply is tight") {
    for_grid([](const Context& c) {
        const int supply = c.N1 + c.a1 + 2 * (c.N2 + c.a2);
        if (supply < 2 * c.n + 2 * c.g - 1 || supply > 2 * c.n + 2 * c.g) return;
        const auto b = costacct::theorem8_bounds(c);
        CHECK(Rational(b->bound1) <= b->bound2);
    });
}
