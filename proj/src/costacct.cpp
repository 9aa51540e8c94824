#include "symmul/costacct.hpp"

#include <algorithm>
#include <stdexcept>

namespace symmul::costacct {

bool hypothesis_holds(const Context& c) { return c.N1 + c.a1 + 2 * (c.N2 + c.a2) >= 2 * c.n + 2 * c.g - 1; }

namespace {

bool within_capacity(const Context& c, const CoordinateSplit& s) {
    return s.L1 >= 0 && s.l1 >= 0 && s.L2 >= 0 && s.l2 >= 0 && s.L1 <= c.N1 && s.l1 <= c.a1 && s.L2 <= 2 * c.N2 &&
           s.l2 <= 2 * c.a2;
}

}  // namespace

bool is_valid_split(const Context& c, const CoordinateSplit& s) {
    return within_capacity(c, s) && s.L1 + s.l1 + s.L2 + s.l2 == 2 * c.n + c.g - 1;
}

std::int64_t pairing_cost(std::int64_t C, std::int64_t M, std::int64_t u, std::int64_t v) {
    return C <= M ? u * C : v * (C - M) + u * (2 * M - C);
}

std::int64_t split_cost(const Context& c, const CoordinateSplit& s) {
    if (!within_capacity(c, s)) throw std::invalid_argument("coordinate split exceeds the place capacities");
    return s.L1 + 2 * std::int64_t{s.l1} + pairing_cost(s.L2, c.N2, 2, 3) + pairing_cost(s.l2, c.a2, 4, 6);
}

std::optional<Bounds> theorem8_bounds(const Context& c) {
    if (!hypothesis_holds(c)) return std::nullopt;
    Bounds b;
    b.bound1 = 2 * c.n + c.g - 1 + c.a1 + c.N2 + 4 * std::int64_t{c.a2};
    b.bound2 = Rational(3 * c.n + 2 * c.g + 3 * c.a2) + Rational(c.a1, 2);
    return b;
}

std::int64_t theorem7_bound(int n, int g, int a) { return 2 * std::int64_t{n} + g - 1 + a; }

std::optional<std::int64_t> max_split_cost(const Context& c) {
    const int total = 2 * c.n + c.g - 1;
    std::optional<std::int64_t> best;
    for (int L1 = 0; L1 <= std::min(c.N1, total); ++L1)
        for (int l1 = 0; l1 <= std::min(c.a1, total - L1); ++l1)
            for (int L2 = 0; L2 <= std::min(2 * c.N2, total - L1 - l1); ++L2) {
                const CoordinateSplit s{L1, l1, L2, total - L1 - l1 - L2};
                if (!is_valid_split(c, s)) continue;
                const auto cost = split_cost(c, s);
                if (!best || cost > *best) best = cost;
            }
    return best;
}

bool dominated_by(const Context& c, std::int64_t bound) {
    const auto m = max_split_cost(c);
    return !m || *m <= bound;
}

bool brute_force_dominance(const Context& c) {
    const auto b = theorem8_bounds(c);
    return b && dominated_by(c, b->bound1);
}

}  // namespace symmul::costacct
