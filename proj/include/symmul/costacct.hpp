#pragma once

// Multiplication counts for the refined evaluation scheme with derivative
// coordinates: each of the 2n + g - 1 coordinates needed to interpolate is
// typed as (a) a degree-1 value, (b) a degree-1 derivative, (c) a degree-2
// value coordinate or (d) a degree-2 derivative coordinate. Degree-2
// coordinates come in pairs per place; a paired couple costs 3 (Karatsuba)
// resp. 6 instead of 2 + 2 resp. 4 + 4.

#include "symmul/rational.hpp"

#include <cstdint>
#include <optional>

namespace symmul::costacct {

struct Context {
    int n = 0, g = 0, N1 = 0, N2 = 0, a1 = 0, a2 = 0;
};

struct CoordinateSplit {
    int L1 = 0, l1 = 0, L2 = 0, l2 = 0;
};

/// N1 + a1 + 2(N2 + a2) >= 2n + 2g - 1.
bool hypothesis_holds(const Context& ctx);
/// Sum 2n + g - 1 and per-type capacities L1 <= N1, l1 <= a1, L2 <= 2 N2, l2 <= 2 a2.
bool is_valid_split(const Context& ctx, const CoordinateSplit& s);

/// u*C if C <= M, else v*(C - M) + u*(2M - C).
std::int64_t pairing_cost(std::int64_t C, std::int64_t M, std::int64_t u, std::int64_t v);

/// Cost of a split. Only the capacities are enforced (std::invalid_argument),
/// so full-inventory splits can be priced too.
std::int64_t split_cost(const Context& ctx, const CoordinateSplit& s);

struct Bounds {
    std::int64_t bound1;  // 2n + g - 1 + a1 + N2 + 4 a2
    Rational bound2;      // 3n + 2g + a1/2 + 3 a2
};

/// Absent when the hypothesis fails.
std::optional<Bounds> theorem8_bounds(const Context& ctx);
/// 2n + g - 1 + a, degree-1 places only.
std::int64_t theorem7_bound(int n, int g, int a);

/// Largest split_cost over all valid splits; absent when no valid split exists.
std::optional<std::int64_t> max_split_cost(const Context& ctx);
/// Every valid split costs at most `bound`.
bool dominated_by(const Context& ctx, std::int64_t bound);
/// dominated_by(ctx, bound1); false when the hypothesis fails.
bool brute_force_dominance(const Context& ctx);

}  // namespace symmul::costacct
