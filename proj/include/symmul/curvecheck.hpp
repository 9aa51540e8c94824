#pragma once

// Point count and Frobenius trace for the genus-1 model
//   y^2 + (r+1) x y + (r+1) y = x^3 + (16383 r - 38230) x + (1551027 r - 3576436)
// reduced at an inert prime p, with r a root of t^2 - t - 3.

#include "symmul/gf.hpp"

#include <cstdint>
#include <optional>

namespace symmul::curvecheck {

/// c0 + c1 r with c0, c1 in [0, p).
struct ResidueCoeff {
    std::uint32_t c0 = 0, c1 = 0;
    bool operator==(const ResidueCoeff&) const = default;
};

struct CanonicalCoefficients {
    std::uint32_t p = 0;
    ResidueCoeff a1, a2, a3, a4, a6;
};

/// Coefficientwise reduction mod any prime p (no field is built).
CanonicalCoefficients canonical_coefficients_mod(std::uint32_t p);

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
    gf::FieldPtr field;
    gf::Elem a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

gf::Elem discriminant(const WeierstrassCurve& c);
/// Throws std::invalid_argument when the discriminant vanishes.
WeierstrassCurve make_curve(gf::FieldPtr field, gf::Elem a1, gf::Elem a2, gf::Elem a3, gf::Elem a4, gf::Elem a6);

/// t^2 - t - 3 irreducible mod p.
bool is_inert(std::uint32_t p);
/// The curve over F_p[t]/(t^2 - t - 3); absent when p splits or ramifies.
/// Throws std::invalid_argument unless p is an odd prime.
std::optional<WeierstrassCurve> reduce_canonical_curve(std::uint32_t p);

inline constexpr std::uint64_t kMaxCountFieldSize = 1'000'000;

/// Affine solutions plus the point at infinity. Throws std::invalid_argument
/// above kMaxCountFieldSize.
std::uint64_t count_points(const WeierstrassCurve& c);
std::int64_t trace_of_frobenius(const WeierstrassCurve& c);
/// trace = n^2 - 2p for some integer n >= 0.
bool is_descent_form(std::int64_t trace, std::int64_t p);

struct ShimuraReport {
    std::uint32_t p = 0;
    bool irreducible = false;
    std::optional<std::uint64_t> points;
    std::optional<std::int64_t> trace;
    std::optional<bool> descent_form;
};
ShimuraReport shimura_check(std::uint32_t p);

}  // namespace symmul::curvecheck
