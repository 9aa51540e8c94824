#pragma once

// Genus and place-count data for four Garcia-Stichtenoth towers:
//   AS_quadratic     F_{k,s} over F_{q^2}, Artin-Schreier, q = p^r >= 4
//   AS_base          G_{k,s} over F_q, same tower descended to F_q
//   Kummer_quadratic H_k over F_{p^2}, y^2 = (x^2 + 1)/2x, p >= 5
//   Kummer_base      H_k over F_p
// Steps are indexed (k, s) with 0 <= s < r for AS towers, (k, r) being
// (k + 1, 0); Kummer steps have s = 0. All quantities are exact integers.

#include "symmul/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symmul::towers {

enum class Family { AS_quadratic, AS_base, Kummer_quadratic, Kummer_base };

std::string to_string(Family f);
/// Accepts the names printed by to_string; throws std::invalid_argument.
Family parse_family(const std::string& s);
const std::vector<Family>& all_families();

struct TowerId {
    Family family;
    std::uint32_t p;
    unsigned r;  // 1 for Kummer towers

    bool quadratic() const { return family == Family::AS_quadratic || family == Family::Kummer_quadratic; }
    bool kummer() const { return family == Family::Kummer_quadratic || family == Family::Kummer_base; }
    /// p^r, the tower parameter.
    BigInt q() const;
    /// Size of the constant field: q^2 for quadratic families, q otherwise.
    BigInt field_size() const;
    bool operator==(const TowerId&) const = default;
};

/// The tower of `family` whose constant field has `field_size` elements, if any.
std::optional<TowerId> tower_for_field(Family family, std::uint64_t field_size);

/// Step data from the embedded small-field tables for G_{k,s}/F_q.
struct SmallCaseFixture {
    std::uint64_t q;
    unsigned k, s;
    std::uint64_t N1, N2, g, Gamma;
    unsigned n_min, n_max;
};

struct TowerStep {
    TowerId tower;
    unsigned k = 0, s = 0;
    std::optional<BigInt> genus_exact;
    BigInt genus_lower, genus_upper;
    /// Lower bound on N1 (quadratic families) resp. N1 + 2 N2.
    BigInt places_lower;
    /// Certified existence of a non-special divisor of degree g - 1: genus 0,
    /// any genus over >= 5 constants, genus >= 2 over 4 constants.
    bool nonspecial_divisor = false;
    std::optional<SmallCaseFixture> fixture;

    /// genus_exact when known, else genus_upper.
    const BigInt& genus_for_upper_bounds() const { return genus_exact ? *genus_exact : genus_upper; }
};

/// Genus of F_k (equivalently G_k); q >= 2, k >= 1.
BigInt as_genus(std::uint64_t q, unsigned k);
/// Genus of H_k; k >= 0.
BigInt kummer_genus(unsigned k);

/// AS step (k, s), 0 <= s <= r. Throws std::invalid_argument on bad input.
TowerStep as_step_bounds(std::uint64_t q, unsigned k, unsigned s, Family family = Family::AS_base);
TowerStep kummer_step_bounds(std::uint32_t p, unsigned k, Family family = Family::Kummer_base);

TowerStep first_step(const TowerId& tower);
TowerStep next_step(const TowerStep& step);
std::optional<TowerStep> previous_step(const TowerStep& step);

/// AS: D_{k,s} = (p-1) p^s q^k, valid for k >= 4 only (std::invalid_argument
/// below). Kummer: 2^{k+1} - 2^{ceil((k+1)/2)}.
BigInt delta_genus_lower(const TowerStep& step);
/// Lower bound on sup{n : 2n <= N - 2g + 1}. AS: ceil((q+1) q^{k-1} p^s (q-3) / 2);
/// Kummer: 2^k (p-3) + 2.
BigInt n0_lower(const TowerStep& step);

/// 2g + 1 <= F^{(n-1)/2} (sqrt(F) - 1), decided exactly; sufficient for a
/// place of degree n in a function field of genus g over F_F.
bool degree_n_place_criterion(const BigInt& field_size, const BigInt& genus, unsigned n);

const std::vector<SmallCaseFixture>& fixtures();
std::optional<SmallCaseFixture> fixture_lookup(std::uint64_t q, unsigned n);
/// The AS_base step carrying the fixture's exact values.
TowerStep fixture_step(const SmallCaseFixture& f);

}  // namespace symmul::towers
