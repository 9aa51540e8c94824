#pragma once

// Certified bounds on the symmetric bilinear complexity mu^sym_q(n) of
// multiplication in F_{q^n} over F_q. All arithmetic is exact.

#include "symmul/rational.hpp"
#include "symmul/towers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symmul::bounds {

enum class Method {
    Exact,
    Winograd,
    Shokrollahi,
    TowerStep,
    UniformTheorem4i,
    UniformTheorem4ii,
    UniformTheorem5i,
    UniformTheorem5ii,
    Cq,
};

std::string to_string(Method m);

enum class Uniform { Thm4i, Thm4ii, Thm5i, Thm5ii };

struct BoundReport {
    std::uint64_t q = 0;
    unsigned n = 0;
    BigInt lower;
    Rational upper;
    BigInt upper_int;
    Method method = Method::Cq;
    /// The selected step: first one admitting the plain construction.
    std::optional<towers::TowerStep> step;
    /// 'a': plain construction on `step`; 'b': its predecessor with
    /// derivative evaluations, stored in `predecessor`.
    char tower_case = 0;
    std::optional<towers::TowerStep> predecessor;
};

/// Method tag with tower provenance, e.g. "TowerStep{AS_base,k=1,s=1,case=a}".
std::string provenance(const BoundReport& r);

/// Largest m <= 2 sqrt(q) prime to q; 2 sqrt(q) for squares.
/// Throws std::invalid_argument unless q is a prime power.
std::uint64_t epsilon(std::uint64_t q);

struct ExactValue {
    std::uint64_t value;
    Method method;  // Exact (table), Winograd or Shokrollahi
};
std::optional<ExactValue> exact_small(std::uint64_t q, unsigned n);

Rational cq_constant(std::uint64_t q);

/// Absent when the theorem does not apply to F_q.
std::optional<Rational> uniform_coefficient(std::uint64_t q, Uniform which);
std::optional<BoundReport> uniform_bound(std::uint64_t q, unsigned n, Uniform which);
Uniform uniform_for(towers::Family family);

/// Family defined over F_q (p >= 5 for Kummer families) and
/// 2n >= q + 1 + epsilon(q).
bool tower_applicable(std::uint64_t q, unsigned n, towers::Family family);

/// Nonspecial divisor, places_lower >= 2n + 2 genus_upper - 1 and a certified
/// place of degree n. Fixture steps take precedence for AS_base.
bool step_satisfies(const towers::TowerStep& step, unsigned n);
/// First step satisfying step_satisfies; absent when inapplicable.
std::optional<towers::TowerStep> select_step(std::uint64_t q, unsigned n, towers::Family family);
std::optional<BoundReport> per_n_tower_bound(std::uint64_t q, unsigned n, towers::Family family);

/// Every applicable bound in tie-break order: exact, tower, uniform, C_q.
std::vector<BoundReport> all_bounds(std::uint64_t q, unsigned n);
/// Throws std::invalid_argument unless q is a prime power and n >= 1.
BoundReport best_bound(std::uint64_t q, unsigned n);

}  // namespace symmul::bounds
