#pragma once

// Symmetric bilinear multiplication algorithms for F_{q^n}/F_q built by
// evaluation and interpolation on the rational function field F_q(x), with
// optional first-derivative evaluations at places of degree 1 and 2.
//
// F_{q^n} = F_q[x]/(Q) with Q = find_irreducible(F_q, n). Inputs are
// represented by polynomials of degree <= n - 1, products by polynomials of
// degree <= 2n - 2.

#include "symmul/gf.hpp"
#include "symmul/rfield.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symmul::chud {

/// The genus-0 place inventory cannot supply 2n - 1 coordinates.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// c1/c2: places of degree 1/2 evaluated without derivative; a1/a2: with.
struct PlanCounts {
    std::size_t c1 = 0, a1 = 0, c2 = 0, a2 = 0;

    std::size_t N1() const { return c1 + a1; }
    std::size_t N2() const { return c2 + a2; }
    std::size_t coordinates() const { return c1 + 2 * a1 + 2 * c2 + 4 * a2; }
    /// N1 + 2 a1 + 3 N2 + 6 a2.
    std::size_t rank() const { return c1 + 3 * a1 + 3 * c2 + 9 * a2; }
    std::size_t derivative_places() const { return a1 + a2; }
    bool operator==(const PlanCounts&) const = default;
};

/// Degree-2 places available when multiplying in F_{q^n} (Q itself is excluded for n = 2).
std::size_t degree2_capacity(std::uint64_t q, unsigned n);

/// Rank-minimizing counts reaching 2n - 1 coordinates; among equal ranks,
/// fewer derivative places. Throws CapacityError when infeasible and
/// std::invalid_argument when n < 2.
PlanCounts plan_counts(std::uint64_t q, unsigned n);

struct PlanPlace {
    rfield::Place place;
    bool derivative = false;
};

struct EvaluationPlan {
    gf::FieldPtr field;
    unsigned n = 0;
    gf::Poly Q;
    /// Degree-1 places first (canonical order, infinity last), then degree 2.
    std::vector<PlanPlace> places;

    PlanCounts counts() const;
    int input_bound() const { return static_cast<int>(n) - 1; }
    int product_bound() const { return 2 * static_cast<int>(n) - 2; }
};

/// Places realizing the given counts: the first N1 degree-1 and N2 degree-2
/// places in canonical order, derivatives on the first a1 (resp. a2) of each.
EvaluationPlan make_plan(const gf::FieldPtr& field, unsigned n, const PlanCounts& counts);
EvaluationPlan plan_evaluation(const gf::FieldPtr& field, unsigned n);

/// Throws std::invalid_argument describing the first violated plan invariant.
void validate_plan(const EvaluationPlan& plan);

/// Local coordinates of polynomials of degree <= bound at a list of places,
/// and the inverse map on its image.
class CoordinateSystem {
public:
    CoordinateSystem(gf::FieldPtr field, std::vector<PlanPlace> places, int bound);

    std::size_t size() const { return size_; }
    int bound() const { return bound_; }
    bool injective() const { return injective_; }

    std::vector<gf::Elem> coordinates(const gf::Poly& f) const;
    /// Throws std::logic_error unless injective.
    gf::Poly interpolate(const std::vector<gf::Elem>& coords) const;

private:
    gf::FieldPtr field_;
    std::vector<PlanPlace> places_;
    int bound_;
    std::size_t size_ = 0;
    bool injective_ = false;
    std::vector<std::vector<gf::Elem>> left_inverse_;  // (bound+1) x size
};

/// x * y = sum_i lin_i(x) lin_i(y) c_i with lin_i on the monomial basis.
struct Term {
    std::vector<gf::Elem> lin;
    gf::Extension::Value c;
};

struct SymmetricAlgorithm {
    EvaluationPlan plan;
    gf::ExtensionPtr ext;
    std::vector<Term> terms;

    const gf::FieldPtr& field() const { return plan.field; }
    unsigned n() const { return plan.n; }
    std::size_t rank() const { return terms.size(); }
    gf::Extension::Value multiply(const gf::Extension::Value& x, const gf::Extension::Value& y) const;
};

/// Throws std::logic_error if interpolation fails (a defect for valid plans).
SymmetricAlgorithm build_symmetric_algorithm(const EvaluationPlan& plan);

struct VerifyReport {
    bool ok = false;
    std::size_t rank = 0;
    std::size_t pairs_checked = 0;
    bool exhaustive = false;
    std::optional<std::pair<unsigned, unsigned>> failing_basis_pair;
    std::string problem;
};

/// Checks all n^2 basis pairs, and all q^{2n} input pairs when q^n <= exhaustive_limit.
VerifyReport verify_algorithm(const SymmetricAlgorithm& alg, std::uint64_t exhaustive_limit = 64);

}  // namespace symmul::chud
