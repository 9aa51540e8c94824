#pragma once

// Places of the rational function field F_q(x) and local evaluation of
// polynomials of bounded degree at them.

#include "symmul/gf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symmul::rfield {

class Place {
public:
    enum class Kind { Finite, Infinity };

    /// Finite place given by a monic irreducible polynomial.
    static Place finite(gf::Poly poly);
    static Place infinity(gf::FieldPtr field);

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    /// Zero polynomial for the place at infinity.
    const gf::Poly& poly() const { return poly_; }
    const gf::FieldPtr& field() const { return poly_.field(); }
    unsigned degree() const { return degree_; }

    /// Residue field F_q[x]/(P); F_q[x]/(x) stands in for the residue field at infinity.
    const gf::ExtensionPtr& residue_field() const { return residue_; }

    std::string to_string() const;
    friend bool operator==(const Place& a, const Place& b);

private:
    Place(Kind kind, gf::Poly poly, unsigned degree, gf::ExtensionPtr residue)
        : kind_(kind), poly_(std::move(poly)), degree_(degree), residue_(std::move(residue)) {}

    Kind kind_;
    gf::Poly poly_;
    unsigned degree_;
    gf::ExtensionPtr residue_;
};

/// Degree-1 finite places in canonical order, then infinity, then (when
/// max_degree is 2) the degree-2 places in canonical order. Throws
/// std::invalid_argument unless max_degree is 1 or 2.
std::vector<Place> enumerate_places(const gf::FieldPtr& field, int max_degree);

/// Residue value and, optionally, the order-1 expansion coefficient, both as
/// coordinate vectors of length deg P over F_q.
struct LocalValue {
    std::vector<gf::Elem> value;
    std::optional<std::vector<gf::Elem>> derivative;
};

/// Value of f at P. At infinity this is the coefficient of x^degree_bound.
/// Throws std::invalid_argument when deg f > degree_bound.
LocalValue evaluate(const gf::Poly& f, const Place& place, int degree_bound);

/// Value and order-1 coefficient. At a finite place with root a the order-1
/// coefficient is f'(a)/P'(a) (uniformizer P); at infinity it is the
/// coefficient of x^{degree_bound-1}.
LocalValue evaluate_with_derivative(const gf::Poly& f, const Place& place, int degree_bound);

/// Concatenation value ++ derivative (derivative only when requested).
std::vector<gf::Elem> local_coordinates(const gf::Poly& f, const Place& place, int degree_bound, bool with_derivative);

}  // namespace symmul::rfield
