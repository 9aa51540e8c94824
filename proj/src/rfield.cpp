#include "symmul/rfield.hpp"

#include <stdexcept>

namespace symmul::rfield {

using gf::Elem;
using gf::Poly;

Place Place::finite(Poly poly) {
    if (!poly.is_monic()) throw std::invalid_argument("place polynomial must be monic");
    auto residue = std::make_shared<const gf::Extension>(poly);  // checks irreducibility
    const auto degree = static_cast<unsigned>(poly.degree());
    return Place(Kind::Finite, std::move(poly), degree, std::move(residue));
}

Place Place::infinity(gf::FieldPtr field) {
    auto residue = std::make_shared<const gf::Extension>(Poly::x(field));
    return Place(Kind::Infinity, Poly(std::move(field)), 1, std::move(residue));
}

std::string Place::to_string() const { return is_infinity() ? "inf" : poly_.to_string(); }

bool operator==(const Place& a, const Place& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.is_infinity()) return a.field()->spec() == b.field()->spec();
    return a.poly_ == b.poly_;
}

std::vector<Place> enumerate_places(const gf::FieldPtr& field, int max_degree) {
    if (max_degree != 1 && max_degree != 2) throw std::invalid_argument("max_degree must be 1 or 2");
    std::vector<Place> out;
    for (auto& p : gf::monic_irreducibles(field, 1)) out.push_back(Place::finite(std::move(p)));
    out.push_back(Place::infinity(field));
    if (max_degree == 2)
        for (auto& p : gf::monic_irreducibles(field, 2)) out.push_back(Place::finite(std::move(p)));
    return out;
}

namespace {

void check_bound(const Poly& f, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
    if (f.degree() > degree_bound) throw std::invalid_argument("polynomial exceeds the degree bound");
}

}  // namespace

LocalValue evaluate(const Poly& f, const Place& place, int degree_bound) {
    check_bound(f, degree_bound);
    if (place.is_infinity()) return {{f.coeff(static_cast<std::size_t>(degree_bound))}, std::nullopt};
    return {place.residue_field()->reduce(f), std::nullopt};
}

LocalValue evaluate_with_derivative(const Poly& f, const Place& place, int degree_bound) {
    check_bound(f, degree_bound);
    if (place.is_infinity()) {
        const Elem next = degree_bound >= 1 ? f.coeff(static_cast<std::size_t>(degree_bound - 1)) : 0;
        return {{f.coeff(static_cast<std::size_t>(degree_bound))}, std::vector<Elem>{next}};
    }
    const auto& k = *place.residue_field();
    auto value = k.reduce(f);
    // P is separable, so P' is a unit modulo P.
    auto derivative = k.mul(k.reduce(f.derivative()), k.inv(k.reduce(place.poly().derivative())));
    return {std::move(value), std::move(derivative)};
}

std::vector<Elem> local_coordinates(const Poly& f, const Place& place, int degree_bound, bool with_derivative) {
    if (!with_derivative) return evaluate(f, place, degree_bound).value;
    auto lv = evaluate_with_derivative(f, place, degree_bound);
    auto out = std::move(lv.value);
    out.insert(out.end(), lv.derivative->begin(), lv.derivative->end());
    return out;
}

}  // namespace symmul::rfield
