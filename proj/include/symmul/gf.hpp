#pragma once

// Exact arithmetic in F_p, F_q = F_p[y]/(m(y)) and F_q[x]/(f(x)).
//
// Elements of F_q are packed into a single integer code: the little-endian
// residue vector (c_0, ..., c_{r-1}) of the element in the basis 1, y, ...,
// y^{r-1} is stored as c_0 + c_1 p + ... + c_{r-1} p^{r-1}. The order on
// codes is the order used everywhere a "canonical" choice is made.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace symmul::gf {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Decomposes q = p^r; returns false when q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, unsigned& r);

class FieldSpec {
public:
    /// F_{p^r} with the lexicographically smallest monic irreducible modulus.
    static FieldSpec canonical(std::uint32_t p, unsigned r = 1);
    static FieldSpec canonical_for_order(std::uint64_t q);
    /// F_p[y]/(modulus); modulus is little-endian, monic, and checked for
    /// irreducibility.
    static FieldSpec with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    unsigned r() const { return r_; }
    std::uint64_t q() const;
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus)
        : p_(p), r_(r), modulus_(std::move(modulus)) {}

    std::uint32_t p_ = 2;
    unsigned r_ = 1;
    std::vector<std::uint32_t> modulus_;
};

/// Table-driven F_q. Immutable once built; share through FieldPtr.
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p(); }
    unsigned r() const { return spec_.r(); }
    Elem size() const { return q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;
    Elem from_coeffs(std::span<const std::uint32_t> residues) const;
    std::vector<std::uint32_t> coeffs(Elem a) const;

private:
    FieldSpec spec_;
    Elem q_;
    std::vector<Elem> exp_;  // length 2(q-1), r > 1 only
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(FieldSpec spec);
FieldPtr make_field(std::uint32_t p, unsigned r = 1);

/// An element of F_q bound to its field.
class Element {
public:
    Element(FieldPtr field, Elem value);

    const FieldPtr& field() const { return field_; }
    Elem value() const { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const { return value_ == 0; }

    Element inv() const;
    Element pow(std::uint64_t e) const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator/(const Element& a, const Element& b);
    Element operator-() const;
    friend bool operator==(const Element& a, const Element& b);

private:
    FieldPtr field_;
    Elem value_;
};

/// Univariate polynomial over F_q, little-endian, no trailing zeros.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly monomial(FieldPtr field, std::size_t degree, Elem c = 1);
    static Poly constant(FieldPtr field, Elem c);
    static Poly x(FieldPtr field) { return monomial(std::move(field), 1); }

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly monic() const;
    Poly derivative() const;
    Elem eval(Elem x) const;
    Poly scaled(Elem s) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Quotient and remainder; throws std::domain_error when b is zero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    void trim();
    FieldPtr field_;
    std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);
/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Canonical order: lower degree first, then coefficients compared from the
/// constant term upward (constant term most significant).
std::strong_ordering canonical_compare(const Poly& a, const Poly& b);

bool is_irreducible(const Poly& f);
/// Lexicographically smallest monic irreducible of degree d.
Poly find_irreducible(const FieldPtr& field, unsigned d);
/// All monic irreducibles of degree d in canonical order.
std::vector<Poly> monic_irreducibles(const FieldPtr& field, unsigned d);
/// Necklace formula (1/d) sum_{e|d} mu(e) q^{d/e}. Throws std::overflow_error
/// if q^d does not fit in 64 bits.
std::uint64_t count_irreducibles(std::uint64_t q, unsigned d);
std::uint64_t count_irreducibles(const FieldSpec& base, unsigned d);

/// F_q[x]/(f) for monic irreducible f; elements are coefficient vectors of
/// length deg f on the basis 1, x, ..., x^{deg f - 1}.
class Extension {
public:
    using Value = std::vector<Elem>;

    explicit Extension(Poly modulus);

    const FieldPtr& base() const { return modulus_.field(); }
    const Poly& modulus() const { return modulus_; }
    unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }

    Value zero() const { return Value(degree(), 0); }
    Value one() const;
    Value reduce(const Poly& f) const;
    Poly lift(const Value& v) const;

    Value add(const Value& a, const Value& b) const;
    Value sub(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;
    Value scale(const Value& a, Elem s) const;
    /// Throws std::domain_error on zero.
    Value inv(const Value& a) const;
    Value pow(const Value& a, std::uint64_t e) const;

private:
    Poly modulus_;
};

using ExtensionPtr = std::shared_ptr<const Extension>;

/// An element of an Extension bound to it.
class ExtElement {
public:
    ExtElement(ExtensionPtr ext, Extension::Value value);

    const ExtensionPtr& extension() const { return ext_; }
    const Extension::Value& value() const { return value_; }
    bool is_zero() const;

    ExtElement inv() const;
    ExtElement pow(std::uint64_t e) const;

    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
    friend bool operator==(const ExtElement& a, const ExtElement& b);

private:
    ExtensionPtr ext_;
    Extension::Value value_;
};

}  // namespace symmul::gf
