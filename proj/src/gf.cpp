#include "symmul/gf.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symmul::gf {

namespace {

constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 22;

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(static_cast<std::uint32_t>(f));
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

int moebius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("integer power overflows 64 bits");
        out *= base;
    }
    return out;
}

// Multiplication of packed codes in F_p[y]/(m), used only while building tables.
Elem slow_mul(Elem a, Elem b, const FieldSpec& spec) {
    const std::uint64_t p = spec.p();
    const unsigned r = spec.r();
    std::vector<std::uint64_t> da(r), db(r), prod(2 * r, 0);
    for (unsigned j = 0; j < r; ++j) {
        da[j] = a % p;
        a /= static_cast<Elem>(p);
        db[j] = b % p;
        b /= static_cast<Elem>(p);
    }
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& m = spec.modulus();
    for (unsigned k = 2 * r - 1; k >= r; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        // y^k = y^{k-r} * y^r and y^r = -(m_0 + ... + m_{r-1} y^{r-1})
        for (unsigned j = 0; j < r; ++j)
            prod[k - r + j] = (prod[k - r + j] + (p - m[j]) % p * c) % p;
        prod[k] = 0;
    }
    Elem out = 0;
    for (unsigned j = r; j-- > 0;) out = static_cast<Elem>(out * p + prod[j]);
    return out;
}

Elem slow_pow(Elem a, std::uint64_t e, const FieldSpec& spec) {
    Elem result = 1;
    while (e) {
        if (e & 1) result = slow_mul(result, a, spec);
        a = slow_mul(a, a, spec);
        e >>= 1;
    }
    return result;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a != b && !(a->spec() == b->spec()))
        throw std::invalid_argument("operands belong to different fields");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, unsigned& r) {
    if (q < 2) return false;
    std::uint64_t f = 2;
    while (f * f <= q && q % f != 0) ++f;
    if (q % f != 0) f = q;
    unsigned e = 0;
    std::uint64_t rest = q;
    while (rest % f == 0) {
        rest /= f;
        ++e;
    }
    if (rest != 1 || f > std::numeric_limits<std::uint32_t>::max()) return false;
    p = static_cast<std::uint32_t>(f);
    r = e;
    return true;
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::canonical(std::uint32_t p, unsigned r) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (r == 0) throw std::invalid_argument("extension degree must be at least 1");
    if (r == 1) return FieldSpec(p, 1, {});
    auto prime = make_field(p, 1);
    Poly m = find_irreducible(prime, r);
    std::vector<std::uint32_t> modulus(m.coeffs().begin(), m.coeffs().end());
    return FieldSpec(p, r, std::move(modulus));
}

FieldSpec FieldSpec::canonical_for_order(std::uint64_t q) {
    std::uint32_t p = 0;
    unsigned r = 0;
    if (!prime_power(q, p, r)) throw std::invalid_argument("field order must be a prime power");
    return canonical(p, r);
}

FieldSpec FieldSpec::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree at least 1");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    const auto r = static_cast<unsigned>(modulus.size() - 1);
    if (r == 1) return FieldSpec(p, 1, {});
    auto prime = make_field(p, 1);
    Poly m(prime, std::vector<Elem>(modulus.begin(), modulus.end()));
    if (!is_irreducible(m)) throw std::invalid_argument("modulus is not irreducible");
    return FieldSpec(p, r, std::move(modulus));
}

std::uint64_t FieldSpec::q() const { return checked_pow(p_, r_); }

// -------------------------------------------------------------------- Field

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    const std::uint64_t q = spec_.q();
    if (spec_.r() > 1 && q > kMaxTableOrder)
        throw std::invalid_argument("extension field too large for table arithmetic");
    if (q > std::numeric_limits<Elem>::max()) throw std::invalid_argument("field too large");
    q_ = static_cast<Elem>(q);
    if (spec_.r() == 1) return;

    // Find a primitive element, then tabulate exp/log.
    const auto factors = prime_factors(q - 1);
    Elem gen = 0;
    for (Elem g = 2; g < q_; ++g) {
        bool primitive = true;
        for (auto l : factors) {
            if (slow_pow(g, (q - 1) / l, spec_) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("no primitive element found");
    exp_.resize(2 * (q - 1));
    log_.assign(q, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        exp_[i] = x;
        exp_[i + q - 1] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(x, gen, spec_);
    }
}

Elem Field::add(Elem a, Elem b) const {
    const Elem p = spec_.p();
    if (spec_.r() == 1) {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= p ? s - p : s);
    }
    if (p == 2) return a ^ b;
    Elem out = 0, scale = 1;
    for (unsigned j = 0; j < spec_.r(); ++j) {
        Elem s = a % p + b % p;
        if (s >= p) s -= p;
        out += s * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

Elem Field::neg(Elem a) const {
    const Elem p = spec_.p();
    if (spec_.r() == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Elem out = 0, scale = 1;
    for (unsigned j = 0; j < spec_.r(); ++j) {
        const Elem d = a % p;
        out += (d == 0 ? 0 : p - d) * scale;
        a /= p;
        scale *= p;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (spec_.r() == 1) return static_cast<Elem>(std::uint64_t{a} * b % spec_.p());
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (spec_.r() == 1) {
        std::int64_t t = 0, new_t = 1;
        std::int64_t rr = spec_.p(), new_r = a;
        while (new_r != 0) {
            const std::int64_t quot = rr / new_r;
            t = std::exchange(new_t, t - quot * new_t);
            rr = std::exchange(new_r, rr - quot * new_r);
        }
        if (t < 0) t += spec_.p();
        return static_cast<Elem>(t);
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (spec_.r() == 1) {
        std::uint64_t base = a, result = 1;
        const std::uint64_t p = spec_.p();
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<Elem>(result);
    }
    const std::uint64_t order = q_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (e % order)) % order];
}

Elem Field::from_int(std::int64_t v) const {
    const std::int64_t p = spec_.p();
    return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::from_coeffs(std::span<const std::uint32_t> residues) const {
    if (residues.size() > spec_.r()) throw std::invalid_argument("too many residues for field element");
    Elem out = 0;
    for (std::size_t j = residues.size(); j-- > 0;) {
        if (residues[j] >= spec_.p()) throw std::invalid_argument("residue out of range");
        out = out * spec_.p() + residues[j];
    }
    return out;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    std::vector<std::uint32_t> out(spec_.r());
    for (auto& c : out) {
        c = a % spec_.p();
        a /= spec_.p();
    }
    return out;
}

FieldPtr make_field(FieldSpec spec) { return std::make_shared<const Field>(std::move(spec)); }

FieldPtr make_field(std::uint32_t p, unsigned r) { return make_field(FieldSpec::canonical(p, r)); }

// ------------------------------------------------------------------ Element

Element::Element(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_->size()) throw std::invalid_argument("element code out of range");
}

Element Element::inv() const { return {field_, field_->inv(value_)}; }
Element Element::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
Element Element::operator-() const { return {field_, field_->neg(value_)}; }

Element operator+(const Element& a, const Element& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->add(a.value_, b.value_)};
}
Element operator-(const Element& a, const Element& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->sub(a.value_, b.value_)};
}
Element operator*(const Element& a, const Element& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
}
Element operator/(const Element& a, const Element& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->div(a.value_, b.value_)};
}
bool operator==(const Element& a, const Element& b) {
    require_same_field(a.field_, b.field_);
    return a.value_ == b.value_;
}

// --------------------------------------------------------------------- Poly

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= field_->size()) throw std::invalid_argument("polynomial coefficient out of range");
    trim();
}

Poly Poly::monomial(FieldPtr field, std::size_t degree, Elem c) {
    std::vector<Elem> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], s);
    return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        out[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i % field_->p())));
    return Poly(field_, std::move(out));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_->add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_->sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& f = *a.field_;
    std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = *a.field_;
    if (a.degree() < b.degree()) return {Poly(a.field_), a};
    std::vector<Elem> rem = a.c_;
    std::vector<Elem> quot(a.c_.size() - b.c_.size() + 1, 0);
    const Elem lead_inv = f.inv(b.leading());
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = rem.size(); k-- > db;) {
        const Elem c = f.mul(rem[k], lead_inv);
        if (c == 0) continue;
        quot[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, b.c_[j]));
    }
    rem.resize(db);
    return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return Poly::divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return Poly::divmod(a, b).first; }

bool operator==(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    return a.c_ == b.c_;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i] == 1;
        if (!unit || i == 0) {
            if (field_->r() > 1) os << '[' << c_[i] << ']';
            else os << c_[i];
        }
        if (i >= 1) {
            if (!unit) os << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(base.field(), 1) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return result;
}

std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] <=> b.coeffs()[i];
    return std::strong_ordering::equal;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("irreducibility of the zero polynomial");
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const Poly g = f.monic();
    const Poly x = Poly::x(f.field());
    const std::uint64_t q = f.field()->size();
    Poly h = x;
    for (int i = 1; i <= g.degree() / 2; ++i) {
        h = powmod(h, q, g);
        if (gcd(h - x, g).degree() > 0) return false;
    }
    return true;
}

namespace {

// Walks monic degree-d polynomials in canonical order; stops when visit returns false.
template <typename Visit>
void for_each_monic(const FieldPtr& field, unsigned d, Visit&& visit, Elem first_constant = 0) {
    const Elem q = field->size();
    std::vector<Elem> digits(d, 0);  // digits[0] = constant term, most significant
    if (d > 0) digits[0] = first_constant;
    for (;;) {
        std::vector<Elem> coeffs(digits);
        coeffs.push_back(1);
        if (!visit(Poly(field, std::move(coeffs)))) return;
        std::size_t j = d;
        for (;;) {
            if (j == 0) return;
            --j;
            if (++digits[j] < q) break;
            digits[j] = 0;
        }
    }
}

}  // namespace

Poly find_irreducible(const FieldPtr& field, unsigned d) {
    if (d == 0) throw std::invalid_argument("degree must be at least 1");
    std::optional<Poly> found;
    // Past degree 1 a zero constant term means a factor of x.
    const Elem first_constant = d > 1 ? 1 : 0;
    for_each_monic(
        field, d,
        [&](Poly f) {
            if (is_irreducible(f)) {
                found = std::move(f);
                return false;
            }
            return true;
        },
        first_constant);
    if (!found) throw std::logic_error("no irreducible polynomial found");
    return *found;
}

std::vector<Poly> monic_irreducibles(const FieldPtr& field, unsigned d) {
    if (d == 0) throw std::invalid_argument("degree must be at least 1");
    std::vector<Poly> out;
    for_each_monic(field, d, [&](Poly f) {
        if (is_irreducible(f)) out.push_back(std::move(f));
        return true;
    });
    return out;
}

std::uint64_t count_irreducibles(std::uint64_t q, unsigned d) {
    if (d == 0) throw std::invalid_argument("degree must be at least 1");
    __int128 total = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = moebius(e);
        if (mu != 0) total += mu * static_cast<__int128>(checked_pow(q, d / e));
    }
    return static_cast<std::uint64_t>(total / d);
}

std::uint64_t count_irreducibles(const FieldSpec& base, unsigned d) { return count_irreducibles(base.q(), d); }

// ---------------------------------------------------------------- Extension

Extension::Extension(Poly modulus) : modulus_(std::move(modulus)) {
    if (!modulus_.is_monic() || modulus_.degree() < 1) throw std::invalid_argument("extension modulus must be monic of degree >= 1");
    if (!is_irreducible(modulus_)) throw std::invalid_argument("extension modulus must be irreducible");
}

Extension::Value Extension::one() const {
    Value v(degree(), 0);
    v[0] = 1;
    return v;
}

Extension::Value Extension::reduce(const Poly& f) const {
    const Poly r = f % modulus_;
    Value v(degree(), 0);
    std::copy(r.coeffs().begin(), r.coeffs().end(), v.begin());
    return v;
}

Poly Extension::lift(const Value& v) const {
    if (v.size() != degree()) throw std::invalid_argument("extension element has wrong length");
    return Poly(base(), v);
}

Extension::Value Extension::add(const Value& a, const Value& b) const {
    Value out(degree());
    for (unsigned i = 0; i < degree(); ++i) out[i] = base()->add(a.at(i), b.at(i));
    return out;
}

Extension::Value Extension::sub(const Value& a, const Value& b) const {
    Value out(degree());
    for (unsigned i = 0; i < degree(); ++i) out[i] = base()->sub(a.at(i), b.at(i));
    return out;
}

Extension::Value Extension::mul(const Value& a, const Value& b) const { return reduce(lift(a) * lift(b)); }

Extension::Value Extension::scale(const Value& a, Elem s) const {
    Value out(degree());
    for (unsigned i = 0; i < degree(); ++i) out[i] = base()->mul(a.at(i), s);
    return out;
}

Extension::Value Extension::inv(const Value& a) const {
    // Extended Euclid: track s with s*a == r (mod modulus).
    Poly r0 = modulus_, r1 = lift(a);
    if (r1.is_zero()) throw std::domain_error("inverse of zero");
    Poly s0(base()), s1 = Poly::constant(base(), 1);
    while (!r1.is_zero()) {
        auto [quot, rem] = Poly::divmod(r0, r1);
        r0 = std::exchange(r1, rem);
        s0 = std::exchange(s1, s0 - quot * s1);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    return reduce(s0.scaled(base()->inv(r0.leading())));
}

Extension::Value Extension::pow(const Value& a, std::uint64_t e) const {
    Value result = one(), b = a;
    while (e) {
        if (e & 1) result = mul(result, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return result;
}

// --------------------------------------------------------------- ExtElement

ExtElement::ExtElement(ExtensionPtr ext, Extension::Value value) : ext_(std::move(ext)), value_(std::move(value)) {
    if (value_.size() != ext_->degree()) throw std::invalid_argument("extension element has wrong length");
}

bool ExtElement::is_zero() const {
    return std::all_of(value_.begin(), value_.end(), [](Elem c) { return c == 0; });
}

namespace {
void require_same_extension(const ExtensionPtr& a, const ExtensionPtr& b) {
    if (a != b && !(a->modulus().field()->spec() == b->modulus().field()->spec() && a->modulus() == b->modulus()))
        throw std::invalid_argument("operands belong to different extensions");
}
}  // namespace

ExtElement ExtElement::inv() const { return {ext_, ext_->inv(value_)}; }
ExtElement ExtElement::pow(std::uint64_t e) const { return {ext_, ext_->pow(value_, e)}; }

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    require_same_extension(a.ext_, b.ext_);
    return {a.ext_, a.ext_->add(a.value_, b.value_)};
}
ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    require_same_extension(a.ext_, b.ext_);
    return {a.ext_, a.ext_->sub(a.value_, b.value_)};
}
ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    require_same_extension(a.ext_, b.ext_);
    return {a.ext_, a.ext_->mul(a.value_, b.value_)};
}
bool operator==(const ExtElement& a, const ExtElement& b) {
    require_same_extension(a.ext_, b.ext_);
    return a.value_ == b.value_;
}

}  // namespace symmul::gf
