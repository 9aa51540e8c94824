#include "symmul/curvecheck.hpp"

#include "symmul/rational.hpp"

#include <stdexcept>
#include <vector>

namespace symmul::curvecheck {

namespace {

std::uint32_t mod(std::int64_t v, std::uint32_t p) {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

ResidueCoeff reduce(std::int64_t c0, std::int64_t c1, std::uint32_t p) { return {mod(c0, p), mod(c1, p)}; }

}  // namespace

CanonicalCoefficients canonical_coefficients_mod(std::uint32_t p) {
    if (!gf::is_prime(p)) throw std::invalid_argument("p must be prime");
    CanonicalCoefficients c;
    c.p = p;
    c.a1 = c.a3 = reduce(1, 1, p);
    c.a2 = reduce(0, 0, p);
    c.a4 = reduce(-38230, 16383, p);
    c.a6 = reduce(-3576436, 1551027, p);
    return c;
}

gf::Elem discriminant(const WeierstrassCurve& c) {
    const gf::Field& F = *c.field;
    auto k = [&](std::int64_t v) { return F.from_int(v); };
    auto m = [&](gf::Elem a, gf::Elem b) { return F.mul(a, b); };
    auto s = [&](gf::Elem a, gf::Elem b) { return F.add(a, b); };
    const gf::Elem b2 = s(m(c.a1, c.a1), m(k(4), c.a2));
    const gf::Elem b4 = s(m(k(2), c.a4), m(c.a1, c.a3));
    const gf::Elem b6 = s(m(c.a3, c.a3), m(k(4), c.a6));
    gf::Elem b8 = m(m(c.a1, c.a1), c.a6);
    b8 = s(b8, m(k(4), m(c.a2, c.a6)));
    b8 = F.sub(b8, m(c.a1, m(c.a3, c.a4)));
    b8 = s(b8, m(c.a2, m(c.a3, c.a3)));
    b8 = F.sub(b8, m(c.a4, c.a4));
    gf::Elem d = F.neg(m(m(b2, b2), b8));
    d = F.sub(d, m(k(8), m(b4, m(b4, b4))));
    d = F.sub(d, m(k(27), m(b6, b6)));
    d = s(d, m(k(9), m(b2, m(b4, b6))));
    return d;
}

WeierstrassCurve make_curve(gf::FieldPtr field, gf::Elem a1, gf::Elem a2, gf::Elem a3, gf::Elem a4, gf::Elem a6) {
    WeierstrassCurve c{std::move(field), a1, a2, a3, a4, a6};
    if (discriminant(c) == 0) throw std::invalid_argument("singular Weierstrass equation");
    return c;
}

bool is_inert(std::uint32_t p) {
    if (!gf::is_prime(p)) throw std::invalid_argument("p must be prime");
    auto prime = gf::make_field(p, 1);
    return gf::is_irreducible(gf::Poly(prime, {prime->from_int(-3), prime->from_int(-1), 1}));
}

std::optional<WeierstrassCurve> reduce_canonical_curve(std::uint32_t p) {
    if (p == 2 || !gf::is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (!is_inert(p)) return std::nullopt;
    auto field = gf::make_field(gf::FieldSpec::with_modulus(p, {mod(-3, p), mod(-1, p), 1}));
    const auto cc = canonical_coefficients_mod(p);
    auto elem = [&](const ResidueCoeff& r) {
        const std::uint32_t v[2] = {r.c0, r.c1};
        return field->from_coeffs(v);
    };
    return make_curve(field, elem(cc.a1), elem(cc.a2), elem(cc.a3), elem(cc.a4), elem(cc.a6));
}

std::uint64_t count_points(const WeierstrassCurve& c) {
    const gf::Field& F = *c.field;
    const gf::Elem Q = F.size();
    if (Q > kMaxCountFieldSize) throw std::invalid_argument("field too large for exhaustive counting");
    std::uint64_t n = 1;
    if (F.p() == 2) {
        for (gf::Elem x = 0; x < Q; ++x) {
            const gf::Elem rhs = F.add(F.mul(F.add(F.mul(F.add(x, c.a2), x), c.a4), x), c.a6);
            const gf::Elem lin = F.add(F.mul(c.a1, x), c.a3);
            for (gf::Elem y = 0; y < Q; ++y) n += F.mul(F.add(y, lin), y) == rhs;
        }
        return n;
    }
    // (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2.
    std::vector<std::uint8_t> roots(Q, 0);
    for (gf::Elem y = 0; y < Q; ++y) ++roots[F.mul(y, y)];
    const gf::Elem four = F.from_int(4);
    for (gf::Elem x = 0; x < Q; ++x) {
        const gf::Elem cubic = F.add(F.mul(F.add(F.mul(F.add(x, c.a2), x), c.a4), x), c.a6);
        const gf::Elem lin = F.add(F.mul(c.a1, x), c.a3);
        n += roots[F.add(F.mul(four, cubic), F.mul(lin, lin))];
    }
    return n;
}

std::int64_t trace_of_frobenius(const WeierstrassCurve& c) {
    return static_cast<std::int64_t>(c.field->size()) + 1 - static_cast<std::int64_t>(count_points(c));
}

bool is_descent_form(std::int64_t trace, std::int64_t p) {
    const std::int64_t v = trace + 2 * p;
    return v >= 0 && is_square(BigInt(v));
}

ShimuraReport shimura_check(std::uint32_t p) {
    ShimuraReport r;
    r.p = p;
    const auto curve = reduce_canonical_curve(p);
    r.irreducible = curve.has_value();
    if (!curve) return r;
    r.points = count_points(*curve);
    r.trace = trace_of_frobenius(*curve);
    r.descent_form = is_descent_form(*r.trace, p);
    return r;
}

}  // namespace symmul::curvecheck
