#include "symmul/bounds.hpp"

#include "symmul/gf.hpp"

#include <numeric>
#include <stdexcept>

namespace symmul::bounds {

using towers::Family;
using towers::TowerStep;

std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "Exact";
        case Method::Winograd: return "Winograd";
        case Method::Shokrollahi: return "Shokrollahi";
        case Method::TowerStep: return "TowerStep";
        case Method::UniformTheorem4i: return "UniformTheorem4i";
        case Method::UniformTheorem4ii: return "UniformTheorem4ii";
        case Method::UniformTheorem5i: return "UniformTheorem5i";
        case Method::UniformTheorem5ii: return "UniformTheorem5ii";
        case Method::Cq: return "Cq";
    }
    return "?";
}

std::string provenance(const BoundReport& r) {
    if (r.method != Method::TowerStep || !r.step) return to_string(r.method);
    return "TowerStep{" + towers::to_string(r.step->tower.family) + ",k=" + std::to_string(r.step->k) +
           ",s=" + std::to_string(r.step->s) + ",case=" + std::string(1, r.tower_case) + "}";
}

namespace {

struct PrimePower {
    std::uint32_t p;
    unsigned r;
};

PrimePower require_prime_power(std::uint64_t q) {
    PrimePower pp{};
    if (!gf::prime_power(q, pp.p, pp.r)) throw std::invalid_argument("q must be a prime power");
    return pp;
}

// q = Q^2 with Q a prime power: returns Q.
std::optional<std::uint64_t> square_root_prime_power(std::uint64_t q) {
    const BigInt root = isqrt(BigInt(q));
    if (root * root != q) return std::nullopt;
    const auto Q = static_cast<std::uint64_t>(root);
    std::uint32_t p = 0;
    unsigned r = 0;
    if (!gf::prime_power(Q, p, r)) return std::nullopt;
    return Q;
}

BoundReport make_report(std::uint64_t q, unsigned n, Rational upper, Method m) {
    BoundReport r;
    r.q = q;
    r.n = n;
    r.lower = 2 * BigInt(n) - 1;
    r.upper = std::move(upper);
    r.upper_int = floor(r.upper);
    r.method = m;
    return r;
}

}  // namespace

std::uint64_t epsilon(std::uint64_t q) {
    require_prime_power(q);
    const BigInt Q(q);
    if (is_square(Q)) return static_cast<std::uint64_t>(2 * isqrt(Q));
    for (auto m = static_cast<std::uint64_t>(isqrt(4 * Q)); m > 0; --m)
        if (std::gcd(m, q) == 1) return m;
    return 1;
}

std::optional<ExactValue> exact_small(std::uint64_t q, unsigned n) {
    require_prime_power(q);
    if (n == 0) return std::nullopt;
    if (n == 2) return ExactValue{3, Method::Exact};
    if ((q == 2 && n == 4)) return ExactValue{9, Method::Exact};
    if ((q == 4 || q == 5) && n == 4) return ExactValue{8, Method::Exact};
    if (q == 2 && n == 6) return ExactValue{15, Method::Exact};
    const BigInt two_n = 2 * BigInt(n);
    if (two_n <= BigInt(q) + 2) return ExactValue{2ull * n - 1, Method::Winograd};
    if (two_n < BigInt(q) + 1 + epsilon(q)) return ExactValue{2ull * n, Method::Shokrollahi};
    return std::nullopt;
}

Rational cq_constant(std::uint64_t q) {
    const PrimePower pp = require_prime_power(q);
    if (q == 2) return Rational(4824, 247);
    if (q == 3) return Rational(27);
    const Rational Q(q), p(pp.p);
    if (pp.r == 1) return 3 * (1 + Rational(4) / (Q - 3));
    if (pp.r == 2 && pp.p >= 5) return 2 * (1 + Rational(2) / (p - 3));
    return 6 * (1 + p / (Q - 3));
}

std::optional<Rational> uniform_coefficient(std::uint64_t q, Uniform which) {
    const PrimePower pp = require_prime_power(q);
    switch (which) {
        case Uniform::Thm4i: {
            if (q < 4) return std::nullopt;
            const Rational Q(q), p(pp.p);
            return 3 * (1 + (4 * p / 3) / ((Q - 3) + 2 * (p - 1) * Q / (Q + 1)));
        }
        case Uniform::Thm4ii:
            if (pp.r != 1 || pp.p < 5) return std::nullopt;
            return 3 * (1 + Rational(8, 3 * BigInt(pp.p) - 5));
        case Uniform::Thm5i: {
            const auto root = square_root_prime_power(q);
            if (!root || *root < 4) return std::nullopt;
            const Rational Q(*root), p(pp.p);
            return 2 * (1 + p / ((Q - 3) + (p - 1) * Q / (Q + 1)));
        }
        case Uniform::Thm5ii:
            if (pp.r != 2 || pp.p < 5) return std::nullopt;
            return 2 * (1 + Rational(32, 16 * BigInt(pp.p) - 33));
    }
    return std::nullopt;
}

std::optional<BoundReport> uniform_bound(std::uint64_t q, unsigned n, Uniform which) {
    if (n == 0) return std::nullopt;
    const auto c = uniform_coefficient(q, which);
    if (!c) return std::nullopt;
    static const Method tags[] = {Method::UniformTheorem4i, Method::UniformTheorem4ii, Method::UniformTheorem5i,
                                  Method::UniformTheorem5ii};
    return make_report(q, n, *c * n, tags[static_cast<int>(which)]);
}

Uniform uniform_for(Family family) {
    switch (family) {
        case Family::AS_base: return Uniform::Thm4i;
        case Family::Kummer_base: return Uniform::Thm4ii;
        case Family::AS_quadratic: return Uniform::Thm5i;
        case Family::Kummer_quadratic: return Uniform::Thm5ii;
    }
    return Uniform::Thm4i;
}

bool tower_applicable(std::uint64_t q, unsigned n, Family family) {
    require_prime_power(q);
    const auto t = towers::tower_for_field(family, q);
    if (!t || (t->kummer() && t->p < 5)) return false;
    return 2 * BigInt(n) >= BigInt(q) + 1 + epsilon(q);
}

bool step_satisfies(const TowerStep& st, unsigned n) {
    const BigInt& g = st.genus_for_upper_bounds();
    return st.nonspecial_divisor && st.places_lower >= 2 * BigInt(n) + 2 * g - 1 &&
           towers::degree_n_place_criterion(st.tower.field_size(), g, n);
}

std::optional<TowerStep> select_step(std::uint64_t q, unsigned n, Family family) {
    if (!tower_applicable(q, n, family)) return std::nullopt;
    if (family == Family::AS_base)
        if (const auto f = towers::fixture_lookup(q, n)) return towers::fixture_step(*f);
    const auto tower = *towers::tower_for_field(family, q);
    TowerStep st = towers::first_step(tower);
    // Past the first step meeting the place count the genus only grows, so
    // a missing degree-n place there is final.
    for (;;) {
        const BigInt& g = st.genus_for_upper_bounds();
        if (st.nonspecial_divisor && st.places_lower >= 2 * BigInt(n) + 2 * g - 1)
            return step_satisfies(st, n) ? std::optional<TowerStep>(st) : std::nullopt;
        st = towers::next_step(st);
    }
}

std::optional<BoundReport> per_n_tower_bound(std::uint64_t q, unsigned n, Family family) {
    const auto st = select_step(q, n, family);
    if (!st) return std::nullopt;
    const bool quadratic = st->tower.quadratic();
    const BigInt N(n);

    auto case_a = [&](const BigInt& g) { return quadratic ? 2 * N + g - 1 : 3 * N + 2 * g; };
    BigInt best = case_a(st->genus_for_upper_bounds());
    char which = 'a';

    const auto prev = towers::previous_step(*st);
    if (prev && prev->nonspecial_divisor &&
        towers::degree_n_place_criterion(prev->tower.field_size(), prev->genus_for_upper_bounds(), n)) {
        const BigInt& g = prev->genus_for_upper_bounds();
        BigInt n0 = floor(Rational(prev->places_lower - 2 * g + 1, 2));
        n0 = std::max(n0, towers::n0_lower(*prev));
        n0 = std::min(n0, N);
        if (n0 >= 1 && 2 * (N - n0) <= prev->places_lower) {
            const BigInt b = quadratic ? 2 * N + g - 1 + 2 * (N - n0) : 3 * n0 + 2 * g + 6 * (N - n0);
            if (b < best) {
                best = b;
                which = 'b';
            }
        }
    }
    BoundReport r = make_report(q, n, Rational(best), Method::TowerStep);
    r.step = *st;
    r.tower_case = which;
    if (which == 'b') r.predecessor = prev;
    return r;
}

std::vector<BoundReport> all_bounds(std::uint64_t q, unsigned n) {
    require_prime_power(q);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<BoundReport> out;
    if (const auto e = exact_small(q, n)) out.push_back(make_report(q, n, Rational(e->value), e->method));
    for (Family f : towers::all_families())
        if (auto r = per_n_tower_bound(q, n, f)) out.push_back(std::move(*r));
    for (Uniform u : {Uniform::Thm4i, Uniform::Thm4ii, Uniform::Thm5i, Uniform::Thm5ii})
        if (auto r = uniform_bound(q, n, u)) out.push_back(std::move(*r));
    out.push_back(make_report(q, n, cq_constant(q) * n, Method::Cq));
    return out;
}

BoundReport best_bound(std::uint64_t q, unsigned n) {
    auto all = all_bounds(q, n);
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].upper < all[best].upper) best = i;
    return all[best];
}

}  // namespace symmul::bounds
