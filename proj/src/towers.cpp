#include "symmul/towers.hpp"

#include "symmul/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace symmul::towers {

std::string to_string(Family f) {
    switch (f) {
        case Family::AS_quadratic: return "AS_quadratic";
        case Family::AS_base: return "AS_base";
        case Family::Kummer_quadratic: return "Kummer_quadratic";
        case Family::Kummer_base: return "Kummer_base";
    }
    return "?";
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> v{Family::AS_base, Family::Kummer_base, Family::AS_quadratic,
                                       Family::Kummer_quadratic};
    return v;
}

Family parse_family(const std::string& s) {
    for (Family f : all_families())
        if (to_string(f) == s) return f;
    throw std::invalid_argument("unknown tower family: " + s);
}

BigInt TowerId::q() const { return pow(BigInt(p), r); }

BigInt TowerId::field_size() const {
    const BigInt base = q();
    return quadratic() ? base * base : base;
}

std::optional<TowerId> tower_for_field(Family family, std::uint64_t field_size) {
    std::uint64_t q = field_size;
    if (family == Family::AS_quadratic || family == Family::Kummer_quadratic) {
        const BigInt root = isqrt(BigInt(field_size));
        if (root * root != field_size) return std::nullopt;
        q = static_cast<std::uint64_t>(root);
    }
    std::uint32_t p = 0;
    unsigned r = 0;
    if (!gf::prime_power(q, p, r)) return std::nullopt;
    if (family == Family::AS_quadratic || family == Family::AS_base) {
        if (q < 4) return std::nullopt;
        return TowerId{family, p, r};
    }
    if (r != 1 || p < 3) return std::nullopt;
    return TowerId{family, p, 1};
}

namespace {

BigInt big_pow(std::uint64_t b, unsigned e) { return pow(BigInt(b), e); }

// ceil(sqrt(n)) for n >= 0.
BigInt isqrt_ceil(const BigInt& n) {
    const BigInt s = isqrt(n);
    return s * s == n ? s : s + 1;
}

TowerId as_tower(std::uint64_t q, Family family) {
    if (family != Family::AS_base && family != Family::AS_quadratic)
        throw std::invalid_argument("not an Artin-Schreier family");
    std::uint32_t p = 0;
    unsigned r = 0;
    if (!gf::prime_power(q, p, r) || q < 4) throw std::invalid_argument("AS towers need a prime power q >= 4");
    return TowerId{family, p, r};
}

// Genus 0: every divisor of degree -1 is non-special. Genus 1: P - P' is
// non-principal for distinct rational places, and q + 1 - 2 sqrt(q) > 1 once
// q >= 5. Genus >= 2: a non-special divisor of degree g - 1 exists for q >= 4.
bool certified_nonspecial(const TowerId& t, const BigInt& genus_lower, const BigInt& genus_upper) {
    if (genus_upper == 0) return true;
    const BigInt F = t.field_size();
    if (F >= 5) return true;
    return F == 4 && genus_lower >= 2;
}

}  // namespace

BigInt as_genus(std::uint64_t q, unsigned k) {
    std::uint32_t p = 0;
    unsigned r = 0;
    if (!gf::prime_power(q, p, r) || q < 4) throw std::invalid_argument("as_genus needs a prime power q >= 4");
    if (k < 1) throw std::invalid_argument("as_genus needs k >= 1");
    const BigInt Q(q);
    if (k % 2 == 1) return pow(Q, k) + pow(Q, k - 1) - pow(Q, (k + 1) / 2) - 2 * pow(Q, (k - 1) / 2) + 1;
    const Rational g = Rational(pow(Q, k) + pow(Q, k - 1)) - Rational(pow(Q, k / 2 + 1), 2) -
                       Rational(3 * pow(Q, k / 2), 2) - Rational(pow(Q, k / 2 - 1)) + 1;
    if (boost::multiprecision::denominator(g) != 1) throw std::logic_error("non-integral genus");
    return boost::multiprecision::numerator(g);
}

BigInt kummer_genus(unsigned k) {
    if (k % 2 == 0) return big_pow(2, k + 1) - 3 * big_pow(2, k / 2) + 1;
    return big_pow(2, k + 1) - 2 * big_pow(2, (k + 1) / 2) + 1;
}

TowerStep as_step_bounds(std::uint64_t q, unsigned k, unsigned s, Family family) {
    const TowerId t = as_tower(q, family);
    if (k < 1) throw std::invalid_argument("AS steps start at k = 1");
    if (s > t.r) throw std::invalid_argument("AS step index s must lie in [0, r]");
    TowerStep st;
    st.tower = t;
    st.k = k;
    st.s = s;
    const BigInt Q(q), ps = big_pow(t.p, s), prs = big_pow(t.p, t.r - s);
    const BigInt gk = as_genus(q, k), gk1 = as_genus(q, k + 1);
    if (s == 0) st.genus_exact = gk;
    if (s == t.r) st.genus_exact = gk1;
    if (st.genus_exact) {
        st.genus_lower = st.genus_upper = *st.genus_exact;
    } else {
        st.genus_lower = std::max(BigInt(0), (gk - 1) * ps + 1);
        BigInt upper = gk1 / prs + 1;
        upper = std::min(upper, pow(Q, k - 1) * (Q + 1) * ps);
        if (k >= 2) {
            // g * p^{r-s} is an integer below q^k(q+1) - q^{k/2}(q-1).
            const BigInt num = pow(Q, k) * (Q + 1) - isqrt_ceil((Q - 1) * (Q - 1) * pow(Q, k));
            upper = std::min(upper, num / prs);
        }
        st.genus_upper = upper;
    }
    st.places_lower = (Q * Q - 1) * pow(Q, k - 1) * ps;
    st.nonspecial_divisor = certified_nonspecial(t, st.genus_lower, st.genus_upper);
    return st;
}

TowerStep kummer_step_bounds(std::uint32_t p, unsigned k, Family family) {
    if (family != Family::Kummer_base && family != Family::Kummer_quadratic)
        throw std::invalid_argument("not a Kummer family");
    if (p < 3 || !gf::is_prime(p)) throw std::invalid_argument("Kummer towers need an odd prime p");
    TowerStep st;
    st.tower = TowerId{family, p, 1};
    st.k = k;
    st.genus_exact = kummer_genus(k);
    st.genus_lower = st.genus_upper = *st.genus_exact;
    st.places_lower = big_pow(2, k + 1) * (p - 1);
    st.nonspecial_divisor = certified_nonspecial(st.tower, st.genus_lower, st.genus_upper);
    return st;
}

namespace {

TowerStep make_step(const TowerId& t, unsigned k, unsigned s) {
    if (t.kummer()) return kummer_step_bounds(t.p, k, t.family);
    return as_step_bounds(static_cast<std::uint64_t>(t.q()), k, s, t.family);
}

}  // namespace

TowerStep first_step(const TowerId& t) { return make_step(t, t.kummer() ? 0 : 1, 0); }

TowerStep next_step(const TowerStep& st) {
    const TowerId& t = st.tower;
    if (t.kummer()) return make_step(t, st.k + 1, 0);
    if (st.s + 1 < t.r) return make_step(t, st.k, st.s + 1);
    return make_step(t, st.k + 1, 0);
}

std::optional<TowerStep> previous_step(const TowerStep& st) {
    const TowerId& t = st.tower;
    if (t.kummer()) {
        if (st.k == 0) return std::nullopt;
        return make_step(t, st.k - 1, 0);
    }
    if (st.s == t.r) return make_step(t, st.k, t.r - 1);
    if (st.s > 0) return make_step(t, st.k, st.s - 1);
    if (st.k <= 1) return std::nullopt;
    return make_step(t, st.k - 1, t.r - 1);
}

BigInt delta_genus_lower(const TowerStep& st) {
    const TowerId& t = st.tower;
    if (t.kummer()) return big_pow(2, st.k + 1) - big_pow(2, (st.k + 2) / 2);
    if (st.k < 4) throw std::invalid_argument("the AS genus increment bound needs k >= 4");
    if (st.s >= t.r) throw std::invalid_argument("the AS genus increment is defined for s < r");
    return BigInt(t.p - 1) * big_pow(t.p, st.s) * pow(t.q(), st.k);
}

BigInt n0_lower(const TowerStep& st) {
    const TowerId& t = st.tower;
    if (t.kummer()) return big_pow(2, st.k) * (BigInt(t.p) - 3) + 2;
    const BigInt Q = t.q();
    return ceil(Rational((Q + 1) * pow(Q, st.k - 1) * big_pow(t.p, st.s) * (Q - 3), 2));
}

bool degree_n_place_criterion(const BigInt& F, const BigInt& genus, unsigned n) {
    if (n < 1 || F < 2) throw std::invalid_argument("degree_n_place_criterion needs n >= 1, F >= 2");
    // A + F^{(n-1)/2} <= F^{n/2}, squared twice.
    const BigInt A = 2 * genus + 1;
    // F^{n-1} >= 64 A^2 already gives F^{(n-1)/2}(sqrt(F) - 1) >= 8(sqrt(2) - 1) A.
    const auto bitsA = boost::multiprecision::msb(A) + 1;
    if (std::uint64_t{n - 1} * boost::multiprecision::msb(F) >= 2 * bitsA + 6) return true;
    const BigInt Fn1 = pow(F, n - 1);
    const BigInt R = Fn1 * F - Fn1 - A * A;
    return R >= 0 && 4 * A * A * Fn1 <= R * R;
}

const std::vector<SmallCaseFixture>& fixtures() {
    static const std::vector<SmallCaseFixture> table{
        {4, 1, 1, 5, 14, 2, 15, 5, 11},        {8, 1, 1, 9, 124, 12, 117, 7, 11},
        {9, 1, 1, 10, 117, 9, 113, 8, 11},     {5, 2, 0, 6, 60, 10, 53, 5, 11},
        {7, 2, 0, 8, 168, 21, 151, 7, 11},     {11, 2, 0, 12, 660, 55, 611, 9, 12},
        {13, 2, 0, 14, 1092, 78, 1021, 11, 11},
    };
    return table;
}

std::optional<SmallCaseFixture> fixture_lookup(std::uint64_t q, unsigned n) {
    for (const auto& f : fixtures())
        if (f.q == q && n >= f.n_min && n <= f.n_max) return f;
    return std::nullopt;
}

TowerStep fixture_step(const SmallCaseFixture& f) {
    TowerStep st;
    st.tower = as_tower(f.q, Family::AS_base);
    st.k = f.k;
    st.s = f.s;
    st.genus_exact = BigInt(f.g);
    st.genus_lower = st.genus_upper = BigInt(f.g);
    st.places_lower = BigInt(f.N1) + 2 * BigInt(f.N2);
    st.nonspecial_divisor = certified_nonspecial(st.tower, st.genus_lower, st.genus_upper);
    st.fixture = f;
    return st;
}

}  // namespace symmul::towers
