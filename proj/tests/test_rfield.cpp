#include <doctest.h>

#include "symmul/rfield.hpp"

#include <random>
#include <set>

using namespace symmul;
using gf::Elem;
using gf::Poly;
using rfield::Place;

namespace {

Poly random_poly(const gf::FieldPtr& f, int degree_bound, std::mt19937& rng) {
    std::uniform_int_distribution<Elem> pick(0, f->size() - 1);
    std::vector<Elem> c(static_cast<std::size_t>(degree_bound + 1));
    for (auto& v : c) v = pick(rng);
    return Poly(f, c);
}

// Local coordinates as a pair (value, derivative) of residue-field elements.
struct Jet {
    gf::Extension::Value v, d;
};

Jet jet(const Poly& f, const Place& P, int bound) {
    auto lv = rfield::evaluate_with_derivative(f, P, bound);
    return {lv.value, *lv.derivative};
}

}  // namespace

TEST_CASE("enumerate_places") {
    auto f2 = gf::make_field(2);
    auto places = rfield::enumerate_places(f2, 2);
    REQUIRE(places.size() == 4);
    CHECK(places[0] == Place::finite(Poly::x(f2)));
    CHECK(places[1] == Place::finite(Poly(f2, {1, 1})));
    CHECK(places[2].is_infinity());
    CHECK(places[3] == Place::finite(Poly(f2, {1, 1, 1})));
    CHECK(rfield::enumerate_places(f2, 1).size() == 3);

    CHECK(rfield::enumerate_places(gf::make_field(5), 1).size() == 6);

    // Degree-2 places over F_4: monic quadratics with no root in F_4.
    auto f4 = gf::make_field(2, 2);
    std::size_t rootless = 0;
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            Poly g(f4, {b, a, 1});
            bool root = false;
            for (Elem x = 0; x < 4; ++x) root = root || g.eval(x) == 0;
            rootless += !root;
        }
    CHECK(rootless == 6);
    CHECK(rfield::enumerate_places(f4, 2).size() - 5 == rootless);

    CHECK_THROWS_AS(rfield::enumerate_places(f2, 3), std::invalid_argument);
    CHECK_THROWS_AS(rfield::enumerate_places(f2, 0), std::invalid_argument);
}

TEST_CASE("place census matches count_irreducibles") {
    for (auto q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        auto f = gf::make_field(gf::FieldSpec::canonical_for_order(q));
        auto places = rfield::enumerate_places(f, 2);
        std::size_t deg1 = 0, deg2 = 0;
        for (const auto& p : places) (p.degree() == 1 ? deg1 : deg2)++;
        CHECK(deg1 == q + 1);
        CHECK(deg2 == gf::count_irreducibles(q, 2));
        CHECK(deg2 == (q * q - q) / 2);
    }
}

TEST_CASE("evaluate examples") {
    auto f5 = gf::make_field(5);
    CHECK(rfield::evaluate(Poly(f5, {1, 0, 1}), Place::finite(Poly(f5, {3, 1})), 2).value == std::vector<Elem>{0});

    // x^3 + x mod (x^2 + x + 1) over F_2 by an independent long division: x^3 = 1, so 1 + x.
    auto f2 = gf::make_field(2);
    auto lv = rfield::evaluate(Poly(f2, {0, 1, 0, 1}), Place::finite(Poly(f2, {1, 1, 1})), 3);
    CHECK(lv.value == std::vector<Elem>{1, 1});
    CHECK_FALSE(lv.derivative.has_value());

    auto f3 = gf::make_field(3);
    CHECK(rfield::evaluate(Poly(f3, {0, 0, 1}), Place::infinity(f3), 2).value == std::vector<Elem>{1});
    CHECK(rfield::evaluate(Poly(f3, {0, 0, 1}), Place::infinity(f3), 3).value == std::vector<Elem>{0});
    CHECK_THROWS_AS(rfield::evaluate(Poly(f3, {0, 0, 1}), Place::infinity(f3), 1), std::invalid_argument);
}

TEST_CASE("evaluate_with_derivative examples") {
    auto f5 = gf::make_field(5);
    auto j = jet(Poly(f5, {0, 0, 1}), Place::finite(Poly(f5, {4, 1})), 2);
    CHECK(j.v == std::vector<Elem>{1});
    CHECK(j.d == std::vector<Elem>{2});

    // (1 + t)^3 over F_2 with binomials mod 2: 1 + t + t^2 + t^3.
    auto f2 = gf::make_field(2);
    const unsigned binom3[] = {1, 3, 3, 1};
    j = jet(Poly(f2, {0, 0, 0, 1}), Place::finite(Poly(f2, {1, 1})), 3);
    CHECK(j.v == std::vector<Elem>{binom3[0] % 2});
    CHECK(j.d == std::vector<Elem>{binom3[1] % 2});

    for (auto q : {2u, 4u, 7u, 9u})
        for (const auto& P : rfield::enumerate_places(gf::make_field(gf::FieldSpec::canonical_for_order(q)), 2)) {
            auto f = P.field();
            const Elem c = f->size() - 1;
            auto jc = jet(Poly::constant(f, c), P, 4);
            if (P.is_infinity()) continue;
            CHECK(jc.v == P.residue_field()->scale(P.residue_field()->one(), c));
            CHECK(jc.d == P.residue_field()->zero());
        }

    auto f3 = gf::make_field(3);
    j = jet(Poly(f3, {0, 2, 1}), Place::infinity(f3), 2);
    CHECK(j.v == std::vector<Elem>{1});
    CHECK(j.d == std::vector<Elem>{2});
}

TEST_CASE("local expansion is a ring map sending the place to the uniformizer") {
    std::mt19937 rng(5);
    for (auto q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto f = gf::make_field(gf::FieldSpec::canonical_for_order(q));
        for (const auto& P : rfield::enumerate_places(f, 2)) {
            const auto& K = *P.residue_field();
            if (!P.is_infinity()) {
                auto jp = jet(P.poly(), P, 2);
                CHECK(jp.v == K.zero());
                CHECK(jp.d == K.one());
                auto jp2 = jet(P.poly() * P.poly(), P, 4);
                CHECK(jp2.v == K.zero());
                CHECK(jp2.d == K.zero());
            }
            for (int t = 0; t < 20; ++t) {
                const int B = 1 + t % 4;
                auto a = random_poly(f, B, rng), b = random_poly(f, B, rng);
                auto ja = jet(a, P, B), jb = jet(b, P, B), jab = jet(a * b, P, 2 * B);
                if (P.is_infinity()) {
                    // Top coefficients of a product.
                    CHECK(jab.v[0] == f->mul(a.coeff(B), b.coeff(B)));
                    CHECK(jab.d[0] == f->add(f->mul(a.coeff(B), b.coeff(B - 1)), f->mul(a.coeff(B - 1), b.coeff(B))));
                    CHECK(ja.v[0] == a.coeff(B));
                    CHECK(ja.d[0] == a.coeff(B - 1));
                } else {
                    CHECK(jab.v == K.mul(ja.v, jb.v));
                    CHECK(jab.d == K.add(K.mul(ja.d, jb.v), K.mul(ja.v, jb.d)));
                    auto jsum = jet(a + b, P, B);
                    CHECK(jsum.v == K.add(ja.v, jb.v));
                    CHECK(jsum.d == K.add(ja.d, jb.d));
                }
            }
        }
    }
}

TEST_CASE("degree-1 order-1 coefficient is the formal derivative at the root") {
    std::mt19937 rng(9);
    for (auto q : {3u, 5u, 8u}) {
        auto f = gf::make_field(gf::FieldSpec::canonical_for_order(q));
        for (Elem a = 0; a < f->size(); ++a) {
            Place P = Place::finite(Poly(f, {f->neg(a), 1}));
            auto g = random_poly(f, 5, rng);
            auto j = jet(g, P, 5);
            CHECK(j.v[0] == g.eval(a));
            CHECK(j.d[0] == g.derivative().eval(a));
        }
    }
}

TEST_CASE("interpolation soundness by exhaustive kernel search") {
    // Any collection of distinct places whose coordinate count reaches 2n - 1
    // separates polynomials of degree <= 2n - 2.
    std::mt19937 rng(13);
    for (auto q : {2u, 3u, 4u, 5u}) {
        auto f = gf::make_field(gf::FieldSpec::canonical_for_order(q));
        const auto places = rfield::enumerate_places(f, 2);
        for (int n = 1; n <= 5; ++n) {
            const int B = 2 * n - 2, T = 2 * n - 1;
            std::uint64_t space = 1;
            for (int i = 0; i < T; ++i) space *= q;
            const int trials = space > 100000 ? 1 : 4;
            for (int trial = 0; trial < trials; ++trial) {
                std::vector<std::size_t> order(places.size());
                for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                std::shuffle(order.begin(), order.end(), rng);
                std::vector<std::pair<std::size_t, bool>> chosen;
                int coords = 0;
                for (auto i : order) {
                    if (coords >= T) break;
                    const bool deriv = rng() % 2 == 1;
                    chosen.emplace_back(i, deriv);
                    coords += static_cast<int>(places[i].degree()) * (deriv ? 2 : 1);
                }
                if (coords < T) continue;  // inventory too small for this n
                // Coordinate columns of each monomial.
                std::vector<std::vector<Elem>> col;
                for (int b = 0; b <= B; ++b) {
                    std::vector<Elem> c;
                    for (auto [i, d] : chosen) {
                        auto lc = rfield::local_coordinates(Poly::monomial(f, b), places[i], B, d);
                        c.insert(c.end(), lc.begin(), lc.end());
                    }
                    col.push_back(c);
                }
                // Odometer over all coefficient vectors, updating the image incrementally.
                std::vector<Elem> digits(T, 0), image(col[0].size(), 0);
                std::uint64_t kernel = 0;
                for (std::uint64_t step = 1; step < space; ++step) {
                    int j = 0;
                    for (;;) {
                        const Elem old = digits[j];
                        const Elem nxt = (old + 1) % q;
                        const Elem delta = f->sub(nxt, old);
                        for (std::size_t m = 0; m < image.size(); ++m) image[m] = f->add(image[m], f->mul(delta, col[j][m]));
                        digits[j] = nxt;
                        if (nxt != 0) break;
                        ++j;
                    }
                    bool zero = true;
                    for (auto v : image) zero = zero && v == 0;
                    kernel += zero;
                }
                CHECK_MESSAGE(kernel == 0, "q=" << q << " n=" << n);
            }
        }
    }
}
