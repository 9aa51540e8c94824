#include "symmul/chud.hpp"

#include <sstream>

namespace symmul::chud {

using gf::Elem;
using gf::Field;
using gf::Poly;
using rfield::Place;

namespace {

using Matrix = std::vector<std::vector<Elem>>;

// Row-reduces `rows` greedily; returns indices of a maximal independent subset in input order.
std::vector<std::size_t> independent_rows(const Field& f, const Matrix& rows, std::size_t width) {
    std::vector<std::vector<Elem>> basis;  // echelon rows, pivot = first nonzero, normalized to 1
    std::vector<std::size_t> pivots, chosen;
    for (std::size_t i = 0; i < rows.size() && chosen.size() < width; ++i) {
        auto v = rows[i];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Elem c = v[pivots[k]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < width; ++j) v[j] = f.sub(v[j], f.mul(c, basis[k][j]));
        }
        std::size_t piv = 0;
        while (piv < width && v[piv] == 0) ++piv;
        if (piv == width) continue;
        const Elem s = f.inv(v[piv]);
        for (auto& e : v) e = f.mul(e, s);
        // Keep earlier rows reduced at the new pivot so later reductions stay one pass.
        for (auto& b : basis) {
            const Elem c = b[piv];
            if (c == 0) continue;
            for (std::size_t j = 0; j < width; ++j) b[j] = f.sub(b[j], f.mul(c, v[j]));
        }
        basis.push_back(std::move(v));
        pivots.push_back(piv);
        chosen.push_back(i);
    }
    return chosen;
}

// Gauss-Jordan inverse of a square matrix; std::nullopt if singular.
std::optional<Matrix> invert(const Field& f, Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Elem>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Elem s = f.inv(a[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = f.mul(a[col][j], s);
            inv[col][j] = f.mul(inv[col][j], s);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Elem c = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = f.sub(a[r][j], f.mul(c, a[col][j]));
                inv[r][j] = f.sub(inv[r][j], f.mul(c, inv[col][j]));
            }
        }
    }
    return inv;
}

// One symmetric product of a local kernel: form applied to both local inputs,
// result added to the local product coordinates with weights `out`.
struct LocalTerm {
    std::vector<Elem> form;
    std::vector<Elem> out;
};

std::vector<LocalTerm> classical_kernel(const Field& f, const Place& P) {
    if (P.degree() == 1) return {{{1}, {1}}};
    // Karatsuba modulo x^2 + c1 x + c0.
    const Elem c0 = P.poly().coeff(0), c1 = P.poly().coeff(1);
    const Elem m1 = f.neg(1);
    return {
        {{1, 0}, {1, m1}},
        {{0, 1}, {f.neg(c0), f.sub(m1, c1)}},
        {{1, 1}, {0, 1}},
    };
}

// Products in R[t]/(t^2) from three products in R: fg, f'g', (f+f')(g+g').
std::vector<LocalTerm> with_derivative(const Field& f, const std::vector<LocalTerm>& inner) {
    const Elem m1 = f.neg(1);
    const Elem outer_form[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    const Elem outer_out[3][2] = {{1, m1}, {0, m1}, {0, 1}};
    std::vector<LocalTerm> out;
    for (int o = 0; o < 3; ++o)
        for (const auto& t : inner) {
            LocalTerm lt;
            for (int blk = 0; blk < 2; ++blk)
                for (auto e : t.form) lt.form.push_back(f.mul(outer_form[o][blk], e));
            for (int blk = 0; blk < 2; ++blk)
                for (auto e : t.out) lt.out.push_back(f.mul(outer_out[o][blk], e));
            out.push_back(std::move(lt));
        }
    return out;
}

std::vector<LocalTerm> local_kernel(const Field& f, const PlanPlace& pp) {
    auto k = classical_kernel(f, pp.place);
    return pp.derivative ? with_derivative(f, k) : k;
}

// First `count` monic irreducible quadratics in canonical order, skipping `exclude`.
std::vector<Poly> first_quadratics(const gf::FieldPtr& field, std::size_t count, const Poly& exclude) {
    std::vector<Poly> out;
    const Elem q = field->size();
    for (Elem c0 = 1; c0 < q && out.size() < count; ++c0)
        for (Elem c1 = 0; c1 < q && out.size() < count; ++c1) {
            Poly g(field, {c0, c1, 1});
            if (g == exclude || !gf::is_irreducible(g)) continue;
            out.push_back(std::move(g));
        }
    return out;
}

}  // namespace

std::size_t degree2_capacity(std::uint64_t q, unsigned n) { return (q * q - q) / 2 - (n == 2 ? 1 : 0); }

PlanCounts plan_counts(std::uint64_t q, unsigned n) {
    if (n < 2) throw std::invalid_argument("extension degree must be at least 2");
    const std::size_t target = 2 * std::size_t{n} - 1;
    const std::size_t cap1 = q + 1, cap2 = degree2_capacity(q, n);
    const std::size_t most = 2 * cap1 + 4 * cap2;
    if (target > most) {
        std::ostringstream msg;
        msg << "genus-0 inventory over F_" << q << " yields at most " << most << " coordinates; " << target
            << " needed (short by " << target - most << ")";
        throw CapacityError(msg.str());
    }
    PlanCounts c;
    c.c1 = std::min(cap1, target);
    std::size_t rem = target - c.c1;
    c.c2 = std::min(cap2, rem / 2);
    rem -= 2 * c.c2;
    if (rem == 0) return c;
    if (rem == 1 && c.c2 < cap2) {
        // One more coordinate: trading a degree-1 place for a degree-2 place costs +2,
        // the same as a derivative upgrade, without using a derivative.
        --c.c1;
        ++c.c2;
        return c;
    }
    // Degree-2 inventory exhausted: upgrade degree-1 places (+2 per coordinate),
    // then degree-2 places (+6 per two coordinates), avoiding a wasted coordinate.
    const std::size_t v = rem > c.c1 ? (rem - c.c1 + 1) / 2 : 0;
    const std::size_t u = rem - 2 * v;
    c.c1 -= u;
    c.a1 += u;
    c.c2 -= v;
    c.a2 += v;
    return c;
}

PlanCounts EvaluationPlan::counts() const {
    PlanCounts c;
    for (const auto& pp : places) {
        if (pp.place.degree() == 1)
            (pp.derivative ? c.a1 : c.c1)++;
        else
            (pp.derivative ? c.a2 : c.c2)++;
    }
    return c;
}

EvaluationPlan make_plan(const gf::FieldPtr& field, unsigned n, const PlanCounts& counts) {
    if (n < 2) throw std::invalid_argument("extension degree must be at least 2");
    EvaluationPlan plan{field, n, gf::find_irreducible(field, n), {}};
    const std::uint64_t q = field->size();
    if (counts.N1() > q + 1 || counts.N2() > degree2_capacity(q, n))
        throw CapacityError("plan counts exceed the place inventory");

    // x + c0 in canonical order, then infinity.
    for (Elem c0 = 0; c0 < q && plan.places.size() < counts.N1(); ++c0)
        plan.places.push_back({Place::finite(Poly(field, {c0, 1})), plan.places.size() < counts.a1});
    if (plan.places.size() < counts.N1()) plan.places.push_back({Place::infinity(field), plan.places.size() < counts.a1});

    const auto quads = first_quadratics(field, counts.N2(), plan.Q);
    if (quads.size() < counts.N2()) throw CapacityError("not enough degree-2 places");
    for (std::size_t i = 0; i < quads.size(); ++i) plan.places.push_back({Place::finite(quads[i]), i < counts.a2});
    validate_plan(plan);
    return plan;
}

EvaluationPlan plan_evaluation(const gf::FieldPtr& field, unsigned n) {
    return make_plan(field, n, plan_counts(field->size(), n));
}

void validate_plan(const EvaluationPlan& plan) {
    if (plan.n < 2) throw std::invalid_argument("extension degree must be at least 2");
    if (plan.Q.degree() != static_cast<int>(plan.n) || !plan.Q.is_monic() || !gf::is_irreducible(plan.Q))
        throw std::invalid_argument("Q must be monic irreducible of degree n");
    for (std::size_t i = 0; i < plan.places.size(); ++i) {
        const auto& P = plan.places[i].place;
        if (!(P.field()->spec() == plan.field->spec())) throw std::invalid_argument("place over a different field");
        if (P.degree() > 2) throw std::invalid_argument("places must have degree 1 or 2");
        if (!P.is_infinity() && P.poly() == plan.Q) throw std::invalid_argument("Q cannot be an evaluation place");
        for (std::size_t j = 0; j < i; ++j)
            if (plan.places[j].place == P) throw std::invalid_argument("evaluation places must be distinct");
    }
    if (plan.counts().coordinates() < 2 * std::size_t{plan.n} - 1)
        throw std::invalid_argument("plan has fewer than 2n - 1 coordinates");
}

CoordinateSystem::CoordinateSystem(gf::FieldPtr field, std::vector<PlanPlace> places, int bound)
    : field_(std::move(field)), places_(std::move(places)), bound_(bound) {
    const auto width = static_cast<std::size_t>(bound_ + 1);
    // Column b holds the coordinates of x^b.
    std::vector<std::vector<Elem>> cols;
    for (std::size_t b = 0; b < width; ++b) cols.push_back(coordinates(Poly::monomial(field_, b)));
    size_ = cols.empty() ? 0 : cols[0].size();
    Matrix rows(size_, std::vector<Elem>(width));
    for (std::size_t m = 0; m < size_; ++m)
        for (std::size_t b = 0; b < width; ++b) rows[m][b] = cols[b][m];
    const auto chosen = independent_rows(*field_, rows, width);
    if (chosen.size() < width) return;
    Matrix square;
    for (auto i : chosen) square.push_back(rows[i]);
    auto inv = invert(*field_, square);
    if (!inv) return;
    left_inverse_.assign(width, std::vector<Elem>(size_, 0));
    for (std::size_t b = 0; b < width; ++b)
        for (std::size_t k = 0; k < width; ++k) left_inverse_[b][chosen[k]] = (*inv)[b][k];
    injective_ = true;
}

std::vector<Elem> CoordinateSystem::coordinates(const Poly& f) const {
    std::vector<Elem> out;
    for (const auto& pp : places_) {
        auto lc = rfield::local_coordinates(f, pp.place, bound_, pp.derivative);
        out.insert(out.end(), lc.begin(), lc.end());
    }
    return out;
}

Poly CoordinateSystem::interpolate(const std::vector<Elem>& coords) const {
    if (!injective_) throw std::logic_error("coordinate system is not injective");
    if (coords.size() != size_) throw std::invalid_argument("coordinate vector has wrong length");
    std::vector<Elem> h(left_inverse_.size(), 0);
    for (std::size_t b = 0; b < h.size(); ++b)
        for (std::size_t m = 0; m < size_; ++m) h[b] = field_->add(h[b], field_->mul(left_inverse_[b][m], coords[m]));
    return Poly(field_, h);
}

gf::Extension::Value SymmetricAlgorithm::multiply(const gf::Extension::Value& x, const gf::Extension::Value& y) const {
    const auto& f = *field();
    auto acc = ext->zero();
    for (const auto& t : terms) {
        Elem lx = 0, ly = 0;
        for (unsigned a = 0; a < n(); ++a) {
            lx = f.add(lx, f.mul(t.lin[a], x.at(a)));
            ly = f.add(ly, f.mul(t.lin[a], y.at(a)));
        }
        const Elem s = f.mul(lx, ly);
        if (s != 0) acc = ext->add(acc, ext->scale(t.c, s));
    }
    return acc;
}

SymmetricAlgorithm build_symmetric_algorithm(const EvaluationPlan& plan) {
    validate_plan(plan);
    const auto& f = *plan.field;
    SymmetricAlgorithm alg{plan, std::make_shared<const gf::Extension>(plan.Q), {}};
    const CoordinateSystem products(plan.field, plan.places, plan.product_bound());
    if (!products.injective()) throw std::logic_error("interpolation matrix is singular for a feasible plan");

    std::size_t offset = 0;
    for (const auto& pp : plan.places) {
        std::vector<std::vector<Elem>> loc;  // local input coordinates of x^a
        for (unsigned a = 0; a < plan.n; ++a)
            loc.push_back(rfield::local_coordinates(Poly::monomial(plan.field, a), pp.place, plan.input_bound(), pp.derivative));
        const std::size_t width = loc[0].size();
        for (const auto& kt : local_kernel(f, pp)) {
            Term t;
            for (unsigned a = 0; a < plan.n; ++a) {
                Elem s = 0;
                for (std::size_t j = 0; j < width; ++j) s = f.add(s, f.mul(kt.form[j], loc[a][j]));
                t.lin.push_back(s);
            }
            std::vector<Elem> w(products.size(), 0);
            for (std::size_t j = 0; j < width; ++j) w[offset + j] = kt.out[j];
            t.c = alg.ext->reduce(products.interpolate(w));
            alg.terms.push_back(std::move(t));
        }
        offset += width;
    }
    return alg;
}

VerifyReport verify_algorithm(const SymmetricAlgorithm& alg, std::uint64_t exhaustive_limit) {
    VerifyReport rep;
    rep.rank = alg.rank();
    const auto& f = *alg.field();
    const unsigned n = alg.n();
    for (const auto& t : alg.terms) {
        bool good = t.lin.size() == n && t.c.size() == n;
        for (auto e : t.lin) good = good && e < f.size();
        for (auto e : t.c) good = good && e < f.size();
        if (!good) {
            rep.problem = "malformed term";
            return rep;
        }
    }
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            auto ea = alg.ext->zero(), eb = alg.ext->zero();
            ea[a] = 1;
            eb[b] = 1;
            ++rep.pairs_checked;
            if (alg.multiply(ea, eb) != alg.ext->reduce(Poly::monomial(alg.field(), a + b))) {
                rep.failing_basis_pair = std::make_pair(a, b);
                rep.problem = "basis pair mismatch";
                return rep;
            }
        }

    std::uint64_t size = 1;
    for (unsigned i = 0; i < n && size <= exhaustive_limit; ++i) size *= f.size();
    if (size <= exhaustive_limit) {
        std::vector<gf::Extension::Value> all;
        gf::Extension::Value v(n, 0);
        for (std::uint64_t i = 0; i < size; ++i) {
            all.push_back(v);
            for (unsigned j = 0; j < n && ++v[j] == f.size(); ++j) v[j] = 0;
        }
        for (const auto& x : all)
            for (const auto& y : all) {
                ++rep.pairs_checked;
                if (alg.multiply(x, y) != alg.ext->mul(x, y)) {
                    rep.problem = "exhaustive check mismatch";
                    return rep;
                }
            }
        rep.exhaustive = true;
    }
    rep.ok = true;
    return rep;
}

}  // namespace symmul::chud
