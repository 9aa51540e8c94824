#include "symmul/serialize.hpp"

#include <limits>

namespace symmul::serialize {

using gf::Elem;
using gf::FieldPtr;

Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json to_json(const towers::TowerStep& st) {
    Json j;
    j["family"] = towers::to_string(st.tower.family);
    j["p"] = st.tower.p;
    j["r"] = st.tower.r;
    j["k"] = st.k;
    j["s"] = st.s;
    j["genus_exact"] = st.genus_exact ? to_json(*st.genus_exact) : Json(nullptr);
    j["genus_lower"] = to_json(st.genus_lower);
    j["genus_upper"] = to_json(st.genus_upper);
    j["places_lower"] = to_json(st.places_lower);
    j["nonspecial_divisor"] = st.nonspecial_divisor;
    j["fixture"] = st.fixture.has_value();
    return j;
}

Json to_json(const bounds::BoundReport& r) {
    Json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["lower"] = to_json(r.lower);
    j["upper"] = to_string(r.upper);
    j["upper_int"] = to_json(r.upper_int);
    j["method"] = bounds::provenance(r);
    if (r.step) {
        j["step"] = to_json(*r.step);
        j["step"]["case"] = std::string(1, r.tower_case);
        j["step"]["evaluated_on"] = r.predecessor ? to_json(*r.predecessor) : Json(nullptr);
    } else {
        j["step"] = nullptr;
    }
    return j;
}

Json to_json(const curvecheck::ShimuraReport& r) {
    Json j;
    j["p"] = r.p;
    j["irreducible"] = r.irreducible;
    j["points"] = r.points ? Json(*r.points) : Json(nullptr);
    j["trace"] = r.trace ? Json(*r.trace) : Json(nullptr);
    j["descent_form"] = r.descent_form ? Json(*r.descent_form) : Json(nullptr);
    return j;
}

namespace {

Json flatten(const gf::Field& F, const std::vector<Elem>& v) {
    Json out = Json::array();
    for (Elem e : v)
        for (auto c : F.coeffs(e)) out.push_back(c);
    return out;
}

Json nested(const gf::Field& F, const std::vector<Elem>& v) {
    Json out = Json::array();
    for (Elem e : v) out.push_back(F.coeffs(e));
    return out;
}

[[noreturn]] void fail(const std::string& what) { throw FormatError("malformed algorithm file: " + what); }

const Json& field_of(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::uint64_t uint_of(const Json& j, const char* key) {
    const Json& v = field_of(j, key);
    if (!v.is_number_unsigned()) fail(std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::vector<std::uint32_t> residues(const Json& j, std::uint32_t p, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array");
    std::vector<std::uint32_t> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= p) fail(what + " holds an entry outside [0, p)");
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

Elem element(const gf::Field& F, const Json& j, const std::string& what) {
    const auto c = residues(j, F.p(), what);
    if (c.size() != F.r()) fail(what + " must have r residues");
    return F.from_coeffs(c);
}

std::vector<Elem> unflatten(const gf::Field& F, const Json& j, std::size_t count, const std::string& what) {
    const auto c = residues(j, F.p(), what);
    if (c.size() != count * F.r()) fail(what + " has the wrong length");
    std::vector<Elem> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(F.from_coeffs(std::span<const std::uint32_t>(c.data() + i * F.r(), F.r())));
    return out;
}

}  // namespace

Json to_json(const chud::SymmetricAlgorithm& alg) {
    const gf::Field& F = *alg.field();
    const auto counts = alg.plan.counts();
    Json j;
    j["version"] = kFormatVersion;
    j["p"] = F.p();
    j["r"] = F.r();
    j["base_modulus"] = F.spec().modulus();
    j["n"] = alg.n();
    j["ext_modulus"] = nested(F, alg.ext->modulus().coeffs());
    Json plan;
    plan["N1"] = counts.N1();
    plan["a1"] = counts.a1;
    plan["N2"] = counts.N2();
    plan["a2"] = counts.a2;
    Json places = Json::array();
    for (const auto& pp : alg.plan.places) {
        Json pj;
        pj["place"] = pp.place.is_infinity() ? Json("inf") : nested(F, pp.place.poly().coeffs());
        pj["derivative"] = pp.derivative;
        places.push_back(pj);
    }
    plan["places"] = places;
    j["plan"] = plan;
    Json terms = Json::array();
    for (const auto& t : alg.terms) {
        Json tj;
        tj["lin"] = nested(F, t.lin);
        tj["c"] = flatten(F, t.c);
        terms.push_back(tj);
    }
    j["terms"] = terms;
    return j;
}

chud::SymmetricAlgorithm algorithm_from_json(const Json& j) {
    try {
        if (field_of(j, "version") != kFormatVersion) fail("unsupported version");
        const auto p = uint_of(j, "p");
        const auto r = uint_of(j, "r");
        const auto n = uint_of(j, "n");
        if (p > std::numeric_limits<std::uint32_t>::max() || !gf::is_prime(p)) fail("p must be prime");
        if (r < 1 || r > 32 || n < 2 || n > 1024) fail("r or n out of range");
        const auto base_modulus = residues(field_of(j, "base_modulus"), static_cast<std::uint32_t>(p), "base_modulus");
        gf::FieldSpec spec = r == 1 ? gf::FieldSpec::canonical(static_cast<std::uint32_t>(p))
                                    : gf::FieldSpec::with_modulus(static_cast<std::uint32_t>(p), base_modulus);
        if (r == 1 && !base_modulus.empty()) fail("prime fields have an empty base_modulus");
        if (spec.r() != r) fail("base_modulus degree differs from r");
        const FieldPtr field = gf::make_field(spec);
        const gf::Field& F = *field;

        const Json& ext_j = field_of(j, "ext_modulus");
        if (!ext_j.is_array()) fail("ext_modulus must be an array");
        std::vector<Elem> ext_c;
        for (const auto& e : ext_j) ext_c.push_back(element(F, e, "ext_modulus coefficient"));
        gf::Poly Q(field, ext_c);
        if (Q.degree() != static_cast<int>(n) || !Q.is_monic() || !gf::is_irreducible(Q))
            fail("ext_modulus must be monic irreducible of degree n");

        const Json& plan_j = field_of(j, "plan");
        chud::EvaluationPlan plan{field, static_cast<unsigned>(n), Q, {}};
        const Json& places_j = field_of(plan_j, "places");
        if (!places_j.is_array()) fail("plan.places must be an array");
        for (const auto& pj : places_j) {
            const Json& d = field_of(pj, "derivative");
            if (!d.is_boolean()) fail("place.derivative must be boolean");
            const Json& pl = field_of(pj, "place");
            if (pl == "inf") {
                plan.places.push_back({rfield::Place::infinity(field), d.get<bool>()});
                continue;
            }
            if (!pl.is_array()) fail("place must be \"inf\" or a coefficient array");
            std::vector<Elem> pc;
            for (const auto& e : pl) pc.push_back(element(F, e, "place coefficient"));
            gf::Poly P(field, pc);
            if (P.degree() < 1 || !P.is_monic() || !gf::is_irreducible(P)) fail("place polynomial is not monic irreducible");
            plan.places.push_back({rfield::Place::finite(P), d.get<bool>()});
        }
        const auto counts = plan.counts();
        if (uint_of(plan_j, "N1") != counts.N1() || uint_of(plan_j, "a1") != counts.a1 ||
            uint_of(plan_j, "N2") != counts.N2() || uint_of(plan_j, "a2") != counts.a2)
            fail("plan counts disagree with the place list");
        chud::validate_plan(plan);

        chud::SymmetricAlgorithm alg{plan, std::make_shared<const gf::Extension>(Q), {}};
        const Json& terms_j = field_of(j, "terms");
        if (!terms_j.is_array()) fail("terms must be an array");
        for (const auto& tj : terms_j) {
            const Json& lin_j = field_of(tj, "lin");
            if (!lin_j.is_array() || lin_j.size() != n) fail("term.lin must hold n elements");
            chud::Term t;
            for (const auto& e : lin_j) t.lin.push_back(element(F, e, "term.lin entry"));
            t.c = unflatten(F, field_of(tj, "c"), n, "term.c");
            alg.terms.push_back(std::move(t));
        }
        return alg;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(std::string("malformed algorithm file: ") + e.what());
    }
}

}  // namespace symmul::serialize
