#include "symmul/cli.hpp"

#include "symmul/bounds.hpp"
#include "symmul/chud.hpp"
#include "symmul/costacct.hpp"
#include "symmul/curvecheck.hpp"
#include "symmul/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

namespace symmul::cli {

namespace {

using serialize::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const std::vector<std::string>& args, const Json& payload) {
    std::string command;
    for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
    Json env;
    env["version"] = serialize::kFormatVersion;
    env["command"] = command;
    env["payload"] = payload;
    out << env.dump(2) << "\n";
}

void require_prime_power(std::uint64_t q) {
    std::uint32_t p = 0;
    unsigned r = 0;
    if (!gf::prime_power(q, p, r)) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
}

constexpr unsigned kMaxN = 100000;

void require_n(unsigned n) {
    if (n < 1 || n > kMaxN) throw UsageError("n must lie in [1, " + std::to_string(kMaxN) + "]");
}

std::string step_label(const bounds::BoundReport& r) {
    if (!r.step) return "";
    return towers::to_string(r.step->tower.family) + " k=" + std::to_string(r.step->k) +
           " s=" + std::to_string(r.step->s) + " case=" + std::string(1, r.tower_case);
}

// A single forced method; absent when it does not apply.
std::optional<bounds::BoundReport> forced_bound(std::uint64_t q, unsigned n, const std::string& method) {
    using bounds::Uniform;
    static const std::map<std::string, Uniform> uniform{
        {"thm4i", Uniform::Thm4i}, {"thm4ii", Uniform::Thm4ii}, {"thm5i", Uniform::Thm5i}, {"thm5ii", Uniform::Thm5ii}};
    if (auto it = uniform.find(method); it != uniform.end()) return bounds::uniform_bound(q, n, it->second);
    if (method == "exact") {
        for (const auto& r : bounds::all_bounds(q, n))
            if (r.method == bounds::Method::Exact || r.method == bounds::Method::Winograd ||
                r.method == bounds::Method::Shokrollahi)
                return r;
        return std::nullopt;
    }
    if (method == "cq") return bounds::all_bounds(q, n).back();
    if (method == "tower") {
        std::optional<bounds::BoundReport> best;
        for (auto f : towers::all_families())
            if (auto r = bounds::per_n_tower_bound(q, n, f); r && (!best || r->upper < best->upper)) best = r;
        return best;
    }
    for (auto f : towers::all_families()) {
        std::string name = towers::to_string(f);
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
        if (name == method) return bounds::per_n_tower_bound(q, n, f);
    }
    throw UsageError("unknown method '" + method +
                     "' (expected exact, tower, as_base, as_quadratic, kummer_base, kummer_quadratic, thm4i, "
                     "thm4ii, thm5i, thm5ii or cq)");
}

int cmd_bound(const std::vector<std::string>& args, std::uint64_t q, unsigned n, const std::string& method,
              const std::string& format, std::ostream& out, std::ostream& err) {
    require_prime_power(q);
    require_n(n);
    std::optional<bounds::BoundReport> r = method.empty() ? bounds::best_bound(q, n) : forced_bound(q, n, method);
    if (!r) {
        err << "method '" << method << "' does not apply to q = " << q << ", n = " << n << "\n";
        return kInapplicable;
    }
    if (format == "text") {
        out << "q " << q << "\nn " << n << "\nlower " << r->lower << "\nupper " << to_string(r->upper)
            << "\nupper_int " << r->upper_int << "\nmethod " << bounds::provenance(*r) << "\n";
    } else {
        emit(out, args, serialize::to_json(*r));
    }
    return kOk;
}

int cmd_table(const std::vector<std::string>& args, std::uint64_t q, unsigned n_max, const std::string& format,
              std::ostream& out) {
    require_prime_power(q);
    require_n(n_max);
    std::vector<bounds::BoundReport> rows;
    for (unsigned n = 1; n <= n_max; ++n) rows.push_back(bounds::best_bound(q, n));
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(serialize::to_json(r));
        emit(out, args, Json{{"q", q}, {"rows", arr}});
        return kOk;
    }
    const bool md = format == "md";
    if (md)
        out << "| n | lower | upper | upper_int | method | step |\n|---|---|---|---|---|---|\n";
    else
        out << "n,lower,upper,upper_int,method,step\n";
    for (const auto& r : rows) {
        const std::string cells[] = {std::to_string(r.n), r.lower.str(), to_string(r.upper), r.upper_int.str(),
                                     bounds::to_string(r.method), step_label(r)};
        for (std::size_t i = 0; i < 6; ++i) {
            if (md)
                out << "| " << cells[i] << " ";
            else
                out << (i ? "," : "") << cells[i];
        }
        out << (md ? "|\n" : "\n");
    }
    return kOk;
}

int cmd_fixtures(std::ostream& out) {
    out << "q,k,s,N1,N2,g,Gamma,n_min,n_max\n";
    for (const auto& f : towers::fixtures())
        out << f.q << "," << f.k << "," << f.s << "," << f.N1 << "," << f.N2 << "," << f.g << "," << f.Gamma << ","
            << f.n_min << "," << f.n_max << "\n";
    return kOk;
}

Json verify_json(const chud::VerifyReport& v) {
    Json j;
    j["ok"] = v.ok;
    j["rank"] = v.rank;
    j["pairs_checked"] = v.pairs_checked;
    j["exhaustive"] = v.exhaustive;
    j["failing_basis_pair"] = v.failing_basis_pair
                                  ? Json::array({v.failing_basis_pair->first, v.failing_basis_pair->second})
                                  : Json(nullptr);
    j["problem"] = v.problem;
    return j;
}

int cmd_construct(const std::vector<std::string>& args, std::uint64_t q, unsigned n, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    require_prime_power(q);
    if (n < 2 || n > 64) throw UsageError("construct needs 2 <= n <= 64");
    if (q > 1024) throw UsageError("construct needs q <= 1024");
    const auto field = gf::make_field(gf::FieldSpec::canonical_for_order(q));
    std::optional<chud::EvaluationPlan> plan;
    try {
        plan = chud::plan_evaluation(field, n);
    } catch (const chud::CapacityError& e) {
        err << e.what() << "\n";
        return kInapplicable;
    }
    const auto alg = chud::build_symmetric_algorithm(*plan);
    const auto report = chud::verify_algorithm(alg);
    const Json doc = serialize::to_json(alg);
    Json payload;
    payload["q"] = q;
    payload["n"] = n;
    payload["rank"] = alg.rank();
    payload["verification"] = verify_json(report);
    if (out_path.empty()) {
        payload["algorithm"] = doc;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + out_path);
        f << doc.dump(2) << "\n";
        payload["out"] = out_path;
    }
    emit(out, args, payload);
    return report.ok ? kOk : kVerifyFailed;
}

int cmd_verify(const std::vector<std::string>& args, const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    Json doc;
    try {
        doc = Json::parse(f);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    std::optional<chud::SymmetricAlgorithm> alg;
    try {
        alg = serialize::algorithm_from_json(doc);
    } catch (const serialize::FormatError& e) {
        throw UsageError(e.what());
    }
    const auto report = chud::verify_algorithm(*alg);
    emit(out, args, verify_json(report));
    if (!report.ok) err << "verification failed: " << report.problem << "\n";
    return report.ok ? kOk : kVerifyFailed;
}

struct GridRange {
    int lo, hi;
};

// "n=1..8,g=0..4,N1=0..8,N2=0..4"; omitted keys keep their defaults.
std::map<std::string, GridRange> parse_grid(const std::string& spec) {
    std::map<std::string, GridRange> g{{"n", {1, 8}}, {"g", {0, 4}}, {"N1", {0, 8}}, {"N2", {0, 4}}};
    if (spec.empty()) return g;
    static const std::regex item(R"(^(n|g|N1|N2)=(\d{1,3})(?:\.\.(\d{1,3}))?$)");
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::smatch m;
        if (!std::regex_match(part, m, item)) throw UsageError("bad grid item '" + part + "'");
        const int lo = std::stoi(m[2]);
        const int hi = m[3].matched ? std::stoi(m[3]) : lo;
        if (hi < lo) throw UsageError("empty grid range '" + part + "'");
        g[m[1]] = {lo, hi};
    }
    if (g["n"].lo < 1) throw UsageError("grid n must start at 1 or above");
    return g;
}

int cmd_audit(const std::vector<std::string>& args, const std::string& grid, bool rows, std::ostream& out) {
    auto g = parse_grid(grid);
    std::size_t points = 0, failures = 0;
    Json row_list = Json::array();
    for (int n = g["n"].lo; n <= g["n"].hi; ++n)
        for (int gg = g["g"].lo; gg <= g["g"].hi; ++gg)
            for (int N1 = g["N1"].lo; N1 <= g["N1"].hi; ++N1)
                for (int N2 = g["N2"].lo; N2 <= g["N2"].hi; ++N2)
                    for (int a1 = 0; a1 <= N1; ++a1)
                        for (int a2 = 0; a2 <= N2; ++a2) {
                            const costacct::Context c{n, gg, N1, N2, a1, a2};
                            if (!costacct::hypothesis_holds(c)) continue;
                            ++points;
                            const bool ok = costacct::brute_force_dominance(c);
                            failures += !ok;
                            if (rows || !ok) {
                                const auto b = costacct::theorem8_bounds(c);
                                const auto m = costacct::max_split_cost(c);
                                row_list.push_back({{"n", n},
                                                    {"g", gg},
                                                    {"N1", N1},
                                                    {"N2", N2},
                                                    {"a1", a1},
                                                    {"a2", a2},
                                                    {"max_cost", m ? Json(*m) : Json(nullptr)},
                                                    {"bound1", b->bound1},
                                                    {"ok", ok}});
                            }
                        }
    Json payload;
    Json gj;
    for (const auto& [k, r] : g) gj[k] = Json::array({r.lo, r.hi});
    payload["grid"] = gj;
    payload["points"] = points;
    payload["failures"] = failures;
    payload["ok"] = failures == 0;
    payload["rows"] = row_list;
    emit(out, args, payload);
    return failures == 0 ? kOk : kVerifyFailed;
}

int cmd_shimura(const std::vector<std::string>& args, std::uint32_t p, std::ostream& out, std::ostream& err) {
    if (p == 2 || !gf::is_prime(p)) throw UsageError("p must be an odd prime");
    if (std::uint64_t{p} * p > curvecheck::kMaxCountFieldSize) throw UsageError("p^2 exceeds the counting limit");
    const auto r = curvecheck::shimura_check(p);
    emit(out, args, serialize::to_json(r));
    if (!r.irreducible) {
        err << "t^2 - t - 3 is reducible mod " << p << "; the residue field is not F_{p^2}\n";
        return kInapplicable;
    }
    if (p == 11 && (*r.trace != 22 || *r.descent_form)) return kVerifyFailed;
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified bounds and explicit algorithms for symmetric multiplication in F_{q^n}"};
    app.name("symmul");
    app.require_subcommand(1);

    std::uint64_t q = 0;
    unsigned n = 0, n_max = 0;
    std::uint32_t p = 11;
    std::string method, format, path, grid;
    bool rows = false;
    std::function<int()> action;

    auto* bound = app.add_subcommand("bound", "Best certified bound on mu^sym_q(n)");
    bound->add_option("--q", q, "Field size (prime power)")->required();
    bound->add_option("--n", n, "Extension degree")->required();
    bound->add_option("--method", method, "Force one method");
    bound->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    bound->callback([&] { action = [&] { return cmd_bound(args, q, n, method, format, out, err); }; });

    auto* table = app.add_subcommand("table", "Best bounds for n = 1..n-max");
    table->add_option("--q", q, "Field size (prime power)")->required();
    table->add_option("--n-max", n_max, "Largest n")->required();
    table->add_option("--format", format, "csv, md or json")->check(CLI::IsMember({"csv", "md", "json"}));
    table->callback([&] { action = [&] { return cmd_table(args, q, n_max, format, out); }; });

    auto* fixtures = app.add_subcommand("fixtures", "Embedded small-field tower data as CSV");
    fixtures->callback([&] { action = [&] { return cmd_fixtures(out); }; });

    auto* construct = app.add_subcommand("construct", "Build and verify a genus-0 algorithm");
    construct->add_option("--q", q, "Field size (prime power)")->required();
    construct->add_option("--n", n, "Extension degree")->required();
    construct->add_option("--out", path, "Write the algorithm JSON here");
    construct->callback([&] { action = [&] { return cmd_construct(args, q, n, path, out, err); }; });

    auto* verify = app.add_subcommand("verify", "Re-verify an algorithm file");
    verify->add_option("--algo", path, "Algorithm JSON file")->required();
    verify->callback([&] { action = [&] { return cmd_verify(args, path, out, err); }; });

    auto* audit = app.add_subcommand("audit-costs", "Exhaustive check of the four-case cost bound");
    audit->add_option("--grid", grid, "e.g. n=1..8,g=0..4,N1=0..8,N2=0..4");
    audit->add_flag("--rows", rows, "Emit every grid point");
    audit->callback([&] { action = [&] { return cmd_audit(args, grid, rows, out); }; });

    auto* shimura = app.add_subcommand("shimura-check", "Point count and trace of the reduced genus-1 model");
    shimura->add_option("--p", p, "Odd prime");
    shimura->callback([&] { action = [&] { return cmd_shimura(args, p, out, err); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace symmul::cli
