#include <doctest.h>

#include "symmul/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using symmul::cli::run_cli;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "symmul_test_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("bound") {
    auto r = run({"bound", "--q", "2", "--n", "2"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["version"] == "1");
    CHECK(j["command"] == "bound --q 2 --n 2");
    CHECK(j["payload"]["upper"] == "3");
    CHECK(j["payload"]["method"] == "Exact");

    r = run({"bound", "--q", "5", "--n", "100", "--method", "thm4ii"});
    REQUIRE(r.code == 0);
    j = Json::parse(r.out);
    CHECK(j["payload"]["upper"] == "540");
    CHECK(j["payload"]["upper_int"] == 540);
    CHECK(j["payload"]["method"] == "UniformTheorem4ii");

    r = run({"bound", "--q", "4", "--n", "7", "--method", "thm4i"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["payload"]["upper"] == "553/13");

    r = run({"bound", "--q", "4", "--n", "7", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("method TowerStep{AS_base,k=1,s=1,case=b}") != std::string::npos);
    CHECK(r.out.find("upper 21\n") != std::string::npos);
}

TEST_CASE("bound errors") {
    CHECK(run({"bound", "--q", "6", "--n", "3"}).code == 2);
    CHECK(run({"bound", "--q", "5", "--n", "0"}).code == 2);
    CHECK(run({"bound", "--q", "5"}).code == 2);
    CHECK(run({"bound", "--q", "5", "--n", "3", "--method", "magic"}).code == 2);
    CHECK(run({"bound", "--q", "5", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(run({"bound", "--q", "9", "--n", "30", "--method", "thm4ii"}).code == 3);
    CHECK(run({"bound", "--q", "5", "--n", "3", "--method", "kummer_base"}).code == 3);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table csv") {
    const auto r = run({"table", "--q", "4", "--n-max", "11"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == std::vector<std::string>{"n", "lower", "upper", "upper_int", "method", "step"});
    CHECK(rows[2] == std::vector<std::string>{"2", "3", "3", "3", "Exact", ""});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 6);
        CHECK(std::stoi(rows[i][0]) == static_cast<int>(i));
        CHECK(std::stoi(rows[i][1]) == 2 * static_cast<int>(i) - 1);
        if (i >= 5 && rows[i][4] == "TowerStep") CHECK(rows[i][5].rfind("AS_base k=1 s=1 ", 0) == 0);
    }
    CHECK(rows[7][4] == "TowerStep");
    CHECK(rows[7][5] == "AS_base k=1 s=1 case=b");

    // Round trip: the csv cells equal the json rows.
    const auto j = Json::parse(run({"table", "--q", "4", "--n-max", "11", "--format", "json"}).out);
    const auto& jr = j["payload"]["rows"];
    REQUIRE(jr.size() == 11);
    for (std::size_t i = 0; i < 11; ++i) {
        CHECK(jr[i]["n"] == std::stoi(rows[i + 1][0]));
        CHECK(jr[i]["upper"] == rows[i + 1][2]);
        CHECK(jr[i]["upper_int"] == std::stoi(rows[i + 1][3]));
    }

    const auto md = run({"table", "--q", "5", "--n-max", "3", "--format", "md"});
    CHECK(md.code == 0);
    CHECK(md.out.rfind("| n | lower |", 0) == 0);
    CHECK(run({"table", "--q", "10", "--n-max", "3"}).code == 2);
}

TEST_CASE("fixtures csv") {
    const auto r = run({"fixtures"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0][0] == "q");
    CHECK(rows[1] == std::vector<std::string>{"4", "1", "1", "5", "14", "2", "15", "5", "11"});
}

TEST_CASE("construct and verify round trip") {
    auto r = run({"construct", "--q", "2", "--n", "2"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["payload"]["rank"] == 3);
    CHECK(j["payload"]["verification"]["ok"] == true);

    const auto path = scratch("q5n3.json").string();
    r = run({"construct", "--q", "5", "--n", "3", "--out", path});
    REQUIRE(r.code == 0);
    j = Json::parse(r.out);
    CHECK(j["payload"]["rank"] == 5);
    CHECK(j["payload"]["out"] == path);

    r = run({"verify", "--algo", path});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["payload"]["ok"] == true);
    CHECK(Json::parse(r.out)["payload"]["rank"] == 5);

    // A changed coefficient keeps the file well formed but breaks the product.
    Json doc;
    {
        std::ifstream f(path);
        doc = Json::parse(f);
    }
    const int p = doc["p"];
    auto& cell = doc["terms"][0]["c"][0];
    cell = (cell.get<int>() + 1) % p;
    const auto bad = scratch("q5n3_bad.json").string();
    {
        std::ofstream f(bad);
        f << doc.dump(2);
    }
    r = run({"verify", "--algo", bad});
    CHECK(r.code == 4);
    CHECK(Json::parse(r.out)["payload"]["ok"] == false);

    const auto garbage = scratch("garbage.json").string();
    {
        std::ofstream f(garbage);
        f << "{\"version\": \"1\", \"p\": ";
    }
    CHECK(run({"verify", "--algo", garbage}).code == 2);
    {
        std::ofstream f(garbage);
        f << "{\"version\": \"1\", \"p\": 4}";
    }
    CHECK(run({"verify", "--algo", garbage}).code == 2);
    CHECK(run({"verify", "--algo", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("construct errors") {
    CHECK(run({"construct", "--q", "2", "--n", "9"}).code == 3);
    CHECK(run({"construct", "--q", "6", "--n", "2"}).code == 2);
    CHECK(run({"construct", "--q", "2", "--n", "1"}).code == 2);
}

TEST_CASE("audit-costs") {
    auto r = run({"audit-costs"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["payload"]["ok"] == true);
    CHECK(j["payload"]["failures"] == 0);
    CHECK(j["payload"]["points"].get<int>() > 0);
    CHECK(j["payload"]["rows"].empty());

    r = run({"audit-costs", "--grid", "n=1..2,g=0..1,N1=0..3,N2=0..1", "--rows"});
    REQUIRE(r.code == 0);
    j = Json::parse(r.out);
    CHECK(j["payload"]["rows"].size() == j["payload"]["points"].get<std::size_t>());

    CHECK(run({"audit-costs", "--grid", "n=1..x"}).code == 2);
    CHECK(run({"audit-costs", "--grid", "h=1..2"}).code == 2);
    CHECK(run({"audit-costs", "--grid", "n=3..2"}).code == 2);
}

TEST_CASE("shimura-check") {
    auto r = run({"shimura-check"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out)["payload"];
    CHECK(j["p"] == 11);
    CHECK(j["irreducible"] == true);
    CHECK(j["points"] == 100);
    CHECK(j["trace"] == 22);
    CHECK(j["descent_form"] == false);

    // 13 is a square mod 3 and mod 17 but not mod 7.
    r = run({"shimura-check", "--p", "7"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["payload"]["irreducible"] == true);
    CHECK(run({"shimura-check", "--p", "17"}).code == 3);
    CHECK(run({"shimura-check", "--p", "13"}).code == 3);
    CHECK(run({"shimura-check", "--p", "9"}).code == 2);
    CHECK(run({"shimura-check", "--p", "2"}).code == 2);
}

TEST_CASE("determinism") {
    const std::vector<std::vector<std::string>> cmds{{"bound", "--q", "25", "--n", "40"},
                                                     {"table", "--q", "7", "--n-max", "30"},
                                                     {"construct", "--q", "3", "--n", "4"},
                                                     {"shimura-check"}};
    for (const auto& c : cmds) {
        const auto a = run(c), b = run(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
