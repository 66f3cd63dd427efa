#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootlat/expr.hpp"
#include "rootlat/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace rootlat;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ROOTLAT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(FIXTURES_DIR) / name;
}

}  // namespace

TEST_CASE("golden fixtures for the worked examples") {
    RunResult a = run_cli("classify --gens 14,15");
    CHECK(a.code == 0);
    CHECK(a.out == slurp(fixture("classify_14_15.json")));

    RunResult b = run_cli("classify --gens 210");
    CHECK(b.code == 0);
    CHECK(b.out == slurp(fixture("classify_210.json")));

    RunResult d = run_cli("qgraph --gens 14,15 --format dot");
    CHECK(d.code == 0);
    CHECK(d.out == slurp(fixture("qgraph_14_15.dot")));
}

TEST_CASE("identical invocations produce byte-identical output") {
    RunResult a = run_cli("classify --gens 210 --nmax 6");
    RunResult b = run_cli("classify --gens 210 --nmax 6");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    RunResult c = run_cli("roots --type H3 --emit list");
    RunResult e = run_cli("roots --type H3 --emit list");
    CHECK(c.out == e.out);
}

TEST_CASE("field subcommand output") {
    RunResult r = run_cli("field --gens 14,15");
    CHECK(r.code == 0);
    CHECK(r.out == "gens: [14,15]\nmodulus: 420\nsubgroup_order: 4\ndegree: 24\n");
    RunResult q = run_cli("field --gens \"\"");
    CHECK(q.out == "gens: []\nmodulus: 1\nsubgroup_order: 1\ndegree: 1\n");
    RunResult big = run_cli("field --gens 210");
    CHECK(big.out.find("degree: 48") != std::string::npos);
}

TEST_CASE("classify over Q recovers the classical rank-2 picture") {
    RunResult r = run_cli("classify --gens \"\"");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    REQUIRE(j["rank2"].size() == 2);
    CHECK(j["rank2"][0]["label"] == "A1xA1");
    CHECK(j["rank2"][1]["label"] == "I2(3)");
    CHECK(j["rank_ge3"]["A"] == true);
    CHECK(j["rank_ge3"]["B"] == false);
    CHECK(j["rank_ge3"]["H3"] == false);
    CHECK(j["qk"]["vertices"] == ordered_json::array({2, 3}));
}

TEST_CASE("roots subcommand") {
    CHECK(run_cli("roots --type E8 --emit count").out == "240\n");
    CHECK(run_cli("roots --type A2 --emit list").code == 0);
    CHECK(run_cli("roots --type \"I2(14)\" --gens 14,15 --emit count").out == "28\n");
    CHECK(run_cli("roots --type H4 --emit count").out == "120\n");
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("classify --gens 14,x").code == 2);       // bad input
    CHECK(run_cli("roots --type E9 --emit count").code == 2);
    CHECK(run_cli("roots --type E8 --cap 10").code == 3);   // cap exceeded
    CHECK(run_cli("extend 210 14,15").code == 4);           // not a subfield
    CHECK(run_cli("roots --type \"I2(9)\" --gens \"\" --emit count").code == 4);  // not in Q_K
    CHECK(run_cli("kronecker \"1/2\"").code == 5);          // not an algebraic integer
    CHECK(run_cli("kronecker \"1//2\"").code == 2);         // parse error
    CHECK(run_cli("kronecker \"1/0\"").code == 5);          // division by zero
    CHECK(run_cli("roots --gram /nonexistent.json").code == 2);
    CHECK(run_cli("").code == 2);                           // missing subcommand
}

TEST_CASE("kronecker subcommand output lines") {
    CHECK(run_cli("kronecker \"cos(pi*1/7)*2\"").out == "TwoCos(1,7)\n");
    CHECK(run_cli("kronecker \"sqrt(2)\"").out == "TwoCos(1,4)/SmallSet(+sqrt2)\n");
    CHECK(run_cli("kronecker \"3\"").out == "None\n");
    CHECK(run_cli("kronecker \"z(7)\"").out == "RootOfUnity(7)\n");
    CHECK(run_cli("kronecker \"0-2\"").out == "TwoCos(1,1)\n");
}

TEST_CASE("extend subcommand") {
    RunResult r = run_cli("extend 14,15 210");
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    std::map<std::string, std::string> table;
    for (const auto& m : j["classes"])
        table[m["from"]["label"]] = m["to"]["label"];
    CHECK(table.at("I2(14)") == "I2(210)");
    CHECK(table.at("I2(15)") == "I2(210)");
    CHECK(table.at("A1xA1") == "A1xA1");
}

TEST_CASE("--out writes the same bytes as stdout") {
    auto tmp = std::filesystem::temp_directory_path() / "rootlat_cli_out.json";
    std::filesystem::remove(tmp);
    RunResult direct = run_cli("qgraph --gens 14,15 --format json");
    RunResult redirected = run_cli("qgraph --gens 14,15 --format json --out " +
                                   tmp.string());
    CHECK(redirected.code == 0);
    CHECK(redirected.out.empty());
    CHECK(slurp(tmp) == direct.out);
    std::filesystem::remove(tmp);
}

TEST_CASE("emitted gram and root JSON re-parse and re-validate") {
    GramMatrix h3 = gram_of_type(CoxeterType::parse("H3"));
    auto tmp = std::filesystem::temp_directory_path() / "rootlat_h3_gram.json";
    {
        std::ofstream os(tmp);
        os << dump_json(gram_to_json(h3));
    }
    RunResult r = run_cli("roots --gram " + tmp.string() + " --emit list");
    REQUIRE(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["count"] == 30);
    std::vector<RootVec> roots;
    for (const auto& row : j["roots"]) {
        RootVec v;
        for (const auto& cell : row)
            v.push_back(parse_cyc_expr(cell.get<std::string>()));
        roots.push_back(v);
    }
    ValidationReport rep = validate_root_lattice(h3, roots);
    CHECK(rep.all_pass);
    // the gram JSON round-trips through its own renderer
    GramMatrix back = gram_from_json(gram_to_json(h3));
    CHECK(back.size == h3.size);
    for (i64 i = 0; i < 3; ++i)
        for (i64 k = 0; k < 3; ++k) CHECK(back.at(i, k) == h3.at(i, k));
    std::filesystem::remove(tmp);
}
