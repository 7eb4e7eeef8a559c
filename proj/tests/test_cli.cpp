#include "doctest.h"

#include <filesystem>
#include <unistd.h>

#include "hnum/catalog.hpp"
#include "hnum/cli.hpp"
#include "hnum/report.hpp"
#include "test_support.hpp"

using namespace hnum;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hnum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("hnum-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("catalog lists the fixtures and round-trips through the record parser") {
    const Run r = run({"catalog", "--names"});
    CHECK(r.code == 0);
    for (const char* n : {"trefoil", "figure-eight", "8_20", "twist-2", "twist-1", "twist+1", "twist+2", "10_99", "12n106",
                          "T(2,3)"})
        CHECK(r.out.find(std::string(n) + "\n") != std::string::npos);

    const Run full = run({"catalog", "--torus", "2:7"});
    CHECK(full.code == 0);
    const auto recs = parse_link_records(full.out, true);
    CHECK(recs.size() == builtin_catalog().size() + 1);
    CHECK(recs.back().name == "T(2,7)");
    CHECK(write_link_records(recs) == full.out);
    CHECK(run({"catalog", "--torus", "2-7"}).code == 2);
}

TEST_CASE("report on the trefoil") {
    const std::string json_path = (scratch() / "trefoil.json").string();
    const Run r = run({"report", "--catalog", "trefoil", "--json-out", json_path});
    CHECK(r.code == 0);
    CHECK(r.out.find("Sp: 5/6 7/6") != std::string::npos);
    const auto doc = nlohmann::json::parse(slurp(json_path));
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["spectrum"][0]["x"] == "5/6");
    CHECK(doc[0]["spectrum"][1]["x"] == "7/6");
    CHECK(doc[0]["alexander"]["polys"][0] == nlohmann::json{"1", "-1", "1"});
    CHECK(doc[0]["nakanishi"]["value"] == 1);
    CHECK(doc[0]["provenance"]["precision_bits"] == 256);
    CHECK(doc[0]["signatures"][0]["zeta"] == "1/2");
    CHECK(doc[0]["signatures"][0]["sigma"] == -2);
}

TEST_CASE("report on 8_20 shows the p^2 table") {
    const Run r = run({"report", "--catalog", "8_20", "--zeta", "1/6", "--zeta", "5/6", "--zeta-sweep", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("p^2(+1) at #0 = 1") != std::string::npos);
    CHECK(r.out.find("p^2(+1) at #1 = 1") != std::string::npos);
    CHECK(r.out.find("zeta = e^{2 pi i 1/6}  sigma 1  nullity 1") != std::string::npos);
}

TEST_CASE("T(2,3) has the trefoil's invariants") {
    const std::string a = (scratch() / "t23.json").string();
    const std::string b = (scratch() / "tre.json").string();
    REQUIRE(run({"report", "--catalog", "T(2,3)", "--json-out", a}).code == 0);
    REQUIRE(run({"report", "--catalog", "trefoil", "--json-out", b}).code == 0);
    auto ja = nlohmann::json::parse(slurp(a))[0];
    auto jb = nlohmann::json::parse(slurp(b))[0];
    for (const char* key : {"h_numbers", "spectrum", "extended_spectrum_imaginary", "alexander", "nakanishi", "signatures"})
        CHECK(ja[key] == jb[key]);
}

TEST_CASE("report serialization round-trips and output is deterministic") {
    const std::string a = (scratch() / "det1.json").string();
    const std::string b = (scratch() / "det2.json").string();
    const Run r1 = run({"report", "--catalog", "figure-eight", "--catalog", "10_99", "--zeta-sweep", "3", "--json-out", a});
    const Run r2 = run({"report", "--catalog", "figure-eight", "--catalog", "10_99", "--zeta-sweep", "3", "--json-out", b});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(slurp(a) == slurp(b));
    for (const auto& j : nlohmann::json::parse(slurp(a))) CHECK(to_json(report_from_json(j)) == j);
}

TEST_CASE("parse errors carry a position and exit 2") {
    const std::string bad = write("bad.json", "[{\"name\": \"x\",\n  \"seifert\": [[1, 2], [3]]}]");
    Run r = run({"report", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("square") != std::string::npos);

    const std::string syntax = write("syntax.json", "[{\"name\": \"x\",\n \"seifert\": [[1,]]}]");
    r = run({"report", syntax});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    const std::string flt = write("float.json", "[{\"name\": \"x\", \"seifert\": [[1.5]]}]");
    CHECK(run({"report", flt}).code == 2);
    CHECK(run({"report", (scratch() / "missing.json").string()}).code == 2);
    CHECK(run({"report", "--catalog", "trefoil", "--precision", "8"}).code == 2);
    CHECK(run({"report", "--catalog", "trefoil", "--zeta", "1"}).code == 2);
    CHECK(run({"report", "--catalog", "trefoil", "--zeta", "0.5"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("one failing record does not disturb the others") {
    const std::string mixed = write("mixed.json", R"([
  {"name": "good", "seifert": [[-1, 0], [-1, -1]], "variation": [[-1, 1], [0, -1]]},
  {"name": "no-variation", "seifert": [[1]]},
  {"name": "singular", "variation": [[1, 1], [1, 1]]}
])");
    const Run r = run({"report", mixed, "--from-monodromy"});
    CHECK(r.code == 2);
    CHECK(r.out.find("== good ==") != std::string::npos);
    CHECK(r.out.find("no-variation ==\n  status: error") != std::string::npos);
    CHECK(r.out.find("singular ==\n  status: error") != std::string::npos);

    const std::string solo = write("solo.json", R"([{"name": "good", "seifert": [[-1, 0], [-1, -1]]}])");
    const Run s = run({"report", solo});
    CHECK(r.out.substr(0, s.out.size()) == s.out);
}

TEST_CASE("stage-isolated family and the full cross-check") {
    const Run r = run({"report", "--from-monodromy", "--catalog", "10_99", "--catalog", "12n106", "--catalog", "12n508",
                       "--catalog", "12n604", "--catalog", "12n666", "--check-all"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const Run all = run({"report", "--catalog", "trefoil", "--catalog", "5_1", "--catalog", "twist-2", "--catalog",
                         "T(3,4)", "--zeta-sweep", "5", "--check-all"});
    CHECK(all.code == 0);
}

TEST_CASE("skein command: triple and semicontinuity") {
    const std::string tri = write("tri.json", R"([
  {"name": "trefoil", "seifert": [[1, 0], [1, 1]]},
  {"name": "unknot", "seifert": [[1, 0], [1, 0]]},
  {"name": "L0", "seifert": [[1]]}
])");
    const std::string out = (scratch() / "skein.json").string();
    Run r = run({"skein", tri, "--json-out", out});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(slurp(out))["ok"] == true);

    const std::string badtri = write("badtri.json", R"([
  {"name": "a", "seifert": [[-1, 0], [-1, -1]]},
  {"name": "b", "seifert": [[-1, 0], [-1, 0]]},
  {"name": "c", "seifert": [[-1]]}
])");
    r = run({"skein", badtri});
    CHECK(r.code == 2);
    CHECK(r.err.find("invalid skein triple") != std::string::npos);

    const std::string pair = write("pair.json", R"([
  {"name": "trefoil", "seifert": [[-1, 0], [-1, -1]]},
  {"name": "unknot", "seifert": []}
])");
    r = run({"skein", pair, "--hypothesis", "a", "--x", "2/5", "--x", "1/10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x = 2/5  holds") != std::string::npos);
    r = run({"skein", pair, "--hypothesis", "a", "--x", "5/6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("refused") != std::string::npos);
    r = run({"skein", pair, "--hypothesis", "b", "--x", "2/5"});
    CHECK(r.code == 0);
    r = run({"skein", pair});
    CHECK(r.code == 2);
}
