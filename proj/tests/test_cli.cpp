#include "support.hpp"

#include "eulerpoly/cli.hpp"
#include "eulerpoly/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace eulerpoly;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, std::string_view needle) { return hay.find(needle) != std::string::npos; }

bool has_float(const Json& j)
{
    if (j.is_number_float()) return true;
    if (j.is_structured())
        for (const auto& child : j)
            if (has_float(child)) return true;
    return false;
}

fs::path scratch_dir()
{
    const fs::path dir = fs::temp_directory_path() / ("eulerpoly_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("gen")
{
    const Run a = run({"gen", "--family", "q-eulerian", "--q", "2", "--n", "4"});
    CHECK(a.code == kExitPass);
    CHECK(contains(a.out, "16 + 66*x + 36*x^2 + 2*x^3"));
    const Run b = run({"gen", "--family", "general", "--a", "1", "--b", "1", "--c", "1", "--n", "1"});
    CHECK(b.code == kExitPass);
    CHECK(contains(b.out, "n=1: 1 + x\n"));
    CHECK(run({"gen", "--family", "unknown", "--n", "2"}).code == kExitUsage);
    CHECK(run({"gen", "--family", "q-eulerian", "--n", "2"}).code == kExitUsage);
    CHECK(run({"gen", "--family", "q-eulerian", "--q", "2", "--k", "1", "--n", "2"}).code == kExitUsage);
    CHECK(run({"gen", "--family", "q-eulerian", "--q", "-1", "--n", "2"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
}

TEST_CASE("csv output is restricted to integer coefficients")
{
    const Run ok = run({"gen", "--family", "type-b", "--q", "1", "--n", "2", "--format", "csv"});
    CHECK(ok.code == kExitPass);
    CHECK(ok.out == "n,c0,c1,c2\n0,1,0,0\n1,1,1,0\n2,1,6,1\n");
    const Run bad = run({"gen", "--family", "q-eulerian", "--q", "1/2", "--n", "2", "--format", "csv"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.out.empty());
    CHECK(contains(bad.err, "integer"));
}

TEST_CASE("check")
{
    const Run a = run({"check", "--coeffs", "1,10,4", "--props", "bigamma", "--format", "json"});
    CHECK(a.code == kExitPass);
    const Json j = Json::parse(a.out);
    CHECK(j["status"] == "pass");
    const Json& chk = j["results"][0]["checks"][0];
    CHECK(chk["alpha"] == Json::array({"1", "5"}));
    CHECK(chk["beta"] == Json::array({"3"}));

    const Run b = run({"check", "--coeffs", "81,201,75,3", "--props", "bigamma,alt-increasing"});
    CHECK(b.code == kExitFail);
    CHECK(contains(b.out, "bigamma: fails"));
    CHECK(contains(b.out, "alt-increasing: fails"));
    CHECK(contains(b.out, "replay: eulerpoly check --coeffs 81,201,75,3 --props bigamma\n"));

    const Run c = run({"check", "--coeffs", "1,0,-1", "--props", "ratio", "--format", "json"});
    CHECK(c.code == kExitFail);
    const Json jc = Json::parse(c.out);
    CHECK(jc["results"][0]["checks"][0]["verdict"] == "not_applicable");
    CHECK_FALSE(jc["results"][0]["checks"][0]["reason"].get<std::string>().empty());

    CHECK(run({"check", "--coeffs", "1,x,2"}).code == kExitUsage);
    CHECK(run({"check", "--coeffs", "1,2", "--props", "nonsense"}).code == kExitUsage);
    CHECK(run({"check"}).code == kExitUsage);

    const Run fam = run({"check", "--family", "q-eulerian", "--q", "4", "--n", "4", "--props", "ratio"});
    CHECK(fam.code == kExitFail);
    CHECK(contains(fam.out, "a[0] <= a[2]"));

    const Run rev = run({"check", "--coeffs", "16,66,36,2", "--reverse", "--props", "alt-increasing"});
    CHECK(rev.code == kExitPass);
}

TEST_CASE("every failing check carries a replay command that reproduces it")
{
    const Run r = run({"check", "--coeffs", "81,201,75,3", "--format", "json"});
    CHECK(r.code == kExitFail);
    const Json j = Json::parse(r.out);
    std::size_t failing = 0;
    for (const Json& chk : j["results"][0]["checks"]) {
        if (chk["verdict"] == "holds") continue;
        ++failing;
        REQUIRE(chk.contains("replay"));
        std::istringstream words(chk["replay"].get<std::string>());
        std::vector<std::string> args;
        for (std::string w; words >> w;) args.push_back(w);
        REQUIRE(args.front() == "eulerpoly");
        args.erase(args.begin());
        CHECK(run(args).code == kExitFail);
    }
    CHECK(failing >= 3);
}

TEST_CASE("sweep")
{
    CHECK(run({"sweep", "--assert", "theorem1", "--a", "0..5", "--b", "0..5", "--c", "0..5", "--n-max", "20"}).code ==
          kExitPass);
    CHECK(run({"sweep", "--assert", "bigamma-fails", "--family", "q-eulerian", "--q", "3..4", "--n-max", "4"}).code ==
          kExitPass);
    CHECK(run({"sweep", "--assert", "corollaries"}).code == kExitPass);

    const Run v = run({"sweep", "--assert", "bigamma-fails", "--family", "q-eulerian", "--q", "1..2", "--n-max", "5"});
    CHECK(v.code == kExitFail);
    CHECK(contains(v.out, "replay: eulerpoly check --family q-eulerian --q 1 --n 4 --props bigamma"));

    CHECK(run({"sweep", "--assert", "theorem1", "--a", "0..x", "--b", "1", "--c", "1", "--n-max", "3"}).code == kExitUsage);
    CHECK(run({"sweep", "--assert", "theorem1", "--a", "3..1", "--b", "1", "--c", "1", "--n-max", "3"}).code == kExitUsage);
    CHECK(run({"sweep", "--assert", "theorem1", "--a", "1", "--b", "1", "--n-max", "3"}).code == kExitUsage);
    CHECK(run({"sweep", "--assert", "theorem1", "--a", "1", "--b", "1", "--c", "1"}).code == kExitUsage);
    CHECK(run({"sweep", "--assert", "corollaries", "--n-max", "3"}).code == kExitUsage);
    CHECK(run({"sweep", "--assert", "nothing", "--a", "1", "--b", "1", "--c", "1", "--n-max", "3"}).code == kExitUsage);
}

TEST_CASE("oracle")
{
    const Run a = run({"oracle", "--kind", "qeulerian", "--n", "3"});
    CHECK(a.code == kExitPass);
    CHECK(contains(a.out, "x^0: q^3\n"));
    CHECK(contains(a.out, "x^1: q + 3*q^2\n"));
    CHECK(contains(a.out, "x^2: q\n"));

    const Run b = run({"oracle", "--kind", "bigdesc", "--n", "4", "--compare"});
    CHECK(b.code == kExitPass);
    CHECK(contains(b.out, "8 + 14*x + 2*x^2"));
    CHECK(contains(b.out, "equal"));

    CHECK(run({"oracle", "--kind", "typeb", "--n", "9"}).code == kExitUsage);
    CHECK(run({"oracle", "--kind", "typeb", "--n", "4", "--compare"}).code == kExitPass);
    CHECK(run({"oracle", "--kind", "qeulerian", "--n", "5", "--compare"}).code == kExitPass);
    CHECK(run({"oracle", "--kind", "onek", "--k", "3", "--n", "5", "--compare"}).code == kExitPass);
    CHECK(run({"oracle", "--kind", "onek", "--n", "5"}).code == kExitUsage);
    CHECK(run({"oracle", "--kind", "egf", "--family", "one-over-k", "--k", "3", "--n", "8", "--compare"}).code == kExitPass);
    CHECK(run({"oracle", "--kind", "egf", "--family", "type-b", "--q", "1", "--n", "3"}).code == kExitUsage);
    CHECK(run({"oracle", "--kind", "lemma2", "--samples", "200", "--seed", "3"}).code == kExitPass);
    CHECK(run({"oracle", "--kind", "lemma2", "--tuple", "1,2,2,3,3,4,1,1,2,1"}).code == kExitPass);
    CHECK(run({"oracle", "--kind", "lemma2", "--tuple", "1,1,3,3,2,3,1,1,2,0"}).code == kExitUsage);
    CHECK(run({"oracle", "--kind", "bogus", "--n", "3"}).code == kExitUsage);
}

TEST_CASE("json reports round-trip byte for byte")
{
    const std::vector<std::vector<std::string>> commands = {
        {"gen", "--family", "hcd", "--p", "1/2", "--q", "3", "--r", "2/3", "--n", "5", "--format", "json"},
        {"check", "--coeffs", "81,201,75,3", "--format", "json"},
        {"check", "--coeffs", "1/2,7/3,5", "--format", "json"},
        {"sweep", "--assert", "bigamma-fails", "--family", "q-eulerian", "--q", "1..3", "--n-max", "5", "--format", "json"},
        {"oracle", "--kind", "typeb", "--n", "3", "--compare", "--format", "json"},
        {"oracle", "--kind", "lemma2", "--samples", "50", "--format", "json"},
        {"gen", "--family", "unknown", "--format", "json"},
    };
    for (const auto& cmd : commands) {
        const Run r = run(cmd);
        INFO(cmd[0] << " " << cmd[1]);
        REQUIRE_FALSE(r.out.empty());
        const Report report = parse_report(r.out);
        CHECK(serialize(report) == r.out);
        CHECK_FALSE(has_float(Json::parse(r.out)));
        const std::string expected = r.code == kExitPass ? "pass" : r.code == kExitFail ? "fail" : "error";
        CHECK(status_name(report.status) == expected);
    }
    CHECK_THROWS(parse_report("{\"schema_version\": 2, \"command\": \"gen\", \"inputs\": {}, \"results\": [], \"status\": \"pass\"}"));
    CHECK_THROWS(parse_report("{}"));
}

TEST_CASE("rationals serialize as reduced strings")
{
    const Run r = run({"gen", "--family", "q-eulerian", "--q", "2/4", "--n", "2", "--format", "json"});
    CHECK(r.code == kExitPass);
    CHECK(contains(r.out, "\"1/4\""));
    CHECK_FALSE(contains(r.out, "/1\""));
    CHECK_FALSE(contains(r.out, "2/4"));
}

TEST_CASE("config file defaults are overridden by flags")
{
    const fs::path dir = scratch_dir();
    const fs::path cfg = dir / "defaults.cfg";
    std::ofstream(cfg) << "# defaults\nformat = json\nn = 2\n";
    const Run a = run({"gen", "--family", "q-eulerian", "--q", "2", "--config", cfg.string()});
    CHECK(a.code == kExitPass);
    const Json j = Json::parse(a.out);
    CHECK(j["results"].size() == 3);
    const Run b = run({"gen", "--family", "q-eulerian", "--q", "2", "--n", "3", "--format", "text", "--config", cfg.string()});
    CHECK(b.code == kExitPass);
    CHECK(contains(b.out, "n=3: 8 + 14*x + 2*x^2"));

    std::ofstream(dir / "bad.cfg") << "colour=blue\n";
    CHECK(run({"gen", "--family", "q-eulerian", "--q", "2", "--config", (dir / "bad.cfg").string()}).code == kExitUsage);
    CHECK(run({"gen", "--family", "q-eulerian", "--q", "2", "--config", (dir / "missing.cfg").string()}).code == kExitUsage);
    fs::remove_all(dir);
}

TEST_CASE("--out writes the report file and nothing else")
{
    const fs::path dir = scratch_dir();
    const fs::path target = dir / "report.json";
    const Run r = run({"check", "--coeffs", "1,4,1", "--format", "json", "--out", target.string()});
    CHECK(r.code == kExitPass);
    CHECK(r.out.empty());
    std::ifstream in(target);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(parse_report(written).status == Status::pass);
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
    CHECK(entries == 1);
    fs::remove_all(dir);
}

TEST_CASE("help exits cleanly")
{
    const Run r = run({"sweep", "--help"});
    CHECK(r.code == kExitPass);
    CHECK(contains(r.out + r.err, "--assert"));
}
