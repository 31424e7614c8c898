#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "wallx/cli.hpp"

using namespace wallx;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("delta table")
{
    Run r = run({"delta", "--xi-sq", "-6", "--sigma", "0", "--pair", "1/1", "--quad", "0/1", "--degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3\t0\t1/1\n") != std::string::npos);
    CHECK(r.out.rfind("# wallx ", 0) == 0);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"p2", "--c1", "H", "--max-degree", "-1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"p2", "--c1", "E", "--max-degree", "3"}).code == 2);
    CHECK(run({"delta", "--xi-sq", "2", "--degree", "3"}).code == 2);
    CHECK(run({"delta", "--xi-sq", "-6", "--degree", "3", "--pair", "one"}).code == 2);
    CHECK(run({"walls", "--geometry", "blowup-p2", "--parity", "f+g", "--degree", "3"}).code == 2);
    CHECK(run({"verify", "--suite", "everything"}).code == 2);
    CHECK(run({"verify", "--suite", "qin", "--kmax", "0"}).code == 2);
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    std::vector<std::string> args{"p2", "--c1", "0", "--max-degree", "9"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("sign convention") != std::string::npos);
    CHECK(a.out.find("1\t0\t-3/2\n") != std::string::npos);
}

TEST_CASE("JSON round trips")
{
    Run p = run({"p2", "--c1", "H", "--max-degree", "8", "--format", "json"});
    REQUIRE(p.code == 0);
    Json j = Json::parse(p.out);
    CHECK(j.at("convention") == kConvention);
    InvariantTable t = invariant_table_from_json(j);
    CHECK(t == phi_p2_H(8));
    CHECK(json_of(t).dump(2) + "\n" == p.out);
    CHECK(run({"p2", "--c1", "H", "--max-degree", "8", "--pipeline", "wallsum", "--json"}).out == p.out);

    Run d = run({"delta", "--xi-sq", "-7", "--sigma", "1", "--pair", "1/2", "--quad", "3", "--degree", "4", "--json"});
    REQUIRE(d.code == 0);
    DeltaTable dt = delta_table_from_json(Json::parse(d.out));
    CHECK(dt.entries == delta_eval(-7, 1, Cyc8(Rational(1, 2)), Cyc8(3), 4).entries);
    CHECK(json_of(dt).dump(2) + "\n" == d.out);

    Run w = run({"walls", "--geometry", "blowup-p2", "--parity", "h", "--degree", "9", "--json"});
    REQUIRE(w.code == 0);
    std::vector<WallClass> walls;
    for (const auto &x : Json::parse(w.out).at("walls")) {
        walls.push_back(wall_from_json(x));
    }
    CHECK(walls == walls_blowupP2_h(9));

    Run v = run({"verify", "--suite", "walls", "--json"});
    CHECK(v.code == 0);
    Json vj = Json::parse(v.out);
    CHECK(vj.at("passed") == true);
    Report rep = report_from_json(vj.at("reports").at(0));
    CHECK(json_of(rep) == vj.at("reports").at(0));

    QSeries f = f_form(5 * kUnit);
    CHECK(qseries_from_json(json_of(f)) == f);
    Cyc8 c(Rational(1, 3), Rational(-2), Rational(0), Rational(5, 7));
    CHECK(cyc8_from_json(json_of(c)) == c);
    CHECK_THROWS_AS(cyc8_from_json(Json::array({"1/2"})), std::invalid_argument);
}

TEST_CASE("truncation override")
{
    std::vector<std::string> args{"delta", "--xi-sq", "-6", "--degree", "3"};
    CHECK(run({"delta", "--xi-sq", "-6", "--degree", "3", "--trunc", "0"}).code == 1);
    ::setenv("WALLX_TRUNC", "0", 1);
    CHECK(run(args).code == 1);
    CHECK(run({"delta", "--xi-sq", "-6", "--degree", "3", "--trunc", "960"}).code == 0);
    ::setenv("WALLX_TRUNC", "many", 1);
    CHECK(run(args).code == 2);
    ::setenv("WALLX_TRUNC", "960", 1);
    Run r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out.find("truncation 960/48") != std::string::npos);
    ::unsetenv("WALLX_TRUNC");
}

TEST_CASE("verify suites")
{
    Run q = run({"verify", "--suite", "qin", "--kmax", "3"});
    CHECK(q.code == 0);
    CHECK(q.out.find("all suites passed") != std::string::npos);
    CHECK(run({"verify", "--suite", "identities", "--trunc", "960"}).code == 0);
    CHECK(run({"verify", "--suite", "residues"}).code == 0);
}

TEST_CASE("installed binary")
{
    const char *bin = std::getenv("WALLX_BIN");
    if (bin == nullptr) {
        SKIP("WALLX_BIN not set");
    }
    std::string b(bin);
    int st = std::system((b + " p2 --c1 H --max-degree -1 > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(st) == 2);
    st = std::system((b + " delta --xi-sq -6 --sigma 0 --pair 1/1 --quad 0/1 --degree 3 > /dev/null").c_str());
    CHECK(WEXITSTATUS(st) == 0);
    st = std::system((b + " --version > /dev/null").c_str());
    CHECK(WEXITSTATUS(st) == 0);
}
