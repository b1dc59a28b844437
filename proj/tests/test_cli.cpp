#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "haarcalc/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    json report;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = haarcalc::run_cli(args, out, err);
    RunResult r{code, json(), err.str()};
    if (!out.str().empty() && out.str()[0] == '{') r.report = json::parse(out.str());
    return r;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"module", "--expr", "Qp(5)"}).code == 2);  // missing --morphism
    RunResult bad = run({"parse", "--expr", "Qp(4)"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("K(4)") != std::string::npos);
}

TEST_CASE("parse and classify verbs") {
    RunResult r = run({"parse", "--expr", "Qp(5)+Qp(5)+T"});
    CHECK(r.code == 0);
    CHECK(r.report["results"]["normalized"] == "Qp(5)^2 + T");
    CHECK(r.report["results"]["classify"]["vector_free"] == true);

    RunResult c = run({"classify", "--expr", "R+Z"});
    CHECK(c.code == 0);
    CHECK(c.report["results"]["vector_free"] == false);
}

TEST_CASE("module verb reproduces 5^(B-A)") {
    RunResult r = run({"module", "--expr", "Qp(5)+R", "--morphism", "mul(5)"});
    CHECK(r.code == 0);
    // A = 1, B = 1: module 1.
    CHECK(r.report["results"]["module"]["rational"].empty());
    CHECK(r.report["results"]["rational"] == true);
    CHECK(r.report.contains("note"));  // Lebesgue convention flagged for R

    RunResult s = run({"module", "--expr", "Qp(5)", "--morphism", "mul(5)"});
    CHECK(s.code == 0);
    CHECK(s.report["results"]["module"]["rational"]["5"] == -1);
    CHECK(s.report["verdicts"][0]["name"] == "rational_module");
    CHECK(s.report["verdicts"][0]["pass"] == true);
}

TEST_CASE("k1 and k0 verbs") {
    RunResult k1 = run({"k1", "--expr", "Qp(7)", "--morphism", "mul(7)"});
    CHECK(k1.code == 0);
    CHECK(k1.report["results"]["7"] == -1);

    RunResult k0 = run({"k0", "--expr", "Z/12"});
    CHECK(k0.code == 0);
    CHECK(k0.report["results"]["2"] == 2);
    CHECK(k0.report["results"]["3"] == 1);
}

TEST_CASE("defect and split verbs") {
    RunResult d = run({"defect", "--kind", "mult-n-z", "--n", "3"});
    CHECK(d.code == 0);
    CHECK(d.report["results"]["value"] == "3");

    RunResult co = run({"defect", "--kind", "compact-open", "--expr", "Qp(5)", "--params", "1"});
    CHECK(co.code == 0);
    CHECK(co.report["results"]["value"] == "1/5");

    RunResult s = run({"split", "--kind", "uniformizer", "--q", "5", "--scale", "7/2"});
    CHECK(s.code == 0);
    CHECK(s.report["results"]["value"] == "7/2");
    CHECK(s.report["verdicts"][0]["name"] == "glue_inverts_split");
    CHECK(s.report["verdicts"][0]["pass"] == true);
}

TEST_CASE("check-axioms verb") {
    RunResult a3 = run({"check-axioms", "--axiom", "3", "--expr", "Qp(3)", "--morphism", "mul(3)"});
    CHECK(a3.code == 0);
    CHECK(a3.report["verdicts"][0]["name"] == "axiom3");
    RunResult a4 = run({"check-axioms", "--axiom", "4", "--expr", "Zp(2)", "--params1", "2",
                        "--params2", "1"});
    CHECK(a4.code == 0);
    RunResult a5 = run({"check-axioms", "--axiom", "5", "--left", "Z/4", "--right", "Z/9"});
    CHECK(a5.code == 0);
}

TEST_CASE("holonomy verb on the two-arrow diagram") {
    std::string diagram = R"x({"vertices":["Qp(5)","Qp(5)"],
        "edges":[{"from":0,"to":1,"morphism":"mul(5)"},
                 {"from":0,"to":1,"morphism":"mul(1)"}]})x";
    RunResult r = run({"holonomy", "--json", diagram, "--cycle", "0,-1"});
    CHECK(r.code == 0);
    CHECK(r.report["results"]["value"] == "1/5");
    CHECK(r.report["results"]["rational"] == true);
}

TEST_CASE("haq verb") {
    RunResult yes = run({"haq", "--expr", "Qp(5)", "--scale", "3/2"});
    CHECK(yes.code == 0);
    CHECK(yes.report["results"]["member"] == true);
    RunResult no = run({"haq", "--expr", "Qp(5)", "--scale", "c"});
    CHECK(no.code == 0);
    CHECK(no.report["results"]["member"] == false);
    CHECK(run({"haq", "--expr", "R", "--scale", "1"}).code == 2);
}

TEST_CASE("gg-pi0 verb") {
    RunResult r = run({"gg-pi0", "--prime", "2", "--max-length", "2"});
    CHECK(r.code == 0);
    CHECK(r.report["results"]["vertices"] == 16);
    CHECK(r.report["verdicts"][0]["pass"] == true);
    CHECK(r.report["verdicts"][1]["pass"] == true);
}
