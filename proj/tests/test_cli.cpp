#include "isolab/cli.hpp"
#include "isolab/corpus.hpp"
#include "isolab/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace isolab;
using namespace isolab::cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> & args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string & name)
{
    return (std::filesystem::temp_directory_path() / ("isolab_cli_" + name)).string();
}

std::string write_temp(const std::string & name, const std::string & text)
{
    auto path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

CheckReport report(Verdict verdict, std::string detail = "")
{
    return {"demo", "G=n=1:", {{"lhs", 2}, {"rhs", 1.5}}, verdict, std::move(detail)};
}

} // namespace

TEST_CASE("argument parsing")
{
    auto solve = parse_args({"solve", "--graph", "g.el", "--param", "gamma"});
    CHECK(solve.verb == "solve");
    CHECK(solve.options.at("graph") == "g.el");
    CHECK(solve.options.at("param") == "gamma");

    auto verify = parse_args({"verify", "--suite", "lemma1", "--corpus", "all-connected-n≤5"});
    CHECK(verify.verb == "verify");
    CHECK(verify.options.at("corpus") == "all-connected-n≤5");

    CHECK_THROWS_AS(parse_args({"solve", "--param", "iota"}), UsageError);
    CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse_args({}), UsageError);
    CHECK_THROWS_AS(parse_args({"solve", "--graph", "g.el", "--param", "gamma", "--bogus", "1"}), UsageError);
    CHECK_THROWS_AS(parse_args({"solve", "--graph", "g.el", "--param", "iota"}), UsageError);
    CHECK_THROWS_AS(parse_args({"solve", "--graph", "g.el", "--param", "gamma", "--family", "K2"}), UsageError);
    CHECK_THROWS_AS(parse_args({"solve", "--graph", "g.el", "--param", "iota", "--family", "Q7"}), UsageError);
    CHECK_THROWS_AS(parse_args({"sample", "--n", "8", "--d", "three", "--seed", "1"}), UsageError);

    try {
        parse_args({"solve", "--graph", "g.el", "--param", "iota", "--family", "2*Z9"});
        FAIL("expected a usage error");
    }
    catch (const UsageError & e) {
        CHECK(std::string(e.what()).find("Z9") != std::string::npos);
    }
}

TEST_CASE("reading graphs")
{
    CHECK(read_graph(write_temp("k3.el", "3 3\n0 1\n1 2\n0 2")) == named_graph("K3"));
    CHECK(read_graph(write_temp("k2.dimacs", "p edge 2 1\ne 1 2")) == named_graph("K2"));
    CHECK_THROWS_AS(read_graph(write_temp("bad.el", "2 1\n0 5")), GraphError);
}

TEST_CASE("report emission")
{
    std::ostringstream empty;
    CHECK(emit_report({}, "-", empty) == exit_ok);
    CHECK(empty.str() == "[]\n");

    std::ostringstream failed;
    CHECK(emit_report({report(Verdict::Pass), report(Verdict::Fail, "violated: a <= b [2 vs 1.5]")}, "-", failed) == exit_check_failed);
    auto parsed = json::parse(failed.str());
    CHECK(parsed[1]["verdict"] == "Fail");
    CHECK(parsed[1]["detail"].get<std::string>().find("[2 vs 1.5]") != std::string::npos);
    CHECK(parsed[0]["computed"]["lhs"].is_number_integer());
    CHECK(parsed[0]["computed"]["rhs"] == 1.5);

    std::ostringstream mixed;
    CHECK(emit_report({report(Verdict::Pass), report(Verdict::Vacuous)}, "-", mixed) == exit_ok);

    std::ostringstream unused;
    CHECK_THROWS_AS(emit_report({}, "/nonexistent/dir/report.json", unused), IoError);
}

TEST_CASE("report keys are sorted")
{
    auto text = report_json({report(Verdict::Pass)});
    auto check_id = text.find("\"check_id\"");
    auto computed = text.find("\"computed\"");
    auto detail = text.find("\"detail\"");
    auto instance = text.find("\"instance\"");
    auto verdict = text.find("\"verdict\"");
    CHECK(check_id < computed);
    CHECK(computed < detail);
    CHECK(detail < instance);
    CHECK(instance < verdict);
}

TEST_CASE("construction expressions")
{
    CHECK(evaluate_construction("subdiv(K2, 3)") == Graph(5, {{0, 2}, {2, 3}, {3, 4}, {4, 1}}));
    CHECK(evaluate_construction("cart(K2,K2)").size() == 4);
    CHECK(evaluate_construction("attach(P3, K3@1)").order() == 9);
    CHECK(evaluate_construction("extremalH(2,2,2)") == extremal_H(2, 2, 2));
    CHECK(evaluate_construction(" subdiv( cart(K2, K2) , 1 ) ").order() == 8);
    CHECK_THROWS_AS(evaluate_construction("cart(K2)"), ParseError);
    CHECK_THROWS_AS(evaluate_construction("twist(K2, K2)"), ParseError);
    CHECK_THROWS_AS(evaluate_construction("subdiv(K2, 1) extra"), ParseError);
}

TEST_CASE("end to end")
{
    auto petersen = temp_path("petersen.el");
    CHECK(invoke({"construct", "petersen", "--out", petersen}).code == exit_ok);

    auto gamma = invoke({"solve", "--graph", petersen, "--param", "gamma"});
    CHECK(gamma.code == exit_ok);
    auto g = json::parse(gamma.out);
    CHECK(g["value"] == 3);
    CHECK(g["witness"].size() == 3);

    auto nabla = invoke({"solve", "--graph", petersen, "--param", "nabla", "--engine", "exhaustive"});
    CHECK(json::parse(nabla.out)["value"] == 3);
    CHECK(json::parse(nabla.out)["engine"] == "exhaustive");

    auto packing = invoke({"solve", "--graph", petersen, "--param", "packing", "--family", "C5"});
    CHECK(json::parse(packing.out)["value"] == 2);

    auto info = json::parse(invoke({"info", "--graph", petersen}).out);
    CHECK(info["order"] == 10);
    CHECK(info["regular"] == true);
    CHECK(info["cycle_lengths"] == json::array({5, 6, 8, 9}));

    CHECK(invoke({"solve", "--graph", temp_path("missing.el"), "--param", "gamma"}).code == exit_io);
    CHECK(invoke({"solve", "--graph", write_temp("broken.el", "3 1\n0 x\n"), "--param", "gamma"}).code == exit_usage);
    CHECK(invoke({"sample", "--n", "5", "--d", "3", "--seed", "1"}).code == exit_usage);
    CHECK(invoke({"solve", "--graph", write_temp("null.el", "0 0\n"), "--param", "gamma"}).code == exit_usage);

    auto first = invoke({"sample", "--n", "10", "--d", "3", "--seed", "4"});
    auto second = invoke({"sample", "--n", "10", "--d", "3", "--seed", "4"});
    CHECK(first.code == exit_ok);
    CHECK(first.out == second.out);

    auto report_path = temp_path("report.json");
    CHECK(invoke({"verify", "--suite", "lemma1:K2", "--corpus", "all-connected-n<=4", "--out", report_path}).code == exit_ok);
    std::ifstream in(report_path);
    CHECK(json::parse(in).size() == 20);
    CHECK(invoke({"verify", "--suite", "mod2r:2", "--corpus", "named:K3"}).code == exit_check_failed);
    CHECK(invoke({"verify", "--suite", "nonsense"}).code == exit_usage);
    auto help = invoke({"solve", "--help"});
    CHECK(help.code == exit_ok);
    CHECK(help.out.find("--param") != std::string::npos);
    CHECK(invoke({"verify", "--suite", "lemma1", "--corpus", "empty", "--out", "/nonexistent/dir/r.json"}).code == exit_io);
}

TEST_CASE("solver budget maps to the resource exit code")
{
    auto petersen = temp_path("petersen_budget.el");
    CHECK(invoke({"construct", "petersen", "--out", petersen}).code == exit_ok);
    setenv("ISOLATION_LAB_NODE_BUDGET", "2", 1);
    auto result = invoke({"solve", "--graph", petersen, "--param", "gamma"});
    unsetenv("ISOLATION_LAB_NODE_BUDGET");
    CHECK(result.code == exit_resource);
}
