#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hypercalc/cli.hpp"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hypercalc");
    std::ostringstream out, err;
    int code = hypercalc::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("paper examples through the command line") {
    auto r = run({"st", "--expr", "(4+d^2)/(3+d)"});
    CHECK(r.code == 0);
    CHECK(r.out == "4/3\n");
    r = run({"ucont", "--expr", "1/x", "--domain", "(0,inf)"});
    CHECK(r.code == 1);
    CHECK(r.out.find("x = 1*d^1\n") != std::string::npos);
    CHECK(r.out.find("x' = 1*d^2\n") != std::string::npos);
    r = run({"derive", "--expr", "x^3", "--at", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "12\n");
}

TEST_CASE("exit codes per subcommand") {
    CHECK(run({"eval", "--expr", "1+d"}).code == 0);
    CHECK(run({"eval", "--expr", "sqrt(-1)"}).code == 3);
    CHECK(run({"eval", "--expr", "1+"}).code == 2);
    CHECK(run({"eval", "--expr", "x", "--let", "x=2+d"}).out == "2 + 1*d^1\n");
    CHECK(run({"st", "--expr", "sin(1/d)"}).code == 3);
    CHECK(run({"classify", "--expr", "ln(d)"}).out == "Infinite(-)\n");
    CHECK(run({"classify", "--expr", "sin(1/d)"}).code == 3);
    CHECK(run({"compare", "--lhs", "d", "--rhs", "d^2"}).out == "Greater\n");
    CHECK(run({"derive", "--expr", "abs(x)", "--at", "0"}).code == 1);
    CHECK(run({"derive", "--expr", "1/x", "--at", "0"}).code == 3);
    CHECK(run({"limit", "--expr", "x/(1+x)", "--to", "1"}).out == "1/2\n");
    CHECK(run({"limit", "--expr", "1/x", "--to", "0"}).code == 1);
    CHECK(run({"limit", "--expr", "1/x", "--to", "0", "--side", "right"}).out == "+inf\n");
    CHECK(run({"limit", "--expr", "sin(1/x)", "--to", "0"}).code == 3);
    CHECK(run({"limit", "--expr", "x", "--to", "5", "--domain", "[0,1]"}).code == 3);
    CHECK(run({"seqlimit", "--expr", "(n+5)/(n+3)"}).out == "1\n");
    CHECK(run({"cont", "--expr", "x^2", "--at", "1"}).code == 0);
    CHECK(run({"cont", "--expr", "x/abs(x)", "--at", "0"}).code == 3);
    CHECK(run({"ucont", "--expr", "sin(x)"}).code == 0);
    CHECK(run({"converge", "--expr", "x^n", "--limit", "0", "--domain", "[0,1)", "--mode", "uniform"}).code == 1);
    CHECK(run({"converge", "--expr", "x^n", "--limit", "0", "--domain", "[0,1)"}).code == 0);
    CHECK(run({"set", "--set", "[0,1]"}).code == 0);
    CHECK(run({"set", "--set", "[0,inf]"}).code == 2);
    CHECK(run({"set", "--set", "[0,1]", "--op", "union", "--with", "(1,2)"}).out.rfind("set: [0,2)\n", 0) == 0);
    CHECK(run({"filters", "check", "--universe", "3", "--family", "{1},{1,2},{1,3},{1,2,3}"}).code == 0);
    CHECK(run({"filters", "check", "--universe", "3", "--family", "{},{1}"}).code == 1);
    CHECK(run({"filters", "enumerate", "--universe", "3", "--ultra"}).out.find("3 ultrafilters") != std::string::npos);
    CHECK(run({"filters", "partition", "--universe", "3", "--family", "{2},{1,2},{2,3},{1,2,3}", "--parts", "{1},{2},{3}"}).out == "2 {2}\n");
    CHECK(run({"filters", "partition", "--universe", "3", "--family", "{1},{1,2},{1,3},{1,2,3}", "--parts", "{2},{3}"}).code == 2);
    CHECK(run({"filters", "principal", "--universe", "2", "--point", "1"}).out == "{1},{1,2}\n");
    CHECK(run({"transfer", "star", "--prop", "(forall z in C)(exists w in C)[z*w=1]"}).out == "(forall z in *C)(exists w in *C)[z*w=1]\n");
    CHECK(run({"transfer", "star", "--prop", "(forall x)P(x)"}).code == 2);
    CHECK(run({"transfer", "lint", "--prop", "(forall S in P(R))[bounded(S) -> has_sup(S)]"}).code == 1);
    CHECK(run({"transfer", "lint", "--prop", "(forall x in R)[x=x]"}).code == 0);
    CHECK(run({"transfer", "parse", "--prop", "(forall x in R)[x=y]"}).out.find("free: y") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("transfer eval reads a model file") {
    const std::string path = "cli_model_test.json";
    std::ofstream(path) << R"({"B": [1, 2, 3]})";
    CHECK(run({"transfer", "eval", "--prop", "(forall x in B)[x=x]", "--model", path}).code == 0);
    CHECK(run({"transfer", "eval", "--prop", "(forall x,y in B)(exists z in B)[x<z and z<y]", "--model", path}).out == "false\n");
    CHECK(run({"transfer", "eval", "--prop", "(forall x in B)[x=x]", "--model", "missing.json"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("backends and configuration") {
    CHECK(run({"--backend", "exact", "st", "--expr", "exp(1)"}).code == 3);
    CHECK(run({"--backend", "decimal", "--digits", "20", "st", "--expr", "exp(1)"}).out.rfind("2.71828182845904523", 0) == 0);
    CHECK(run({"st", "--expr", "exp(1)"}).code == 0);
    CHECK(run({"--order", "1", "st", "--expr", "d"}).code == 2);
    CHECK(run({"--digits", "8", "st", "--expr", "d"}).code == 2);
    CHECK(run({"--order", "5", "eval", "--expr", "sin(d)"}).out == "1*d^1 - 1/6*d^3 + O(d^5)\n");
    CHECK(run({"eval", "--expr", "sin(d)", "--order", "5"}).out == "1*d^1 - 1/6*d^3 + O(d^5)\n");
    setenv("HYPERCALC_ORDER", "4", 1);
    CHECK(run({"eval", "--expr", "sin(d)"}).out == "1*d^1 - 1/6*d^3 + O(d^4)\n");
    unsetenv("HYPERCALC_ORDER");
}

TEST_CASE("custom probe catalog") {
    const std::string path = "cli_probes_test.json";
    std::ofstream(path) << R"({"infinitesimals": ["d^3", "d^5"], "infinite": ["1/d^3"]})";
    auto r = run({"--probes", path, "--json", "ucont", "--expr", "1/x", "--domain", "(0,inf)"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "Refuted");
    CHECK(j["witness"][0]["value"] == "1*d^3");
    std::ofstream(path) << R"({"infinitesimals": ["1"], "infinite": ["1/d"]})";
    CHECK(run({"--probes", path, "ucont", "--expr", "x"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("json output") {
    auto j = nlohmann::json::parse(run({"--json", "limit", "--expr", "1/x", "--to", "0"}).out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "limit");
    CHECK(j["kind"] == "NoLimit");
    CHECK(j["witness"].size() == 4);
    j = nlohmann::json::parse(run({"--json", "st", "--expr", "1/(d-d)"}).out);
    CHECK(j["error"]["kind"] == "DivisionByZero");
    j = nlohmann::json::parse(run({"--json", "converge", "--expr", "exp(-(x-n)^2)", "--limit", "0", "--mode", "uniform"}).out);
    CHECK(j["backend"] == "decimal");
    CHECK(j["kind"] == "Refuted");
}

TEST_CASE("deterministic output") {
    std::vector<std::string> args = {"--json", "ucont", "--expr", "exp(x)"};
    CHECK(run(args).out == run(args).out);
    args = {"converge", "--expr", "x^n", "--limit", "0", "--domain", "[0,1)", "--mode", "uniform"};
    CHECK(run(args).out == run(args).out);
}
