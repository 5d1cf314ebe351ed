// End-to-end tests of the nlpabs executable: subcommands, formats, exit
// codes, and determinism, driven through a shell the way a user would run it.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "json.hpp"

#include <fstream>
#include <string>

namespace ts = nlpabs::testsupport;
using nlohmann::json;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string prog(const std::string& name) { return ts::corpus_path(name); }

// A one-sample queries file so answer counts are predictable.
std::string paper_sample_file() {
    static const std::string path = "cli_single.samples";
    std::ofstream out(path);
    out << "sample(5, Y = [2,1], Z = [3,1]).\n";
    return path;
}

} // namespace

TEST_CASE("graph text output lists counts and classified edges") {
    ts::CliResult r = ts::run_cli("graph " + prog("fact.pl"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "nodes: 4  edges: 3  pmax: 1"));
    CHECK(contains(r.output, "(2,1)<-(0,0)  E0"));
    CHECK(contains(r.output, "(1,1)<-(2,1)  E1"));
    CHECK(contains(r.output, "(2,2)<-(1,1)  E2"));
}

TEST_CASE("graph json output carries the full edge census") {
    ts::CliResult r =
        ts::run_cli("graph " + prog("diffmember.pl") + " --format json");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.output);
    CHECK(out.at("schema") == 1);
    CHECK(out.at("nodes").size() == 12);
    REQUIRE(out.at("edges").size() == 23);
    CHECK(out.at("edges")[0].at("to") == "(1,1)");
    CHECK(out.at("edges")[0].at("from") == "(5,1)");
    CHECK(out.at("edges")[0].at("class") == "E1");
    CHECK(out.at("class_counts").at("E0") == 1);
    CHECK(out.at("class_counts").at("E1") == 12);
    CHECK(out.at("class_counts").at("E2") == 8);
    CHECK(out.at("class_counts").at("E3") == 2);
    CHECK(out.at("pmax") == 5);
}

TEST_CASE("graph dot output is a digraph from sources to destinations") {
    ts::CliResult r =
        ts::run_cli("graph " + prog("fact.pl") + " --format dot");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "digraph"));
    CHECK(contains(r.output, "\"(1,1)\" -> \"(2,2)\""));
}

TEST_CASE("analyze prints one value per edge") {
    ts::CliResult r = ts::run_cli("analyze " + prog("diffmember.pl"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "(5,1)<-(0,0): {Y, Z}"));
    CHECK(contains(r.output, "(3,1)<-(1,1): {L, X}"));
    CHECK(contains(r.output, "(1,2)<-(3,1): {K, L, X}"));
    CHECK(contains(r.output, "(1,3)<-(1,2): {K, L, X}"));
}

TEST_CASE("analyze under the point semantics prints one value per point") {
    ts::CliResult r = ts::run_cli("analyze " + prog("diffmember.pl") +
                                  " --semantics diamond");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "(3,1): {L, X}"));
    CHECK(contains(r.output, "(1,3): {K, L, X}"));
    CHECK(contains(r.output, "(5,2): {X, Y, Z}"));
}

TEST_CASE("analyze flags add statistics and the equation dump") {
    ts::CliResult r = ts::run_cli("analyze " + prog("diffmember.pl") +
                                  " --stats --dump-equations");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "stats: evaluations="));
    CHECK(contains(r.output, "unify operands: 75"));
    CHECK(contains(r.output, "unify("));
}

TEST_CASE("analyze json output pairs indices with rendered values") {
    ts::CliResult r = ts::run_cli("analyze " + prog("diffmember.pl") +
                                  " --format json --stats");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.output);
    CHECK(out.at("schema") == 1);
    CHECK(out.at("semantics") == "flat");
    CHECK(out.at("domain") == "groundness");
    REQUIRE(out.at("values").size() == 23);
    bool found = false;
    for (const auto& v : out.at("values")) {
        if (v.at("index") == "(3,1)<-(1,1)") {
            CHECK(v.at("value") == "{L, X}");
            found = true;
        }
    }
    CHECK(found);
    CHECK(out.at("stats").at("updates").get<std::size_t>() <=
          out.at("stats").at("evaluations").get<std::size_t>());
}

TEST_CASE("check passes a sound analysis against the bounded search") {
    for (const char* sem : {"flat", "diamond"}) {
        CAPTURE(sem);
        ts::CliResult r = ts::run_cli(
            "check " + prog("diffmember.pl") + " --queries " +
            prog("diffmember.samples") + " --semantics " + sem);
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "truncated: no"));
        CHECK(contains(r.output, "0 violations"));
    }
}

TEST_CASE("check fails loudly against a deliberately unsound domain") {
    ts::CliResult r = ts::run_cli(
        "check " + prog("diffmember.pl") + " --queries " +
        prog("diffmember.samples") + " --domain groundness-unsound");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "violation at "));
    CHECK_FALSE(contains(r.output, "\n0 violations"));

    ts::CliResult j = ts::run_cli(
        "check " + prog("diffmember.pl") + " --queries " +
        prog("diffmember.samples") + " --domain groundness-unsound"
        " --format json");
    REQUIRE(j.exit_code == 1);
    json out = json::parse(j.output);
    CHECK(out.at("domain") == "groundness-unsound");
    CHECK_FALSE(out.at("violations").empty());
}

TEST_CASE("trace lists states and the collected answers") {
    ts::CliResult r = ts::run_cli("trace " + prog("diffmember.pl") +
                                  " --queries " + paper_sample_file());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "state 0 depth 0 running:"));
    CHECK(contains(r.output, "truncated: no"));
    CHECK(contains(r.output, "answers: 3"));
    CHECK(contains(r.output, "{X/1, Y/[2,1], Z/[3,1]}"));
    CHECK(contains(r.output, "{X/2, Y/[2,1], Z/[3,1]}"));
    CHECK(contains(r.output, "{X/3, Y/[2,1], Z/[3,1]}"));
}

TEST_CASE("trace caps report truncation") {
    ts::CliResult r = ts::run_cli("trace " + prog("diffmember.pl") +
                                  " --queries " + paper_sample_file() +
                                  " --depth 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "truncated: yes"));

    ts::CliResult m = ts::run_cli("check " + prog("diffmember.pl") +
                                  " --queries " + paper_sample_file() +
                                  " --max-states 1");
    CHECK(contains(m.output, "truncated: yes"));
}

TEST_CASE("usage and input problems exit with code 2") {
    CHECK(ts::run_cli("analyze no_such_file.pl").exit_code == 2);
    CHECK(contains(ts::run_cli("analyze no_such_file.pl").output,
                   "cannot read"));
    CHECK(ts::run_cli("frobnicate " + prog("fact.pl")).exit_code == 2);
    CHECK(ts::run_cli("").exit_code == 2);
    CHECK(ts::run_cli("analyze " + prog("fact.pl") +
                      " --semantics wavy").exit_code == 2);
    CHECK(ts::run_cli("check " + prog("fact.pl")).exit_code == 2);

    ts::CliResult unknown = ts::run_cli("analyze " + prog("fact.pl") +
                                        " --domain typing");
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.output, "unknown domain"));
}

TEST_CASE("help exits cleanly") {
    ts::CliResult r = ts::run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "analyze"));
    CHECK(contains(r.output, "trace"));
}

TEST_CASE("repeated runs are byte-identical") {
    for (const std::string& args :
         {"analyze " + prog("diffmember.pl") + " --format json",
          "analyze " + prog("diffmember.pl") + " --semantics diamond",
          "graph " + prog("diffmember.pl") + " --format json",
          "trace " + prog("diffmember.pl") + " --queries " +
              paper_sample_file()}) {
        CAPTURE(args);
        ts::CliResult a = ts::run_cli(args);
        ts::CliResult b = ts::run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}
