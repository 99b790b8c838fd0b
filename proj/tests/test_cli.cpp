#include "gtable/cli.hpp"
#include "gtable/gallery.hpp"
#include "gtable/verify.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using gtable::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cup table as LaTeX") {
    auto r = call({"heisenberg", "cup", "--format", "latex"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.rfind("\\begin{tabular}{|c||c|c|c|c|c|c|c|c|c|c|}", 0) == 0);
    CHECK(r.out.find("$H_0^{1,1}$ & $H_0^{1,1}$ & $-6 H_0^{2,2}$") != std::string::npos);
    CHECK(r.out.find("\\end{tabular}") != std::string::npos);
}

TEST_CASE("the format option is accepted before the subcommand") {
    CHECK(call({"--format", "json", "s3"}).out == call({"s3", "--format", "json"}).out);
}

TEST_CASE("extracting the exported spec file reproduces the built-in bracket table") {
    auto spec = gtable::spec_to_json(gtable::gallery::heisenberg_bracket_spec());
    CHECK(gtable::spec_to_json(gtable::parse_spec(spec)) == spec);
    auto built_in = call({"heisenberg", "bracket", "--format", "json"});
    auto from_spec = gtable::to_json(gtable::extract_from_spec(gtable::parse_spec(spec)));
    CHECK(built_in.code == 0);
    CHECK(built_in.out == from_spec);
}

TEST_CASE("coalgebra spec files give the cotable") {
    auto spec = gtable::parse_spec(gtable::spec_to_json(gtable::gallery::s3_coalgebra_spec()));
    CHECK_FALSE(spec.product.has_value());
    CHECK(gtable::cotable_from_spec(spec) == gtable::gallery::s3_cotable_report().computed);
}

TEST_CASE("spec files without explicit summands are decomposed automatically") {
    auto heisenberg = [](const char* e01) {
        return std::string(R"({"group": "SL2", "dim": 3, "action": [[["0",")") + e01 +
               R"(","0"],["0","0","0"],["0","0","0"]],
                   [["1","0","0"],["0","-1","0"],["0","0","0"]],
                   [["0","0","0"],["1","0","0"],["0","0","0"]]],
        "product": [{"i": 0, "j": 1, "k": 2, "c": "1"}, {"i": 1, "j": 0, "k": 2, "c": "-1"}]})";
    };
    // E must map x_{-1} to x_1.
    CHECK_THROWS_AS(gtable::parse_spec(heisenberg("0")), gtable::InvalidModule);
    auto t = gtable::extract_from_spec(gtable::parse_spec(heisenberg("1")));
    // Same table as the built-in one, under default summand names.
    REQUIRE(t.source().size() == 2);
    CHECK(t.source()[0].id == "V_0");
    CHECK(t.source()[1].id == "V_1");
    CHECK(t.entries().size() == 1);
    CHECK(t.coefficient(1, 1, 0) == 1);
}

TEST_CASE("malformed spec files are input errors") {
    CHECK_THROWS_AS(gtable::parse_spec("{"), gtable::ParseError);
    CHECK_THROWS_AS(gtable::parse_spec(R"({"group": "SL2", "dim": 1, "action": []})"), gtable::ParseError);
    CHECK_THROWS_AS(gtable::parse_spec(R"({"group": "SL2", "dim": 1,
        "action": [[["0"]], [["0"]], [["0"]]]})"), gtable::ParseError);
    CHECK_THROWS_AS(gtable::parse_spec(R"({"group": "SL2", "dim": 1, "labeling": "nope",
        "action": [[["0"]], [["0"]], [["0"]]], "product": []})"), gtable::ParseError);
}

TEST_CASE("exit codes") {
    CHECK(call({"s3"}).code == 0);
    CHECK(call({"sl3"}).code == 1);
    CHECK(call({"gln", "--n", "2", "iso"}).code == 2);
    CHECK(call({"matrix-algebra", "--k", "1"}).code == 2);
    CHECK(call({"--format", "yaml", "s3"}).code == 2);
    CHECK(call({"extract", "--spec", "/nonexistent/spec.json"}).code == 2);
    CHECK(call({"verify", "--module", "exactla"}).code == 0);
    CHECK(call({"verify", "--format", "latex"}).code == 2);
}

TEST_CASE("usage errors print help on stderr only") {
    auto r = call({"extract"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("--spec") != std::string::npos);
    CHECK(r.err.find("Spec file schema") != std::string::npos);
}

TEST_CASE("help exits successfully") {
    auto r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("heisenberg") != std::string::npos);
}

TEST_CASE("mismatch diagnostics go to stderr") {
    auto r = call({"sl3"});
    CHECK(r.out.find("V_1'") != std::string::npos);
    CHECK(r.err.find("FixtureMismatch") != std::string::npos);
    CHECK(r.out.find("FixtureMismatch") == std::string::npos);
}

TEST_CASE("JSON output is byte-stable") {
    CHECK(call({"heisenberg", "report", "--format", "json"}).out ==
          call({"heisenberg", "report", "--format", "json"}).out);
}

TEST_CASE("worker count follows GTABLE_THREADS") {
    setenv("GTABLE_THREADS", "1", 1);
    CHECK(gtable::verify::worker_count() == 1);
    auto one = gtable::verify::run_checks(gtable::verify::checks("repkit"), 1);
    auto many = gtable::verify::run_checks(gtable::verify::checks("repkit"), 4);
    CHECK(gtable::verify::render_text(one) == gtable::verify::render_text(many));
    setenv("GTABLE_THREADS", "zero", 1);
    CHECK(gtable::verify::worker_count() >= 1);
    unsetenv("GTABLE_THREADS");
    CHECK_THROWS_AS(gtable::verify::checks("nope"), gtable::ParseError);
}
