// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact; the only
// tolerances are the runtime limits below.
#include "gtable/cli.hpp"
#include "gtable/gallery.hpp"
#include "gtable/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gtable;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kDimsLimit = 1.0;
constexpr double kRepresentativesLimit = 1.0;
constexpr double kCupLimit = 5.0;
constexpr double kBracketLimit = 5.0;
constexpr double kSolveLimit = 30.0;
constexpr double kVerifyMapLimit = 1.0;
constexpr double kExamplesLimit = 5.0;
constexpr double kCochainLimit = 60.0;
constexpr double kOracleLimit = 60.0;
constexpr double kGlnLimit = 30.0;
constexpr std::size_t kMinCochainCases = 200;
constexpr std::size_t kMinOracleCases = 100;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void within(Outcome& o, double elapsed, double limit, const std::string& what) {
    if (elapsed >= limit) {
        std::ostringstream os;
        os << what << " took " << elapsed << " s, limit " << limit << " s";
        o.fail(os.str());
    }
}

Outcome heisenberg_dimensions() {
    Outcome o;
    auto t0 = Clock::now();
    auto ctx = gallery::heisenberg_context();
    const std::map<std::pair<int, int>, std::size_t> expected = {{{0, 0}, 1}, {{2, 0}, 2}, {{1, 1}, 4}, {{3, 1}, 2},
                                                                 {{0, 2}, 2}, {{2, 2}, 4}, {{1, 3}, 2}, {{3, 3}, 1}};
    std::size_t total = 0;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            if ((p + q) % 2) continue;
            std::size_t dim = cochain::cohomology(ctx, p, q).dim();
            total += dim;
            auto it = expected.find({p, q});
            if (dim != (it == expected.end() ? 0 : it->second))
                o.fail("H^{" + std::to_string(p) + "," + std::to_string(q) + "} has dimension " + std::to_string(dim));
        }
    if (total != 18) o.fail("total even dimension " + std::to_string(total));
    within(o, seconds_since(t0), kDimsLimit, "cohomology");
    return o;
}

Outcome representatives() {
    Outcome o;
    auto t0 = Clock::now();
    for (const auto& c : gallery::check_representatives(gallery::heisenberg_context()))
        if (!c.ok()) o.fail(c.id + " fails its checks");
    within(o, seconds_since(t0), kRepresentativesLimit, "representative checks");
    return o;
}

Outcome table_matches(bool cup) {
    Outcome o;
    auto t0 = Clock::now();
    auto r = gallery::heisenberg_compute();
    auto diffs = cup ? gallery::table_differences(r.cup, gallery::cup_fixture())
                     : gallery::table_differences(r.bracket, gallery::bracket_fixture());
    if (!diffs.empty()) o.fail(diffs.front() + " (" + std::to_string(diffs.size()) + " cells differ)");
    within(o, seconds_since(t0), cup ? kCupLimit : kBracketLimit, "extraction");
    return o;
}

Outcome isomorphism() {
    Outcome o;
    auto t0 = Clock::now();
    gallery::IsomorphismSearch found;
    try {
        found = gallery::find_isomorphism();
    } catch (const NotFound& e) {
        o.fail(e.what());
    }
    within(o, seconds_since(t0), kSolveLimit, "isomorphism search");
    auto he = gallery::heisenberg_compute();
    auto gl = gallery::gl3_sl2_tables();
    auto archived = gallery::archived_isomorphism();
    if (o.pass && !(found.f == archived)) o.fail("search result differs from the archived map");
    auto t1 = Clock::now();
    if (!check_morphism(he.bracket, gl.bracket, archived)) o.fail("archived map fails on the bracket tables");
    if (!check_morphism(he.cup, gl.product, archived)) o.fail("archived map fails on the product tables");
    if (la::rank(plain_map(archived)) != archived.source().size()) o.fail("archived map is not invertible");
    within(o, seconds_since(t1), kVerifyMapLimit, "verification");
    return o;
}

Outcome worked_examples() {
    Outcome o;
    auto t0 = Clock::now();
    std::vector<gallery::FixtureReport> reports = {gallery::s3_table_report(), gallery::s3_cotable_report()};
    for (int k = 2; k <= 5; ++k) reports.push_back(gallery::mk_report(k));
    reports.push_back(gallery::sl3_report());
    reports.push_back(gallery::poly_report(4));
    for (const auto& r : reports)
        if (!r.ok())
            o.fail(r.name + ": " + r.mismatches.front() + " (" + std::to_string(r.mismatches.size()) +
                   " cells differ)");
    within(o, seconds_since(t0), kExamplesLimit, "worked examples");
    return o;
}

Outcome property_checks(const std::vector<verify::Check>& list, std::size_t min_cases, double limit,
                        const std::string& what) {
    Outcome o;
    auto t0 = Clock::now();
    for (const auto& r : verify::run_checks(list, verify::worker_count())) {
        if (!r.passed) o.fail(r.suite + "/" + r.name + ": " + r.detail);
        if (r.cases < min_cases)
            o.fail(r.suite + "/" + r.name + " ran " + std::to_string(r.cases) + " cases, need " +
                   std::to_string(min_cases));
    }
    within(o, seconds_since(t0), limit, what);
    return o;
}

Outcome cochain_properties() {
    std::vector<verify::Check> list;
    for (auto& c : verify::checks("supercochain"))
        if (c.name.find("[dim=") != std::string::npos) list.push_back(std::move(c));
    return property_checks(list, kMinCochainCases, kCochainLimit, "property suite");
}

Outcome morphism_oracle() {
    std::vector<verify::Check> list;
    for (auto& c : verify::checks("gtable"))
        if (c.name == "morphism-oracle" || c.name == "corollary-agreement") list.push_back(std::move(c));
    return property_checks(list, kMinOracleCases, kOracleLimit, "oracle corpus");
}

Outcome gln_family() {
    Outcome o;
    auto t0 = Clock::now();
    for (int n = 2; n <= 4; ++n)
        if (!gallery::gln_axioms(n).ok()) o.fail("axioms fail for n = " + std::to_string(n));
    auto t = gallery::gln_tables(3);
    auto f = gallery::gln_fixture(3);
    for (const auto& d : gallery::table_differences(t.product, f.product)) o.fail("product table: " + d);
    for (const auto& d : gallery::table_differences(t.bracket, f.bracket)) o.fail("bracket table: " + d);
    within(o, seconds_since(t0), kGlnLimit, "gl(n) checks");
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome round_trips(const std::string& golden_dir) {
    std::vector<verify::Check> list;
    for (auto& c : verify::checks("gtable"))
        if (c.name == "extract-expand-roundtrip" || c.name == "json-roundtrip") list.push_back(std::move(c));
    Outcome o = property_checks(list, 0, 1e9, "round trips");

    std::ifstream cases(golden_dir + "/cases.tsv");
    if (!cases) o.fail("cannot read " + golden_dir + "/cases.tsv");
    std::string line;
    std::size_t compared = 0;
    while (std::getline(cases, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        for (std::string f; std::getline(ls, f, '\t');) fields.push_back(f);
        if (fields.size() < 3) continue;
        std::vector<std::string> args;
        if (fields.size() > 3) {
            std::stringstream as(fields[3]);
            for (std::string a; as >> a;) args.push_back(a);
        }
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        ++compared;
        if (std::to_string(code) != fields[1]) o.fail(fields[0] + ": exit code " + std::to_string(code));
        if (out.str() != read_file(golden_dir + "/" + fields[2] + ".out")) o.fail(fields[0] + ": stdout differs");
        if (err.str() != read_file(golden_dir + "/" + fields[2] + ".err")) o.fail(fields[0] + ": stderr differs");
    }
    if (compared == 0) o.fail("no golden cases");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    std::string golden_dir = "tests/golden";
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
    app.add_option("--golden-dir", golden_dir, "Directory with cases.tsv and the golden files");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Heisenberg even cohomology: dimension 18, per-bidegree dimensions", heisenberg_dimensions},
        {"representatives: cocycles, non-exact, highest weight", representatives},
        {"cup product table equals the reference", [] { return table_matches(true); }},
        {"bracket table equals the reference", [] { return table_matches(false); }},
        {"isomorphism with gl(3) x| gl(3)_ab for both structures, invertible", isomorphism},
        {"worked examples: K[S3] table and cotable, M_k, sl(3), K[x,y]", worked_examples},
        {"Poisson superalgebra properties in dimensions 2 to 4", cochain_properties},
        {"table morphism check agrees with the direct check and the corollary", morphism_oracle},
        {"gl(n) x| gl(n)_ab axioms for n = 2, 3, 4 and tables for n = 3", gln_family},
        {"round trips and byte-stable golden files", [&] { return round_trips(golden_dir); }},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && std::size_t(only) != i + 1) continue;
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::ostringstream line;
        line.precision(3);
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
             << seconds_since(t0) << " s]";
        if (!o.pass) line << " -- " << o.detail;
        std::cout << line.str() << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
