#include "gtable/cli.hpp"

#include "gtable/gallery.hpp"
#include "gtable/spec_file.hpp"
#include "gtable/verify.hpp"

#include "json_util.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace gtable::cli {

namespace {

using detail::ojson;

constexpr const char* kProductSymbol = "·";
constexpr const char* kPoissonSymbol = "{,}";
constexpr const char* kLieSymbol = "[,]";

constexpr const char* kSpecSchema = R"schema(Spec file schema (JSON, scalars as "num/den" strings):
  group             "SL2", "S3" or "GL(k)"
  labeling          optional: sl2-first, sl2-poly(D), s3, gl-k
  dim               module dimension
  basis             optional list of basis names
  action            one dim x dim matrix per generator (E, H, F for SL2;
                    E_ab row-major for GL(k); (12), (123) for S3)
  product           optional list of {"i", "j", "k", "c"}: e_i e_j has c on e_k
  comultiplication  optional list of {"k", "i", "j", "c"}: Delta(e_k) has c on e_i (x) e_j
  summands          optional list of {"id", "hwv"} (SL2) or {"id", "irrep", "tau"}
At least one of product and comultiplication is required.)schema";

// Thrown after the diagnostics are written; carries the exit code.
struct Exit {
    int code;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::Text;
};

ojson table_json(const GTable& t) { return ojson::parse(to_json(t)); }

void emit_tables(Context& cx, const std::vector<std::tuple<std::string, GTable, std::string>>& tables) {
    if (cx.format == Format::Json) {
        if (tables.size() == 1) {
            cx.out << to_json(std::get<1>(tables[0]));
            return;
        }
        ojson j;
        for (const auto& [key, t, op] : tables) j[key] = table_json(t);
        cx.out << j.dump(2) << '\n';
        return;
    }
    bool first = true;
    for (const auto& [key, t, op] : tables) {
        if (!first) cx.out << '\n';
        first = false;
        if (tables.size() > 1) cx.out << (cx.format == Format::Latex ? "% " : "") << key << '\n';
        cx.out << render(t, cx.format, op);
    }
}

// Reports every differing cell on stderr; true when the tables agree.
bool compare(Context& cx, const std::string& what, const GTable& computed, const GTable& expected) {
    auto diffs = gallery::table_differences(computed, expected);
    for (const auto& d : diffs) cx.err << "FixtureMismatch: " << what << ": " << d << '\n';
    return diffs.empty();
}

void emit_report(Context& cx, const gallery::FixtureReport& r, const std::string& op) {
    emit_tables(cx, {{r.name, r.computed, op}});
    for (const auto& m : r.mismatches) cx.err << "FixtureMismatch: " << r.name << ": " << m << '\n';
    if (!r.ok()) throw Exit{kExitMismatch};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- subcommands

void heisenberg(Context& cx, const std::string& action) {
    auto r = gallery::heisenberg_compute();
    bool ok = true;
    if (action != "bracket") ok = compare(cx, "cup product table", r.cup, gallery::cup_fixture()) && ok;
    if (action != "cup") ok = compare(cx, "bracket table", r.bracket, gallery::bracket_fixture()) && ok;

    if (action == "cup") {
        emit_tables(cx, {{"cup", r.cup, kProductSymbol}});
    } else if (action == "bracket") {
        emit_tables(cx, {{"bracket", r.bracket, kPoissonSymbol}});
    } else {
        const bool reps_ok = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.ok(); });
        for (const auto& c : r.checks)
            if (!c.ok()) cx.err << "FixtureMismatch: representative " << c.id << " fails its checks\n";
        ok = ok && reps_ok && r.total_dim == 18;
        if (cx.format == Format::Json) {
            ojson j;
            ojson dims = ojson::array();
            for (const auto& bd : gallery::even_bidegrees())
                dims.push_back({{"p", bd.first}, {"q", bd.second}, {"dim", r.dims.at(bd)}});
            j["dims"] = dims;
            j["total_dim"] = r.total_dim;
            ojson reps = ojson::array();
            const auto& rows = gallery::representatives();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& c = r.checks[i];
                reps.push_back({{"id", rows[i].id},
                                {"representative", cochain::render(rows[i].rep, &r.algebra.ctx)},
                                {"weight", rows[i].weight},
                                {"cocycle", c.cocycle},
                                {"non_exact", c.non_exact},
                                {"highest_weight", c.e_annihilated && c.weight_ok}});
            }
            j["representatives"] = reps;
            j["cup"] = table_json(r.cup);
            j["bracket"] = table_json(r.bracket);
            cx.out << j.dump(2) << '\n';
        } else if (cx.format == Format::Latex) {
            emit_tables(cx, {{"cup", r.cup, kProductSymbol}, {"bracket", r.bracket, kPoissonSymbol}});
        } else {
            cx.out << "Even cohomology of the Heisenberg algebra\n\n";
            for (const auto& bd : gallery::even_bidegrees())
                cx.out << "H^{" << bd.first << "," << bd.second << "}  dim " << r.dims.at(bd) << '\n';
            cx.out << "total  " << r.total_dim << "\n\n";
            const auto& rows = gallery::representatives();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& c = r.checks[i];
                cx.out << rows[i].id << " = " << cochain::render(rows[i].rep, &r.algebra.ctx) << "  cocycle "
                       << yes_no(c.cocycle) << ", non-exact " << yes_no(c.non_exact) << ", highest weight "
                       << rows[i].weight << " " << yes_no(c.e_annihilated && c.weight_ok) << '\n';
            }
            cx.out << "\ncup product\n" << render(r.cup, Format::Text, kProductSymbol);
            cx.out << "\nbracket\n" << render(r.bracket, Format::Text, kPoissonSymbol);
        }
    }
    if (!ok) throw Exit{kExitMismatch};
}

void print_gmatrix(Context& cx, const GMatrix& f, const gallery::IsomorphismSearch& s, bool archived) {
    if (cx.format == Format::Json) {
        ojson j;
        ojson entries = ojson::array();
        for (const auto& [key, c] : f.entries())
            entries.push_back({{"source", f.source()[key.second].id},
                               {"target", f.target()[key.first].id},
                               {"c", la::to_string(c)}});
        j["entries"] = entries;
        j["matchings_tried"] = s.matchings_tried;
        j["assignments_tried"] = s.assignments_tried;
        j["matches_archive"] = archived;
        cx.out << j.dump(2) << '\n';
        return;
    }
    const bool latex = cx.format == Format::Latex;
    if (latex) cx.out << "\\begin{align*}\n";
    for (std::size_t r = 0; r < f.source().size(); ++r) {
        std::string image;
        for (std::size_t x = 0; x < f.target().size(); ++x) {
            Scalar c = f.at(x, r);
            if (c == 0) continue;
            std::string coeff = c == 1 ? "" : c == -1 ? "-" : la::to_string(c) + " ";
            if (latex && c.get_den() != 1)
                coeff = std::string(c < 0 ? "-" : "") + "\\frac{" + mpz_class(abs(c.get_num())).get_str() + "}{" +
                        c.get_den().get_str() + "} ";
            image += (image.empty() ? "" : " + ") + coeff + f.target()[x].id;
        }
        if (latex)
            cx.out << "f(" << f.source()[r].id << ") &= " << image << " \\\\\n";
        else
            cx.out << "f(" << f.source()[r].id << ") = " << image << '\n';
    }
    if (latex) {
        cx.out << "\\end{align*}\n";
    } else {
        cx.out << "\nmatchings tried: " << s.matchings_tried << ", assignments tried: " << s.assignments_tried
               << "\nagrees with the archived map: " << yes_no(archived) << '\n';
    }
}

void gln(Context& cx, int n, const std::string& action) {
    const std::string gl = "gl(" + std::to_string(n) + ")";
    if (action == "tables") {
        auto t = gallery::gln_tables(n);
        auto f = gallery::gln_fixture(n);
        bool ok = compare(cx, gl + " product table", t.product, f.product);
        ok = compare(cx, gl + " bracket table", t.bracket, f.bracket) && ok;
        emit_tables(cx, {{"product", t.product, kProductSymbol}, {"bracket", t.bracket, kLieSymbol}});
        if (!ok) throw Exit{kExitMismatch};
    } else if (action == "check") {
        auto r = gallery::gln_axioms(n);
        const std::vector<std::pair<std::string, bool>> rows = {
            {"commutative", r.commutative}, {"associative", r.associative}, {"antisymmetric", r.antisymmetric},
            {"jacobi", r.jacobi},           {"leibniz", r.leibniz}};
        if (cx.format == Format::Json) {
            ojson j;
            j["n"] = n;
            j["pairs"] = r.pairs;
            j["triples"] = r.triples;
            for (const auto& [k, v] : rows) j[k] = v;
            cx.out << j.dump(2) << '\n';
        } else {
            const std::string sep = cx.format == Format::Latex ? " & " : ": ";
            const std::string end = cx.format == Format::Latex ? " \\\\\n" : "\n";
            if (cx.format == Format::Latex) cx.out << "\\begin{tabular}{|l|c|}\n\\hline\n";
            else cx.out << gl << " x| " << gl << "_ab, " << r.pairs << " basis pairs, " << r.triples << " triples\n";
            for (const auto& [k, v] : rows) cx.out << k << sep << (v ? "holds" : "fails") << end;
            if (cx.format == Format::Latex) cx.out << "\\hline\n\\end{tabular}\n";
        }
        for (const auto& [k, v] : rows)
            if (!v) cx.err << "property failure: " << k << " fails for " << gl << '\n';
        if (!r.ok()) throw Exit{kExitMismatch};
    } else {
        if (n != 3) {
            cx.err << "input error: the isomorphism with the Heisenberg cohomology needs --n 3\n";
            throw Exit{kExitInput};
        }
        auto s = gallery::find_isomorphism();
        const bool archived = s.f == gallery::archived_isomorphism();
        print_gmatrix(cx, s.f, s, archived);
        if (!archived) {
            cx.err << "FixtureMismatch: the isomorphism found differs from the archived one\n";
            throw Exit{kExitMismatch};
        }
    }
}

void extract_spec(Context& cx, const std::string& path) {
    auto spec = load_spec(path);
    if (spec.product)
        emit_tables(cx, {{"table", extract_from_spec(spec), kProductSymbol}});
    else
        emit_tables(cx, {{"cotable", cotable_from_spec(spec), kProductSymbol}});
}

void verify_suites(Context& cx, const std::string& module) {
    if (cx.format == Format::Latex) {
        cx.err << "input error: verify reports as text or json\n";
        throw Exit{kExitInput};
    }
    auto results = verify::run_checks(verify::checks(module), verify::worker_count());
    cx.out << (cx.format == Format::Json ? verify::render_json(results) : verify::render_text(results));
    bool ok = true;
    for (const auto& r : results)
        if (!r.passed) {
            ok = false;
            cx.err << "property failure: " << r.suite << "/" << r.name << ": " << r.detail << '\n';
        }
    if (!ok) throw Exit{kExitMismatch};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact G-tables of algebras with symmetry", "gtable"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();

    std::string he_action = "report";
    auto* he = app.add_subcommand("heisenberg", "Even cohomology of the Heisenberg algebra and its tables");
    he->add_option("action", he_action, "cup, bracket or report")
        ->check(CLI::IsMember({"cup", "bracket", "report"}))
        ->capture_default_str();

    int n = 3;
    std::string gl_action = "tables";
    auto* gl = app.add_subcommand("gln", "gl(n) x| gl(n)_ab under GL(n)");
    gl->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(2, 6));
    gl->add_option("action", gl_action, "tables, check or iso")
        ->check(CLI::IsMember({"tables", "check", "iso"}))
        ->capture_default_str();

    std::string s3_action = "table";
    auto* s3 = app.add_subcommand("s3", "The group algebra of S3 under conjugation");
    s3->add_option("action", s3_action, "table or cotable")
        ->check(CLI::IsMember({"table", "cotable"}))
        ->capture_default_str();

    int k = 2;
    auto* mk = app.add_subcommand("matrix-algebra", "M_k under conjugation by GL(k)");
    mk->add_option("--k", k, "Matrix size")->required()->check(CLI::Range(2, 8));

    auto* sl3 = app.add_subcommand("sl3", "sl(3) under the SL2 in the upper left corner");

    int max_degree = 4;
    auto* poly = app.add_subcommand("poly", "K[x,y] truncated above a degree, under SL2");
    poly->add_option("--max-degree", max_degree, "Highest degree kept")->required()->check(CLI::Range(0, 12));

    std::string spec_path;
    auto* ex = app.add_subcommand("extract", "Table of an algebra given by a spec file");
    ex->add_option("--spec", spec_path, "JSON spec file")->required();
    ex->footer(kSpecSchema);

    std::string module;
    auto* ver = app.add_subcommand("verify", "Run the property suites");
    ver->add_option("--module", module, "Restrict to one suite")->check(CLI::IsMember(verify::suite_names()));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    Context cx{out, err, parse_format(format)};
    try {
        if (*he) heisenberg(cx, he_action);
        else if (*gl) gln(cx, n, gl_action);
        else if (*s3) emit_report(cx, s3_action == "table" ? gallery::s3_table_report() : gallery::s3_cotable_report(),
                                  kProductSymbol);
        else if (*mk) emit_report(cx, gallery::mk_report(k), kProductSymbol);
        else if (*sl3) emit_report(cx, gallery::sl3_report(), kLieSymbol);
        else if (*poly) emit_report(cx, gallery::poly_report(max_degree), kProductSymbol);
        else if (*ex) extract_spec(cx, spec_path);
        else if (*ver) verify_suites(cx, module);
    } catch (const Exit& e) {
        return e.code;
    } catch (const FixtureMismatch& e) {
        err << e.what() << '\n';
        return kExitMismatch;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n' << kSpecSchema << '\n';
        return kExitInput;
    } catch (const Error& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace gtable::cli
