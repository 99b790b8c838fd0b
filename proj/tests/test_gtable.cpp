#include "gtable/gallery.hpp"
#include "gtable/gtable.hpp"

#include <doctest.h>

using namespace gtable;
using la::ratio;

namespace {

// Direct multiplication in K[S3]: basis index of the product of two elements.
std::size_t times(std::size_t a, std::size_t b) {
    const auto& els = rep::s3_elements();
    auto p = rep::compose(els[a], els[b]);
    for (std::size_t i = 0; i < els.size(); ++i)
        if (els[i] == p) return i;
    throw std::logic_error("not a permutation");
}

Vector mul(const Vector& a, const Vector& b) {
    Vector out(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) out[times(i, j)] += a[i] * b[j];
    return out;
}

const std::vector<std::string> kS3Ids = {"1_1", "1_2", "1_3", "s_{sg}", "A_{std}"};

}  // namespace

TEST_CASE("Heisenberg Lie table has a single entry") {
    auto t = gallery::heisenberg_lie_table();
    REQUIRE(t.source().size() == 2);
    const auto h0 = t.source_index("h_0"), h1 = t.source_index("h_1");
    CHECK(t.entries().size() == 1);
    CHECK(t.coefficient(h1, h1, h0) == 1);
}

TEST_CASE("expanding the Heisenberg table gives back the bracket") {
    auto reg = rep::sl2_first_labeling();
    auto b = expand(gallery::heisenberg_lie_table(), reg);
    // Concatenated model basis: h_0, then x_1, x_{-1}.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Vector expected(3);
            if (i == 1 && j == 2) expected[0] = 1;
            if (i == 2 && j == 1) expected[0] = -1;
            CHECK(b.on_basis(i, j) == expected);
        }
}

TEST_CASE("expanding the zero table") {
    auto reg = rep::sl2_first_labeling();
    std::vector<SummandInfo> s = {{"a", {rep::Group::sl2(), 1}, 1}, {"b", {rep::Group::sl2(), 0}, 0}};
    GTable t(rep::Group::sl2(), reg.name(), s, s);
    CHECK(expand(t, reg).coeffs().is_zero());
}

TEST_CASE("matrix algebra coefficients") {
    for (int k = 3; k <= 5; ++k) {
        auto t = gallery::mk_report(k).computed;
        const auto a0 = t.source_index("A_0"), a1 = t.source_index("A_1");
        CHECK(t.coefficient(a1, a1, a0, 1) == ratio(1, k));
        CHECK(t.coefficient(a1, a1, a1, 1) == ratio(1, 2));
        CHECK(t.coefficient(a1, a1, a1, 2) == ratio(1, 2));
    }
    auto t2 = gallery::mk_report(2).computed;
    CHECK(t2.coefficient(1, 1, 1, 1) == ratio(1, 2));
    CHECK(t2.cell(1, 1).size() == 2);
}

TEST_CASE("K[S3] table") {
    auto t = gallery::s3_table_report().computed;
    const auto one3 = t.source_index("1_3"), s = t.source_index("s_{sg}"), a = t.source_index("A_{std}");
    CHECK(t.cell(s, s) == GTable::Cell{{one3, 1, -3}});
    CHECK(t.coefficient(a, a, one3) == ratio(3, 2));
    CHECK(t.coefficient(a, a, s) == ratio(3, 2));
}

TEST_CASE("expanding the K[S3] table reproduces the group algebra product") {
    auto reg = rep::s3_labeling();
    auto dec = gallery::s3_decomposition(reg);
    auto b = expand(gallery::s3_table_report().computed, reg);
    Matrix basis = dec.basis_matrix();
    Matrix inv = la::inverse(basis);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(basis * b.on_basis(i, j) == mul(basis.column(i), basis.column(j)));
    CHECK(inv * basis == Matrix::identity(6));
}

TEST_CASE("K[S3] cotable") {
    auto t = gallery::s3_cotable_report().computed;
    const auto u1 = t.source_index("1_1"), u2 = t.source_index("1_2"), u3 = t.source_index("1_3");
    const auto s = t.source_index("s_{sg}");
    CHECK(t.cell(s, s) == GTable::Cell{{u1, 1, 2}, {u2, 1, 2}, {u3, 1, -1}});
    CHECK(t.cell(u3, u3) == GTable::Cell{{u1, 1, ratio(2, 3)}, {u2, 1, ratio(2, 3)}, {u3, 1, ratio(1, 3)}});
}

TEST_CASE("componentwise product on a line") {
    auto reg = rep::sl2_first_labeling();
    rep::GModule line{rep::Group::sl2(), 1, {Matrix(1, 1), Matrix(1, 1), Matrix(1, 1)}, {}};
    rep::Bilinear b(1, 1, 1);
    b.at(0, 0, 0) = 1;
    auto dec = rep::decompose_sl2(line, reg);
    auto t = cotable(line, Matrix{{1}}, dec, reg);
    CHECK(t.coefficient(0, 0, 0) == 1);
    CHECK(extract(line, b, dec, reg) == t);
}

TEST_CASE("morphism checks") {
    auto t = gallery::heisenberg_lie_table();
    auto reg = rep::sl2_first_labeling();
    CHECK(check_morphism(t, t, GMatrix::identity(t.source())));
    CHECK(corollary_check(t, t, GMatrix::identity(t.source()), reg));
    // Doubling h_0 breaks h_1 h_1 = h_0 since 2 != 1.
    GMatrix f = GMatrix::identity(t.source());
    f.set(t.source_index("h_0"), t.source_index("h_0"), 2);
    CHECK_FALSE(check_morphism(t, t, f));
    CHECK_FALSE(is_algebra_morphism(expand(t, reg), expand(t, reg), assemble_map(f, reg)));
    CHECK_FALSE(corollary_check(t, t, f, reg));
}

TEST_CASE("GMatrix entries respect types") {
    auto s = gallery::heisenberg_lie_table().source();
    GMatrix f(s, s);
    f.set(0, 1, 1);
    CHECK_THROWS_AS(f.validate(), ShapeMismatch);
}

TEST_CASE("plain algebra of the truncated polynomial ring") {
    auto t = gallery::poly_report(4).computed;
    auto reg = rep::sl2_poly_labeling(4);
    auto p = plain_algebra(t, forced_choices(reg));
    for (std::size_t a = 0; a <= 4; ++a)
        for (std::size_t b = 0; b <= 4; ++b) {
            Vector expected(5);
            if (a + b <= 4) expected[a + b] = 1;
            CHECK(p.constants.on_basis(a, b) == expected);
        }
}

TEST_CASE("plain algebra of the zero table") {
    auto reg = rep::sl2_first_labeling();
    std::vector<SummandInfo> s = {{"a", {rep::Group::sl2(), 2}, 2}};
    GTable t(rep::Group::sl2(), reg.name(), s, s);
    CHECK(plain_algebra(t, forced_choices(reg)).constants.coeffs().is_zero());
}

TEST_CASE("plain algebra of M_3 with the symmetric choice") {
    auto t = gallery::mk_report(3).computed;
    auto reg = rep::gl_labeling(3);
    const rep::Group g = rep::Group::gl(3);
    auto q = forced_choices(reg);
    q[{{g, rep::kAdjoint}, {g, rep::kAdjoint}, {g, rep::kAdjoint}}] = 2;
    auto p = plain_algebra(t, q);
    CHECK(p.constants.on_basis(1, 1) == Vector{ratio(1, 3), ratio(1, 2)});
    CHECK(all_choices(reg).size() == 2);
}

TEST_CASE("corollary and table checks agree on two-summand tables") {
    auto reg = rep::gl_labeling(3);
    const rep::Group g = rep::Group::gl(3);
    std::vector<SummandInfo> s = {{"a", {g, rep::kTrivial}, std::nullopt}, {"b", {g, rep::kAdjoint}, std::nullopt}};
    for (int c1 = -1; c1 <= 1; ++c1)
        for (int c2 = -1; c2 <= 1; ++c2) {
            GTable t(g, reg.name(), s, s);
            t.add(0, 0, 0, 1, 1);
            t.add(1, 1, 1, 1, c1);
            t.add(1, 1, 1, 2, c2);
            t.add(1, 1, 0, 1, 1);
            GMatrix f(s, s);
            f.set(0, 0, 1);
            f.set(1, 1, c1 == 0 ? 1 : -1);
            CHECK(corollary_check(t, t, f, reg) == check_morphism(t, t, f));
        }
}

TEST_CASE("rendering") {
    auto t = gallery::heisenberg_lie_table();
    CHECK(render(t, Format::Text, "[,]") ==
          "[,] || h_0 | h_1\n"
          "====||=====|====\n"
          "h_0 ||     |\n"
          "h_1 ||     | h_0\n");
    GTable empty(rep::Group::sl2(), "sl2-first", {}, {});
    CHECK(render(empty, Format::Text, "·") == "·\n=\n");
    auto latex = render(t, Format::Latex, "[,]");
    CHECK(latex.rfind("\\begin{tabular}", 0) == 0);
    CHECK(latex.find("& $h_0$ \\\\") != std::string::npos);
}

TEST_CASE("JSON round trip") {
    for (const auto& t : {gallery::heisenberg_lie_table(), gallery::s3_table_report().computed,
                          gallery::mk_report(3).computed, gallery::cup_fixture()}) {
        auto text = to_json(t);
        CHECK(parse_json(text) == t);
        CHECK(to_json(parse_json(text)) == text);
    }
    CHECK_THROWS_AS(parse_json("{\"group\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_json("not json"), ParseError);
}

TEST_CASE("products that are not equivariant are rejected") {
    auto m = gallery::heisenberg_module();
    rep::Bilinear b(3, 3, 3);
    b.at(2, 0, 0) = 1;  // x_1 x_1 = h_0 has the wrong weight
    CHECK_THROWS_AS(check_equivariant(m, b), NotEquivariant);
}
