#include "gtable/gallery.hpp"

#include <doctest.h>

using namespace gtable;
using namespace gtable::gallery;
using la::ratio;

namespace {

GlnGlnAb element(int n, long a0, const Matrix& m0, long a1, const Matrix& m1) {
    return GlnGlnAb{n, Scalar(a0), m0, Scalar(a1), m1};
}

Matrix traceless(int n, std::size_t i) { return rep::adjoint_basis_matrix(n, i); }

}  // namespace

TEST_CASE("Heisenberg pipeline reproduces both reference tables") {
    HeisenbergReport r;
    REQUIRE_NOTHROW(r = heisenberg_pipeline());
    CHECK(r.total_dim == 18);
    const std::map<std::pair<int, int>, std::size_t> dims = {{{0, 0}, 1}, {{2, 0}, 2}, {{1, 1}, 4}, {{3, 1}, 2},
                                                             {{0, 2}, 2}, {{2, 2}, 4}, {{1, 3}, 2}, {{3, 3}, 1}};
    CHECK(r.dims == dims);
    for (const auto& c : r.checks) {
        CAPTURE(c.id);
        CHECK(c.ok());
    }
}

TEST_CASE("representative weights") {
    std::vector<int> weights;
    for (const auto& row : representatives()) weights.push_back(row.weight);
    CHECK(weights == std::vector<int>{0, 0, 2, 1, 1, 0, 2, 1, 1, 0});
}

TEST_CASE("cup and bracket cells") {
    auto r = heisenberg_compute();
    const auto& cup = r.cup;
    const auto& br = r.bracket;
    auto i = [&](const char* id) { return cup.source_index(id); };
    CHECK(cup.cell(i("H_0^{1,1}"), i("H_0^{1,1}")) == GTable::Cell{{i("H_0^{2,2}"), 1, -6}});
    CHECK(br.cell(i("H_1^{2,0}"), i("H_1^{0,2}")) ==
          GTable::Cell{{i("H_0^{1,1}"), 1, ratio(-1, 2)}, {i("H_2^{1,1}"), 1, ratio(1, 2)}});
    for (std::size_t c = 0; c < 10; ++c) CHECK(br.cell(i("H_0^{0,0}"), c).empty());
    // The skew pair of the canonical-by-canonical cells.
    CHECK(cup.cell(i("H_1^{2,0}"), i("H_1^{0,2}")) ==
          GTable::Cell{{i("H_0^{2,2}"), 1, ratio(1, 2)}, {i("H_2^{2,2}"), 1, ratio(-1, 2)}});
    CHECK(cup.cell(i("H_1^{0,2}"), i("H_1^{2,0}")) ==
          GTable::Cell{{i("H_0^{2,2}"), 1, ratio(-1, 2)}, {i("H_2^{2,2}"), 1, ratio(-1, 2)}});
}

TEST_CASE("a wrong reference cell is reported") {
    auto cup = heisenberg_compute().cup;
    auto broken = cup;
    broken.add(0, 0, 0, 1, 1);
    auto diffs = table_differences(cup, broken);
    REQUIRE(diffs.size() == 1);
    CHECK(diffs[0] == "H_0^{0,0} x H_0^{0,0}: expected 2 H_0^{0,0}, computed H_0^{0,0}");
    CHECK_THROWS_AS(require_match("cup", cup, broken), FixtureMismatch);
}

TEST_CASE("gl(n) x| gl(n)_ab product and bracket") {
    const int n = 3;
    const Matrix zero(n, n);
    CHECK(gln_product(element(n, 2, zero, 3, zero), element(n, 5, zero, 7, zero)) ==
          element(n, 10, zero, 2 * 7 + 3 * 5, zero));
    auto u = element(n, 0, zero, 1, traceless(n, 0)), v = element(n, 0, zero, 2, traceless(n, 6));
    auto b = gln_bracket(u, v);
    CHECK(b.a0 == 0);
    CHECK(b.A0.is_zero());
    CHECK(b.a1 == 0);
    CHECK(b.A1.is_zero());
    CHECK_THROWS_AS(gln_product(element(2, 1, Matrix(2, 2), 0, Matrix(2, 2)), u), SizeMismatch);
}

TEST_CASE("gl(n) x| gl(n)_ab axioms by basis enumeration") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        auto prod = gln_product_bilinear(n), br = gln_bracket_bilinear(n);
        const std::size_t d = prod.left_dim();
        auto e = [&](std::size_t i) { return la::unit_vector(d, i); };
        // A sample of triples through the bilinear maps directly.
        for (std::size_t a = 0; a < d; a += 3)
            for (std::size_t b = 1; b < d; b += 5)
                for (std::size_t c = 2; c < d; c += 7) {
                    CHECK(prod.apply(e(a), prod.apply(e(b), e(c))) == prod.apply(prod.apply(e(a), e(b)), e(c)));
                    CHECK(br.apply(e(a), prod.apply(e(b), e(c))) ==
                          la::add(prod.apply(br.apply(e(a), e(b)), e(c)), prod.apply(e(b), br.apply(e(a), e(c)))));
                }
        CHECK(gln_axioms(n).ok());
    }
}

TEST_CASE("gl(n) tables") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        auto t = gln_tables(n);
        auto f = gln_fixture(n);
        CHECK(table_differences(t.product, f.product).empty());
        CHECK(table_differences(t.bracket, f.bracket).empty());
        const auto s0 = t.product.source_index("sl(" + std::to_string(n) + ")_0");
        const auto sab = t.product.source_index("sl(" + std::to_string(n) + ")_{ab}");
        CHECK(t.product.cell(s0, s0) == (n > 2 ? GTable::Cell{{sab, 2, 1}} : GTable::Cell{}));
        CHECK(t.bracket.cell(s0, sab) == GTable::Cell{{sab, 1, 1}});
        for (std::size_t c = 0; c < 4; ++c) CHECK(t.bracket.cell(0, c).empty());
    }
}

TEST_CASE("the archived isomorphism") {
    auto r = heisenberg_compute();
    auto gl = gl3_sl2_tables();
    auto f = archived_isomorphism();
    CHECK(check_morphism(r.bracket, gl.bracket, f));
    CHECK(check_morphism(r.cup, gl.product, f));
    CHECK(la::rank(plain_map(f)) == 10);
    auto found = find_isomorphism();
    CHECK(found.f == f);
}

TEST_CASE("the isomorphism search fails on mismatched tables") {
    auto r = heisenberg_compute();
    auto gl = gl3_sl2_tables();
    auto wrong = gl.product;
    wrong.add(0, 0, 0, 1, 1);
    CHECK_THROWS_AS(find_isomorphism(r.cup, r.bracket, wrong, gl.bracket), NotFound);
}

TEST_CASE("worked examples") {
    CHECK(s3_table_report().ok());
    CHECK(s3_cotable_report().ok());
    for (int k = 2; k <= 5; ++k) CHECK(mk_report(k).ok());
    for (int d = 1; d <= 5; ++d) CHECK(poly_report(d).ok());
}

TEST_CASE("sl(3) under SL2, computed cells") {
    auto t = sl3_report().computed;
    auto i = [&](const char* id) { return t.source_index(id); };
    CHECK(t.cell(i("V_0"), i("V_1")) == GTable::Cell{{i("V_1"), 1, 3}});
    CHECK(t.cell(i("V_0"), i("V_1'")) == GTable::Cell{{i("V_1'"), 1, -3}});
    CHECK(t.cell(i("V_2"), i("V_2")) == GTable::Cell{{i("V_2"), 1, 1}});
    CHECK(t.cell(i("V_1'"), i("V_0")) == GTable::Cell{{i("V_1'"), 1, 3}});
}
