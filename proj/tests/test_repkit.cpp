#include "gtable/gallery.hpp"
#include "gtable/repkit.hpp"
#include "gtable/supercochain.hpp"

#include <doctest.h>

using namespace gtable;
using namespace gtable::rep;
using la::ratio;

namespace {

Vector unit(std::size_t n, std::size_t i) { return la::unit_vector(n, i); }

// Direct check on basis pairs, independent of is_equivariant.
bool equivariant_on_basis(const Bilinear& m, const GModule& a, const GModule& b, const GModule& c) {
    for (std::size_t g = 0; g < a.ops.size(); ++g)
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) {
                Vector lhs = c.ops[g] * m.apply(unit(a.dim, i), unit(b.dim, j));
                Vector rhs = a.group.derivation_action()
                                 ? la::add(m.apply(a.ops[g].column(i), unit(b.dim, j)),
                                           m.apply(unit(a.dim, i), b.ops[g].column(j)))
                                 : m.apply(a.ops[g].column(i), b.ops[g].column(j));
                if (lhs != rhs) return false;
            }
    return true;
}

std::size_t projector_rank(const GModule& m, const std::vector<int>& character) {
    Matrix p(m.dim, m.dim);
    for (std::size_t g = 0; g < 6; ++g) p = p + s3_element_action(m, g).scaled(character[g]);
    return la::rank(p);
}

const std::vector<int> kTrChar = {1, 1, 1, 1, 1, 1};
const std::vector<int> kSgChar = {1, -1, -1, -1, 1, 1};
const std::vector<int> kStdChar = {2, 0, 0, 0, -1, -1};

}  // namespace

TEST_CASE("every built-in model satisfies its relations and every map is equivariant") {
    for (const auto& reg : {sl2_first_labeling(), sl2_poly_labeling(3), gl_labeling(2), gl_labeling(3),
                            gl_labeling(4), s3_labeling()}) {
        CAPTURE(reg.name());
        for (const auto& id : reg.irreps()) CHECK_NOTHROW(reg.model(id).module.validate());
        for (const auto& [t, maps] : reg.all_maps())
            for (const auto& m : maps) {
                CAPTURE(t.left.name() + " x " + t.right.name() + " -> " + t.out.name());
                CHECK(equivariant_on_basis(m, reg.model(t.left).module, reg.model(t.right).module,
                                           reg.model(t.out).module));
            }
    }
}

TEST_CASE("SL2 determinant pairing") {
    auto reg = sl2_first_labeling();
    const Group g = Group::sl2();
    const auto& m = reg.maps({g, 1}, {g, 1}, {g, 0}).at(0);
    CHECK(m.apply(unit(2, 0), unit(2, 1)) == Vector{1});
    CHECK(m.apply(unit(2, 1), unit(2, 0)) == Vector{-1});
}

TEST_CASE("SL2 bracket on the adjoint kills E with itself") {
    auto reg = sl2_first_labeling();
    const Group g = Group::sl2();
    const auto& m = reg.maps({g, 2}, {g, 2}, {g, 2}).at(0);
    CHECK(la::is_zero(m.apply(unit(3, 0), unit(3, 0))));
}

TEST_CASE("GL2 has no symmetric adjoint product") {
    auto reg = gl_labeling(2);
    const Group g = Group::gl(2);
    CHECK(reg.multiplicity({g, kAdjoint}, {g, kAdjoint}, {g, kAdjoint}) == 1);
    // AB + BA - tr(AB) I vanishes on sl(2).
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix a = adjoint_basis_matrix(2, i), b = adjoint_basis_matrix(2, j);
            Matrix ab = a * b, ba = b * a;
            Scalar tr = ab(0, 0) + ab(1, 1);
            CHECK((ab + ba - Matrix::identity(2).scaled(tr)).is_zero());
        }
    auto reg3 = gl_labeling(3);
    const Group g3 = Group::gl(3);
    CHECK(reg3.multiplicity({g3, kAdjoint}, {g3, kAdjoint}, {g3, kAdjoint}) == 2);
}

TEST_CASE("S3 sign from two standard vectors") {
    auto reg = s3_labeling();
    const Group g = Group::s3();
    const auto& m = reg.maps({g, kStd}, {g, kStd}, {g, kSg}).at(0);
    CHECK(m.apply(unit(2, 0), unit(2, 1)) == Vector{1});
    CHECK(m.apply(unit(2, 1), unit(2, 0)) == Vector{-1});
}

TEST_CASE("braiding of the symmetric choices") {
    auto reg = sl2_first_labeling();
    const Group g = Group::sl2();
    const auto& a = reg.maps({g, 1}, {g, 2}, {g, 1}).at(0);
    const auto& b = reg.maps({g, 2}, {g, 1}, {g, 1}).at(0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(a.on_basis(i, j) == b.on_basis(j, i));
    auto s3 = s3_labeling();
    const Group s = Group::s3();
    const auto& c = s3.maps({s, kSg}, {s, kStd}, {s, kStd}).at(0);
    const auto& d = s3.maps({s, kStd}, {s, kSg}, {s, kStd}).at(0);
    for (std::size_t j = 0; j < 2; ++j) CHECK(c.on_basis(0, j) == d.on_basis(j, 0));
}

TEST_CASE("highest weight vectors of the Heisenberg algebra") {
    auto hw = highest_weight_vectors(gallery::heisenberg_module());
    REQUIRE(hw.size() == 2);
    CHECK(hw[0].weight == 0);
    CHECK(la::Subspace::span(3, hw[0].hwvs) == la::Subspace::span(3, {unit(3, 2)}));
    CHECK(hw[1].weight == 1);
    CHECK(la::Subspace::span(3, hw[1].hwvs) == la::Subspace::span(3, {unit(3, 0)}));
}

TEST_CASE("highest weights of the (1,1) cochains") {
    auto ctx = gallery::heisenberg_context();
    auto basis = cochain::basis(3, 1, 1);
    GModule m{Group::sl2(), basis.size(), {}, {}};
    for (int X = 0; X < 3; ++X) {
        std::vector<Vector> cols;
        for (const auto& b : basis)
            cols.push_back(cochain::to_vector(
                cochain::sl2_act(X, cochain::BigradedElement::from_monomial(b), ctx), 3, 1, 1));
        m.ops.push_back(Matrix::from_columns(cols, basis.size()));
    }
    // Brute force: ker E intersected with each H eigenspace.
    auto common_kernel = [&](int w) {
        std::vector<Vector> rows;
        Matrix shifted = m.ops[1] - Matrix::identity(m.dim).scaled(w);
        for (std::size_t i = 0; i < m.dim; ++i) {
            rows.push_back(m.ops[0].row(i));
            rows.push_back(shifted.row(i));
        }
        return la::kernel(Matrix::from_rows(rows, m.dim)).dim();
    };
    CHECK(common_kernel(2) == 1);
    CHECK(common_kernel(0) == 2);
    std::map<int, std::size_t> found;
    for (const auto& ws : highest_weight_vectors(m)) found[ws.weight] = ws.hwvs.size();
    CHECK(found == std::map<int, std::size_t>{{0, 2}, {1, 2}, {2, 1}});
}

TEST_CASE("decomposition of the Heisenberg algebra") {
    auto reg = sl2_first_labeling();
    auto dec = decompose_sl2(gallery::heisenberg_module(), reg);
    REQUIRE(dec.summands.size() == 2);
    CHECK(dec.summands[0].irrep.label == 0);
    CHECK(dec.summands[0].tau.column(0) == unit(3, 2));
    CHECK(dec.summands[1].irrep.label == 1);
    CHECK(dec.summands[1].tau.column(0) == unit(3, 0));
    CHECK(dec.summands[1].tau.column(1) == unit(3, 1));
}

TEST_CASE("a model decomposes as itself") {
    auto reg = sl2_first_labeling();
    const auto& model = reg.model({Group::sl2(), 2});
    auto dec = decompose_sl2(model.module, reg);
    REQUIRE(dec.summands.size() == 1);
    CHECK(dec.summands[0].tau == Matrix::identity(3));
}

TEST_CASE("sl(3) under the corner SL2") {
    auto reg = sl2_first_labeling();
    auto dec = gallery::sl3_decomposition(reg);
    std::vector<int> labels;
    for (const auto& s : dec.summands) labels.push_back(s.irrep.label);
    CHECK(labels == std::vector<int>{0, 2, 1, 1});
    CHECK_NOTHROW(dec.validate(gallery::sl3_module(), reg));
}

TEST_CASE("the group algebra of S3 under conjugation") {
    auto reg = s3_labeling();
    auto m = gallery::s3_group_algebra_module();
    auto dec = gallery::s3_decomposition(reg);
    std::vector<Vector> trivial;
    for (const auto& s : dec.summands)
        if (s.irrep.label == kTr) trivial.push_back(s.tau.column(0));
    CHECK(trivial.size() == 3);
    CHECK(projector_rank(m, kTrChar) == 3);
    // 1_3 = (2 () - (123) - (132)) / 3
    Vector one3 = {ratio(2, 3), 0, 0, 0, ratio(-1, 3), ratio(-1, 3)};
    CHECK(la::Subspace::span(6, trivial).contains(one3));
    // u1 = (12) - (23), u2 = (12) - (13)
    const auto& std_tau = dec.summands.back().tau;
    CHECK(std_tau.column(0) == Vector{0, 1, -1, 0, 0, 0});
    CHECK(std_tau.column(1) == Vector{0, 1, 0, -1, 0, 0});
}

TEST_CASE("trivial S3 module") {
    auto reg = s3_labeling();
    GModule k{Group::s3(), 1, {Matrix::identity(1), Matrix::identity(1)}, {}};
    auto dec = decompose_s3(k, reg);
    REQUIRE(dec.summands.size() == 1);
    CHECK(dec.summands[0].irrep.label == kTr);
}

TEST_CASE("std tensor std splits as tr + sg + std") {
    auto reg = s3_labeling();
    const auto& std_model = reg.model({Group::s3(), kStd}).module;
    auto t = tensor_module(std_model, std_model);
    CHECK(projector_rank(t, kTrChar) == 1);
    CHECK(projector_rank(t, kSgChar) == 1);
    CHECK(projector_rank(t, kStdChar) == 2);
    auto dec = decompose_s3(t, reg);
    std::map<int, int> count;
    for (const auto& s : dec.summands) ++count[s.irrep.label];
    CHECK(count == std::map<int, int>{{kTr, 1}, {kSg, 1}, {kStd, 1}});
}

TEST_CASE("invalid modules are rejected") {
    GModule bad{Group::sl2(), 2, {Matrix{{0, 1}, {0, 0}}, Matrix{{1, 0}, {0, 1}}, Matrix{{0, 0}, {1, 0}}}, {}};
    CHECK_THROWS_AS(bad.validate(), InvalidModule);
}
