#include "gtable/gallery.hpp"

#include <algorithm>
#include <functional>

namespace gtable::gallery {

namespace {

Scalar q(long n, long d = 1) { return la::ratio(n, d); }

std::string cell_or_zero(const GTable& t, std::size_t r1, std::size_t r2) {
    std::string s = cell_text(t, r1, r2);
    return s.empty() ? "0" : s;
}

FixtureReport make_report(std::string name, GTable computed, GTable expected) {
    FixtureReport r{std::move(name), std::move(computed), std::move(expected), {}};
    r.mismatches = table_differences(r.computed, r.expected);
    return r;
}

GTable checked(const FixtureReport& r) {
    if (!r.ok()) throw FixtureMismatch(r.name + ": " + r.mismatches.front());
    return r.computed;
}

Matrix commutator_ops(const Matrix& x, const std::function<Vector(const Matrix&)>& coords,
                      const std::vector<Matrix>& basis) {
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(coords(commutator(x, b)));
    return Matrix::from_columns(cols, basis.size());
}

Vector row_major(const Matrix& m) {
    Vector v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

std::vector<Matrix> matrix_units(int k) {
    std::vector<Matrix> out;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.push_back(rep::elementary(k, i, j));
    return out;
}

std::vector<Matrix> sl3_basis() {
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < 8; ++j) out.push_back(rep::adjoint_basis_matrix(3, j));
    return out;
}

std::size_t s3_index(const rep::Perm& p) {
    const auto& els = rep::s3_elements();
    return std::find(els.begin(), els.end(), p) - els.begin();
}

rep::Perm s3_inverse(const rep::Perm& p) {
    rep::Perm inv{};
    for (int i = 0; i < 3; ++i) inv[p[i]] = i;
    return inv;
}

std::string poly_id(int r) { return r < 10 ? "A_" + std::to_string(r) : "A_{" + std::to_string(r) + "}"; }

}  // namespace

GTable table_from_literals(const rep::Registry& reg, const std::vector<SummandInfo>& summands,
                           const std::vector<CellLiteral>& cells) {
    GTable t(reg.group(), reg.name(), summands, summands);
    for (const auto& cell : cells)
        for (const auto& [s, qi, c] : cell.terms)
            t.add(t.source_index(cell.r1), t.source_index(cell.r2), t.target_index(s), qi, c);
    return t;
}

std::vector<std::string> table_differences(const GTable& computed, const GTable& expected) {
    if (computed.group() != expected.group() || computed.labeling() != expected.labeling())
        return {"group or labeling differs"};
    if (computed.source() != expected.source() || computed.target() != expected.target())
        return {"summand lists differ"};
    std::vector<std::string> out;
    const std::size_t n = computed.source().size();
    for (std::size_t r1 = 0; r1 < n; ++r1)
        for (std::size_t r2 = 0; r2 < n; ++r2)
            if (computed.cell(r1, r2) != expected.cell(r1, r2))
                out.push_back(computed.source()[r1].id + " x " + computed.source()[r2].id + ": expected " +
                              cell_or_zero(expected, r1, r2) + ", computed " + cell_or_zero(computed, r1, r2));
    return out;
}

void require_match(const std::string& what, const GTable& computed, const GTable& expected) {
    auto diff = table_differences(computed, expected);
    if (!diff.empty()) throw FixtureMismatch(what + ": " + diff.front());
}

// ---------------------------------------------------------------- K[S3]

rep::GModule s3_group_algebra_module() {
    const auto& els = rep::s3_elements();
    rep::GModule m{rep::Group::s3(), els.size(), {},
                   {"()", "(12)", "(23)", "(13)", "(123)", "(132)"}};
    for (std::size_t g : {std::size_t(1), std::size_t(4)}) {
        Matrix op(els.size(), els.size());
        for (std::size_t h = 0; h < els.size(); ++h)
            op(s3_index(rep::compose(rep::compose(els[g], els[h]), s3_inverse(els[g]))), h) = 1;
        m.ops.push_back(op);
    }
    m.validate();
    return m;
}

rep::Bilinear s3_group_algebra_product() {
    const auto& els = rep::s3_elements();
    rep::Bilinear b(6, 6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) b.at(s3_index(rep::compose(els[i], els[j])), i, j) = 1;
    return b;
}

Matrix s3_coproduct() {
    Matrix d(36, 6);
    for (std::size_t k = 0; k < 6; ++k) d(k * 6 + k, k) = 1;
    return d;
}

rep::Decomposition s3_decomposition(const rep::Registry& reg) {
    const rep::Group g = rep::Group::s3();
    const auto& els = rep::s3_elements();
    Vector trivial(6), sign(6);
    for (std::size_t i = 0; i < 6; ++i) {
        trivial[i] = q(1, 6);
        sign[i] = q(rep::perm_sign(els[i]), 6);
    }
    auto col = [](std::initializer_list<long> xs, const Scalar& scale) {
        Vector v;
        for (long x : xs) v.push_back(scale * x);
        return Matrix::from_columns({v}, 6);
    };
    rep::Decomposition dec{g, 6, {}};
    dec.summands.push_back({"1_1", {g, rep::kTr}, std::nullopt, Matrix::from_columns({trivial}, 6)});
    dec.summands.push_back({"1_2", {g, rep::kTr}, std::nullopt, Matrix::from_columns({sign}, 6)});
    dec.summands.push_back({"1_3", {g, rep::kTr}, std::nullopt, col({2, 0, 0, 0, -1, -1}, q(1, 3))});
    dec.summands.push_back({"s_{sg}", {g, rep::kSg}, std::nullopt, col({0, 0, 0, 0, 1, -1}, 1)});
    dec.summands.push_back({"A_{std}", {g, rep::kStd}, std::nullopt,
                            Matrix::from_columns({{0, 1, -1, 0, 0, 0}, {0, 1, 0, -1, 0, 0}}, 6)});
    dec.validate(s3_group_algebra_module(), reg);
    return dec;
}

namespace {

std::vector<SummandInfo> s3_infos() {
    auto reg = rep::s3_labeling();
    return summand_infos(s3_decomposition(reg));
}

GTable s3_table_literal() {
    const std::string u1 = "1_1", u2 = "1_2", u3 = "1_3", s = "s_{sg}", a = "A_{std}";
    return table_from_literals(rep::s3_labeling(), s3_infos(),
                               {
                                   {u1, u1, {{u1, 1, 1}}},
                                   {u2, u2, {{u2, 1, 1}}},
                                   {u3, u3, {{u3, 1, 1}}},
                                   {u3, s, {{s, 1, 1}}},
                                   {u3, a, {{a, 1, 1}}},
                                   {s, u3, {{s, 1, 1}}},
                                   {s, s, {{u3, 1, -3}}},
                                   {s, a, {{a, 1, 1}}},
                                   {a, u3, {{a, 1, 1}}},
                                   {a, s, {{a, 1, -1}}},
                                   {a, a, {{u3, 1, q(3, 2)}, {s, 1, q(3, 2)}}},
                               });
}

GTable s3_cotable_literal() {
    const std::string u1 = "1_1", u2 = "1_2", u3 = "1_3", s = "s_{sg}", a = "A_{std}";
    const Scalar six = q(1, 6), third = q(1, 3);
    return table_from_literals(rep::s3_labeling(), s3_infos(),
                               {
                                   {u1, u1, {{u1, 1, six}}},
                                   {u1, u2, {{u2, 1, six}}},
                                   {u1, u3, {{u3, 1, six}}},
                                   {u1, s, {{s, 1, six}}},
                                   {u1, a, {{a, 1, six}}},
                                   {u2, u1, {{u2, 1, six}}},
                                   {u2, u2, {{u1, 1, six}}},
                                   {u2, u3, {{u3, 1, six}}},
                                   {u2, s, {{s, 1, six}}},
                                   {u2, a, {{a, 1, -six}}},
                                   {u3, u1, {{u3, 1, six}}},
                                   {u3, u2, {{u3, 1, six}}},
                                   {u3, u3, {{u1, 1, q(2, 3)}, {u2, 1, q(2, 3)}, {u3, 1, third}}},
                                   {u3, s, {{s, 1, -third}}},
                                   {s, u1, {{s, 1, six}}},
                                   {s, u2, {{s, 1, six}}},
                                   {s, u3, {{s, 1, -third}}},
                                   {s, s, {{u1, 1, 2}, {u2, 1, 2}, {u3, 1, -1}}},
                                   {a, u1, {{a, 1, six}}},
                                   {a, u2, {{a, 1, -six}}},
                                   {a, a, {{u1, 1, 1}, {u2, 1, -1}, {a, 1, third}}},
                               });
}

}  // namespace

FixtureReport s3_table_report() {
    auto reg = rep::s3_labeling();
    auto computed = extract(s3_group_algebra_module(), s3_group_algebra_product(), s3_decomposition(reg), reg);
    return make_report("K[S3] product table", std::move(computed), s3_table_literal());
}

FixtureReport s3_cotable_report() {
    auto reg = rep::s3_labeling();
    // Permutation matrices are orthogonal, so the dual module has the same matrices.
    auto computed = cotable(s3_group_algebra_module(), s3_coproduct(), s3_decomposition(reg), reg);
    return make_report("K[S3] coproduct cotable", std::move(computed), s3_cotable_literal());
}

AlgebraSpec s3_coalgebra_spec() {
    const auto reg = rep::s3_labeling();
    AlgebraSpec spec;
    spec.group = rep::Group::s3();
    spec.labeling = reg.name();
    spec.module = s3_group_algebra_module();
    spec.coproduct = s3_coproduct();
    for (const auto& s : s3_decomposition(reg).summands)
        spec.summands.push_back({s.id, std::nullopt, s.irrep, s.tau});
    return spec;
}

// ---------------------------------------------------------------- M_k

rep::GModule matrix_algebra_module(int k) {
    if (k < 2) throw DimensionError("M_k needs k >= 2");
    const auto units = matrix_units(k);
    rep::GModule m{rep::Group::gl(k), units.size(), {}, {}};
    for (const auto& x : units) m.ops.push_back(commutator_ops(x, row_major, units));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.basis_names.push_back("E_{" + std::to_string(i + 1) + std::to_string(j + 1) + "}");
    return m;
}

rep::Bilinear matrix_algebra_product(int k) {
    const auto units = matrix_units(k);
    rep::Bilinear b(units.size(), units.size(), units.size());
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = 0; j < units.size(); ++j) b.set_on_basis(i, j, row_major(units[i] * units[j]));
    return b;
}

rep::Decomposition matrix_algebra_decomposition(int k, const rep::Registry& reg) {
    const rep::Group g = rep::Group::gl(k);
    const std::size_t d = k * k;
    std::vector<Vector> adj;
    for (std::size_t j = 0; j + 1 < d; ++j) adj.push_back(row_major(rep::adjoint_basis_matrix(k, j)));
    rep::Decomposition dec{g, d, {}};
    dec.summands.push_back({"A_0", {g, rep::kTrivial}, std::nullopt,
                            Matrix::from_columns({row_major(Matrix::identity(k))}, d)});
    dec.summands.push_back({"A_1", {g, rep::kAdjoint}, std::nullopt, Matrix::from_columns(adj, d)});
    dec.validate(matrix_algebra_module(k), reg);
    return dec;
}

FixtureReport mk_report(int k) {
    auto reg = rep::gl_labeling(k);
    auto dec = matrix_algebra_decomposition(k, reg);
    auto computed = extract(matrix_algebra_module(k), matrix_algebra_product(k), dec, reg);
    CellLiteral square{"A_1", "A_1", {{"A_0", 1, q(1, k)}, {"A_1", 1, q(1, 2)}}};
    if (k > 2) square.terms.emplace_back("A_1", 2, q(1, 2));
    auto expected = table_from_literals(reg, summand_infos(dec),
                                        {{"A_0", "A_0", {{"A_0", 1, 1}}},
                                         {"A_0", "A_1", {{"A_1", 1, 1}}},
                                         {"A_1", "A_0", {{"A_1", 1, 1}}},
                                         square});
    return make_report("M_" + std::to_string(k) + " product table", std::move(computed), std::move(expected));
}

// ---------------------------------------------------------------- sl(3) under the corner SL2

rep::GModule sl3_module() {
    const auto basis = sl3_basis();
    rep::GModule m{rep::Group::sl2(), basis.size(), {}, {}};
    for (const Matrix& x : {rep::elementary(3, 0, 1), rep::elementary(3, 0, 0) - rep::elementary(3, 1, 1),
                            rep::elementary(3, 1, 0)})
        m.ops.push_back(commutator_ops(x, rep::adjoint_coords, basis));
    for (const char* nm : {"E_{12}", "E_{13}", "E_{21}", "E_{23}", "E_{31}", "E_{32}", "H_{12}", "H_{23}"})
        m.basis_names.push_back(nm);
    return m;
}

rep::Bilinear sl3_bracket() {
    const auto basis = sl3_basis();
    rep::Bilinear b(8, 8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) b.set_on_basis(i, j, rep::adjoint_coords(commutator(basis[i], basis[j])));
    return b;
}

rep::Decomposition sl3_decomposition(const rep::Registry& reg) {
    Matrix D = Matrix::identity(3);
    D(2, 2) = -2;
    return rep::decompose_sl2(sl3_module(), reg,
                              std::vector<rep::HwvChoice>{{"V_0", rep::adjoint_coords(D)},
                                                          {"V_2", rep::adjoint_coords(rep::elementary(3, 0, 1))},
                                                          {"V_1", rep::adjoint_coords(rep::elementary(3, 0, 2))},
                                                          {"V_1'", rep::adjoint_coords(rep::elementary(3, 2, 1))}});
}

FixtureReport sl3_report() {
    auto reg = rep::sl2_first_labeling();
    auto dec = sl3_decomposition(reg);
    auto computed = extract(sl3_module(), sl3_bracket(), dec, reg);
    // Transcribed cell by cell, including the entries that disagree with the computation.
    auto expected = table_from_literals(reg, summand_infos(dec),
                                        {
                                            {"V_0", "V_1", {{"V_1", 1, 3}}},
                                            {"V_0", "V_1'", {{"V_1'", 1, -3}}},
                                            {"V_2", "V_2", {{"V_2", 1, 1}}},
                                            {"V_2", "V_1", {{"V_1", 1, 1}}},
                                            {"V_2", "V_1'", {{"V_1'", 1, 1}}},
                                            {"V_1", "V_0", {{"V_1", 1, -3}}},
                                            {"V_1", "V_2", {{"V_1", 1, -1}}},
                                            {"V_1", "V_1'", {{"V_2", 1, q(-1, 2)}, {"V_0", 1, q(1, 2)}}},
                                            {"V_1'", "V_0", {{"V_1", 1, 3}}},
                                            {"V_1'", "V_2", {{"V_1'", 1, -1}}},
                                            {"V_1'", "V_1", {{"V_2", 1, q(1, 2)}, {"V_0", 1, q(1, 2)}}},
                                        });
    return make_report("sl(3) bracket table", std::move(computed), std::move(expected));
}

// ---------------------------------------------------------------- truncated K[x,y]

rep::GModule poly_module(int max_degree) {
    auto reg = rep::sl2_poly_labeling(max_degree);
    std::size_t dim = 0;
    for (int r = 0; r <= max_degree; ++r) dim += r + 1;
    rep::GModule m{rep::Group::sl2(), dim, {Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim)}, {}};
    std::size_t offset = 0;
    for (int r = 0; r <= max_degree; ++r) {
        const auto& model = reg.model({rep::Group::sl2(), r});
        for (int X = 0; X < 3; ++X)
            for (int i = 0; i <= r; ++i)
                for (int j = 0; j <= r; ++j) m.ops[X](offset + i, offset + j) = model.module.ops[X](i, j);
        for (const auto& nm : model.module.basis_names) m.basis_names.push_back(nm);
        offset += r + 1;
    }
    return m;
}

rep::Bilinear poly_product(int max_degree) {
    std::vector<std::size_t> offset{0};
    for (int r = 0; r <= max_degree; ++r) offset.push_back(offset.back() + r + 1);
    const std::size_t dim = offset.back();
    rep::Bilinear b(dim, dim, dim);
    for (int r1 = 0; r1 <= max_degree; ++r1)
        for (int r2 = 0; r1 + r2 <= max_degree; ++r2)
            for (int i = 0; i <= r1; ++i)
                for (int j = 0; j <= r2; ++j) b.at(offset[r1 + r2] + i + j, offset[r1] + i, offset[r2] + j) = 1;
    return b;
}

rep::Decomposition poly_decomposition(int max_degree, const rep::Registry& reg) {
    const std::size_t dim = poly_module(max_degree).dim;
    rep::Decomposition dec{rep::Group::sl2(), dim, {}};
    std::size_t offset = 0;
    for (int r = 0; r <= max_degree; ++r) {
        Matrix tau(dim, r + 1);
        for (int i = 0; i <= r; ++i) tau(offset + i, i) = 1;
        dec.summands.push_back({poly_id(r), {rep::Group::sl2(), r}, r, tau});
        offset += r + 1;
    }
    dec.validate(poly_module(max_degree), reg);
    return dec;
}

FixtureReport poly_report(int max_degree) {
    auto reg = rep::sl2_poly_labeling(max_degree);
    auto dec = poly_decomposition(max_degree, reg);
    auto computed = extract(poly_module(max_degree), poly_product(max_degree), dec, reg);
    std::vector<CellLiteral> cells;
    for (int r1 = 0; r1 <= max_degree; ++r1)
        for (int r2 = 0; r1 + r2 <= max_degree; ++r2)
            cells.push_back({poly_id(r1), poly_id(r2), {{poly_id(r1 + r2), 1, 1}}});
    auto expected = table_from_literals(reg, summand_infos(dec), cells);
    return make_report("K[x,y] up to degree " + std::to_string(max_degree), std::move(computed),
                       std::move(expected));
}

GTable s3_fixture() { return checked(s3_table_report()); }
GTable s3_cotable_fixture() { return checked(s3_cotable_report()); }
GTable mk_fixture(int k) { return checked(mk_report(k)); }
GTable sl3_fixture() { return checked(sl3_report()); }
GTable poly_fixture(int max_degree) { return checked(poly_report(max_degree)); }

}  // namespace gtable::gallery
