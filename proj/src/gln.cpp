#include "gtable/gallery.hpp"

namespace gtable::gallery {

namespace {

Scalar trace(const Matrix& m) {
    Scalar t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

Matrix eye(int n) { return Matrix::identity(n); }

void require_same_n(const GlnGlnAb& u, const GlnGlnAb& v) {
    if (u.n != v.n)
        throw SizeMismatch("gl(" + std::to_string(u.n) + ") and gl(" + std::to_string(v.n) + ") elements");
}

Vector flatten(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

Matrix unflatten(int n, const Vector& v, std::size_t offset) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v.at(offset + i * n + j);
    return m;
}

Vector pair_coords(const Matrix& m0, const Matrix& m1) {
    Vector v = flatten(m0);
    Vector w = flatten(m1);
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

// Commutator with x on both halves of the 2n^2 coordinates.
Matrix pair_ad(int n, const Matrix& x) {
    const std::size_t d = 2 * n * n;
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < d; ++k) {
        Vector e = la::unit_vector(d, k);
        cols.push_back(pair_coords(commutator(x, unflatten(n, e, 0)), commutator(x, unflatten(n, e, n * n))));
    }
    return Matrix::from_columns(cols, d);
}

rep::Bilinear pair_bilinear(int n, GlnGlnAb (*op)(const GlnGlnAb&, const GlnGlnAb&)) {
    const std::size_t d = 2 * n * n;
    rep::Bilinear b(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            b.set_on_basis(i, j, gln_coords(op(gln_from_coords(n, la::unit_vector(d, i)),
                                                gln_from_coords(n, la::unit_vector(d, j)))));
    return b;
}

std::string ab_suffix(bool ab) { return ab ? "_{ab}" : "_0"; }

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

std::vector<Sparse> sparse_table(const rep::Bilinear& b) {
    const std::size_t d = b.left_dim();
    std::vector<Sparse> t(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < b.out_dim(); ++k)
                if (b.at(k, i, j) != 0) t[i * d + j].emplace_back(k, b.at(k, i, j));
    return t;
}

// acc += sign * op(x, e_k) when x_left, else sign * op(e_k, x).
void accumulate(Vector& acc, const std::vector<Sparse>& t, std::size_t d, const Sparse& x, std::size_t k,
                bool x_left, int sign) {
    for (const auto& [m, c] : x)
        for (const auto& [o, v] : t[x_left ? m * d + k : k * d + m]) acc[o] += sign * c * v;
}

}  // namespace

GlnGlnAb GlnGlnAb::from_matrices(const Matrix& m0, const Matrix& m1) {
    if (m0.rows() != m0.cols() || m1.rows() != m1.cols() || m0.rows() != m1.rows())
        throw SizeMismatch("both components must be square of the same size");
    const int n = int(m0.rows());
    GlnGlnAb u;
    u.n = n;
    u.a0 = trace(m0) / n;
    u.A0 = m0 - eye(n).scaled(u.a0);
    u.a1 = trace(m1) / n;
    u.A1 = m1 - eye(n).scaled(u.a1);
    return u;
}

Matrix GlnGlnAb::first() const { return eye(n).scaled(a0) + A0; }
Matrix GlnGlnAb::second() const { return eye(n).scaled(a1) + A1; }

GlnGlnAb gln_product(const GlnGlnAb& u, const GlnGlnAb& v) {
    require_same_n(u, v);
    const int n = u.n;
    Matrix first = eye(n).scaled(u.a0 * v.a0) + v.A0.scaled(u.a0) + u.A0.scaled(v.a0);
    Scalar s = u.a0 * v.a1 + u.a1 * v.a0 + trace(u.A0 * v.A1 + u.A1 * v.A0) - la::ratio(2, n) * trace(u.A0 * v.A0);
    Matrix second = eye(n).scaled(s) + v.A1.scaled(u.a0) + u.A1.scaled(v.a0) + u.A0 * v.A0 + v.A0 * u.A0;
    return GlnGlnAb::from_matrices(first, second);
}

GlnGlnAb gln_bracket(const GlnGlnAb& u, const GlnGlnAb& v) {
    require_same_n(u, v);
    return GlnGlnAb::from_matrices(commutator(u.first(), v.first()),
                                   commutator(u.first(), v.second()) + commutator(u.second(), v.first()));
}

Vector gln_coords(const GlnGlnAb& u) { return pair_coords(u.first(), u.second()); }

GlnGlnAb gln_from_coords(int n, const Vector& v) {
    if (v.size() != std::size_t(2 * n * n)) throw SizeMismatch("coordinate vector has the wrong length");
    return GlnGlnAb::from_matrices(unflatten(n, v, 0), unflatten(n, v, n * n));
}

rep::Bilinear gln_product_bilinear(int n) { return pair_bilinear(n, gln_product); }
rep::Bilinear gln_bracket_bilinear(int n) { return pair_bilinear(n, gln_bracket); }

rep::GModule gln_module(int n) {
    if (n < 2) throw DimensionError("gl(n) needs n >= 2");
    rep::GModule m{rep::Group::gl(n), std::size_t(2 * n * n), {}, {}};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.ops.push_back(pair_ad(n, rep::elementary(n, a, b)));
    for (int half = 0; half < 2; ++half)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.basis_names.push_back("E_{" + std::to_string(i + 1) + std::to_string(j + 1) + "}" +
                                        ab_suffix(half == 1));
    return m;
}

rep::Decomposition gln_decomposition(int n, const rep::Registry& reg) {
    const rep::Group g = rep::Group::gl(n);
    const std::size_t d = 2 * n * n;
    const Matrix zero(n, n);
    const std::string N = std::to_string(n);
    rep::Decomposition dec{g, d, {}};
    for (bool ab : {false, true}) {
        auto place = [&](const Matrix& x) { return ab ? pair_coords(zero, x) : pair_coords(x, zero); };
        rep::Summand unit{"(I_" + N + ")" + ab_suffix(ab), {g, rep::kTrivial}, std::nullopt,
                          Matrix::from_columns({place(eye(n))}, d)};
        std::vector<Vector> cols;
        for (int j = 0; j < n * n - 1; ++j) cols.push_back(place(rep::adjoint_basis_matrix(n, j)));
        rep::Summand adj{"sl(" + N + ")" + ab_suffix(ab), {g, rep::kAdjoint}, std::nullopt,
                         Matrix::from_columns(cols, d)};
        if (!ab) {
            dec.summands.push_back(std::move(unit));
            dec.summands.push_back(std::move(adj));
        } else {
            dec.summands.push_back(std::move(adj));
            dec.summands.push_back(std::move(unit));
        }
    }
    dec.validate(gln_module(n), reg);
    return dec;
}

GlnTables gln_tables(int n) {
    auto reg = rep::gl_labeling(n);
    auto m = gln_module(n);
    auto dec = gln_decomposition(n, reg);
    return {extract(m, gln_product_bilinear(n), dec, reg), extract(m, gln_bracket_bilinear(n), dec, reg)};
}

GlnTables gln_fixture(int n) {
    auto reg = rep::gl_labeling(n);
    auto infos = summand_infos(gln_decomposition(n, reg));
    const std::string i0 = infos[0].id, s0 = infos[1].id, sab = infos[2].id, iab = infos[3].id;
    std::vector<CellLiteral> product = {
        {i0, i0, {{i0, 1, 1}}},   {i0, s0, {{s0, 1, 1}}},  {i0, sab, {{sab, 1, 1}}}, {i0, iab, {{iab, 1, 1}}},
        {s0, i0, {{s0, 1, 1}}},   {s0, sab, {{iab, 1, 1}}}, {sab, i0, {{sab, 1, 1}}}, {sab, s0, {{iab, 1, 1}}},
        {iab, i0, {{iab, 1, 1}}},
    };
    if (n > 2) product.push_back({s0, s0, {{sab, 2, 1}}});
    std::vector<CellLiteral> bracket = {
        {s0, s0, {{s0, 1, 1}}},
        {s0, sab, {{sab, 1, 1}}},
        {sab, s0, {{sab, 1, 1}}},
    };
    return {table_from_literals(reg, infos, product), table_from_literals(reg, infos, bracket)};
}

AxiomReport poisson_axioms(const rep::Bilinear& product, const rep::Bilinear& bracket) {
    const std::size_t d = product.left_dim();
    if (product.right_dim() != d || product.out_dim() != d || bracket.left_dim() != d ||
        bracket.right_dim() != d || bracket.out_dim() != d)
        throw SizeMismatch("product and bracket must live on one space");
    const auto P = sparse_table(product);
    const auto B = sparse_table(bracket);
    AxiomReport r;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            ++r.pairs;
            if (product.on_basis(i, j) != product.on_basis(j, i)) r.commutative = false;
            if (bracket.on_basis(i, j) != la::scale(-1, bracket.on_basis(j, i))) r.antisymmetric = false;
        }
    Vector acc(d);
    auto check_zero = [&acc] {
        bool zero = true;
        for (auto& x : acc) {
            if (x != 0) zero = false;
            x = 0;
        }
        return zero;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                ++r.triples;
                // (e_i e_j) e_k - e_i (e_j e_k)
                accumulate(acc, P, d, P[i * d + j], k, true, 1);
                accumulate(acc, P, d, P[j * d + k], i, false, -1);
                if (!check_zero()) r.associative = false;
                // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
                accumulate(acc, B, d, B[j * d + k], i, false, 1);
                accumulate(acc, B, d, B[k * d + i], j, false, 1);
                accumulate(acc, B, d, B[i * d + j], k, false, 1);
                if (!check_zero()) r.jacobi = false;
                // [e_i, e_j e_k] - [e_i, e_j] e_k - e_j [e_i, e_k]
                accumulate(acc, B, d, P[j * d + k], i, false, 1);
                accumulate(acc, P, d, B[i * d + j], k, true, -1);
                accumulate(acc, P, d, B[i * d + k], j, false, -1);
                if (!check_zero()) r.leibniz = false;
            }
    return r;
}

AxiomReport gln_axioms(int n) { return poisson_axioms(gln_product_bilinear(n), gln_bracket_bilinear(n)); }

rep::GModule gl3_sl2_module() {
    const int n = 3;
    rep::GModule m{rep::Group::sl2(), 18, {}, gln_module(n).basis_names};
    m.ops.push_back(pair_ad(n, rep::elementary(n, 0, 1)));
    m.ops.push_back(pair_ad(n, rep::elementary(n, 0, 0) - rep::elementary(n, 1, 1)));
    m.ops.push_back(pair_ad(n, rep::elementary(n, 1, 0)));
    return m;
}

rep::Decomposition gl3_sl2_decomposition(const rep::Registry& reg) {
    const int n = 3;
    const Matrix zero(n, n);
    Matrix D = eye(n);
    D(2, 2) = -2;
    const std::vector<std::pair<std::string, Matrix>> vectors = {
        {"D", D},
        {"(E_{12})", rep::elementary(n, 0, 1)},
        {"(E_{13})", rep::elementary(n, 0, 2)},
        {"(E_{32})", rep::elementary(n, 2, 1)},
    };
    std::vector<rep::HwvChoice> choices;
    choices.push_back({"(I_3)_0", pair_coords(eye(n), zero)});
    for (const auto& [id, x] : vectors) choices.push_back({id + "_0", pair_coords(x, zero)});
    for (const auto& [id, x] : vectors) choices.push_back({id + "_{ab}", pair_coords(zero, x)});
    choices.push_back({"(I_3)_{ab}", pair_coords(zero, eye(n))});
    return rep::decompose_sl2(gl3_sl2_module(), reg, choices);
}

GlnTables gl3_sl2_tables() {
    auto reg = rep::sl2_first_labeling();
    auto m = gl3_sl2_module();
    auto dec = gl3_sl2_decomposition(reg);
    return {extract(m, gln_product_bilinear(3), dec, reg), extract(m, gln_bracket_bilinear(3), dec, reg)};
}

}  // namespace gtable::gallery
