#include "gtable/repkit.hpp"

#include <functional>

namespace gtable::rep {

namespace {

using BilinearFn = std::function<Vector(const Vector&, const Vector&)>;

Bilinear tabulate(std::size_t left, std::size_t right, std::size_t out, const BilinearFn& fn) {
    Bilinear m(left, right, out);
    for (std::size_t i = 0; i < left; ++i)
        for (std::size_t j = 0; j < right; ++j)
            m.set_on_basis(i, j, fn(la::unit_vector(left, i), la::unit_vector(right, j)));
    return m;
}

Bilinear unit_left(std::size_t dim) {
    return tabulate(1, dim, dim, [](const Vector& x, const Vector& v) { return la::scale(x[0], v); });
}

Bilinear unit_right(std::size_t dim) {
    return tabulate(dim, 1, dim, [](const Vector& v, const Vector& x) { return la::scale(x[0], v); });
}

void add_units(Registry& reg) {
    auto ids = reg.irreps();
    const IrrepId triv = ids.front();
    for (const auto& id : ids) {
        std::size_t d = reg.model(id).dim();
        reg.add_map(triv, id, id, unit_left(d));
        if (id != triv) reg.add_map(id, triv, id, unit_right(d));
    }
}

Scalar trace(const Matrix& m) {
    Scalar t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// sl(2) in the basis (E, H, F): [[a, b], [c, -a]] has coordinates (b, a, c).
Matrix sl2_matrix(const Vector& v) {
    Matrix m(2, 2);
    m(0, 1) = v[0];
    m(0, 0) = v[1];
    m(1, 1) = -v[1];
    m(1, 0) = v[2];
    return m;
}

Vector sl2_coords(const Matrix& m) { return {m(0, 1), m(0, 0), m(1, 0)}; }

Vector as_vector(const Matrix& column) { return column.column(0); }

Matrix as_column(const Vector& v) { return Matrix::from_columns({v}, v.size()); }

Scalar rat(long n, long d = 1) { return la::ratio(n, d); }

}  // namespace

Registry sl2_first_labeling() {
    Registry reg(Group::sl2(), "sl2-first");
    const Group g = Group::sl2();

    GModule v0{g, 1, {Matrix(1, 1), Matrix(1, 1), Matrix(1, 1)}, {"1"}};
    GModule v1{g, 2, {Matrix{{0, 1}, {0, 0}}, Matrix{{1, 0}, {0, -1}}, Matrix{{0, 0}, {1, 0}}}, {"e1", "e2"}};
    GModule v2{g, 3, {}, {"E", "H", "F"}};
    for (const auto& x : {Vector{1, 0, 0}, Vector{0, 1, 0}, Vector{0, 0, 1}}) {
        Matrix op(3, 3);
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 3; ++i)
                op(i, j) = sl2_coords(commutator(sl2_matrix(x), sl2_matrix(la::unit_vector(3, j))))[i];
        v2.ops.push_back(op);
    }
    reg.add_model({IrrepId{g, 0}, v0, Vector{1}});
    reg.add_model({IrrepId{g, 1}, v1, Vector{1, 0}});
    reg.add_model({IrrepId{g, 2}, v2, Vector{1, 0, 0}});
    add_units(reg);

    const IrrepId i0{g, 0}, i1{g, 1}, i2{g, 2};
    reg.add_map(i1, i1, i0, tabulate(2, 2, 1, [](const Vector& x, const Vector& y) {
        return Vector{x[0] * y[1] - x[1] * y[0]};
    }));
    reg.add_map(i1, i1, i2, tabulate(2, 2, 3, [](const Vector& x, const Vector& y) {
        Matrix m(2, 2);
        m(0, 0) = x[0] * y[1] + x[1] * y[0];
        m(0, 1) = -2 * x[0] * y[0];
        m(1, 0) = 2 * x[1] * y[1];
        m(1, 1) = -m(0, 0);
        return sl2_coords(m);
    }));
    reg.add_map(i2, i1, i1, tabulate(3, 2, 2, [](const Vector& a, const Vector& x) {
        return as_vector(sl2_matrix(a) * as_column(x));
    }));
    reg.add_map(i1, i2, i1, tabulate(2, 3, 2, [](const Vector& x, const Vector& a) {
        return as_vector(sl2_matrix(a) * as_column(x));
    }));
    reg.add_map(i2, i2, i0, tabulate(3, 3, 1, [](const Vector& a, const Vector& b) {
        return Vector{trace(sl2_matrix(a) * sl2_matrix(b))};
    }));
    reg.add_map(i2, i2, i2, tabulate(3, 3, 3, [](const Vector& a, const Vector& b) {
        return sl2_coords(commutator(sl2_matrix(a), sl2_matrix(b)));
    }));
    return reg;
}

Registry sl2_poly_labeling(int max_degree) {
    if (max_degree < 0) throw DimensionError("negative degree bound");
    Registry reg(Group::sl2(), "sl2-poly(" + std::to_string(max_degree) + ")");
    const Group g = Group::sl2();
    for (int r = 0; r <= max_degree; ++r) {
        const std::size_t d = r + 1;
        // basis index i stands for x^(r-i) y^i
        Matrix E(d, d), H(d, d), F(d, d);
        std::vector<std::string> names;
        for (int i = 0; i <= r; ++i) {
            if (i > 0) E(i - 1, i) = i;
            H(i, i) = r - 2 * i;
            if (i < r) F(i + 1, i) = r - i;
            std::string nm;
            if (r - i) nm += r - i == 1 ? "x" : "x^" + std::to_string(r - i);
            if (i) nm += i == 1 ? "y" : "y^" + std::to_string(i);
            names.push_back(nm.empty() ? "1" : nm);
        }
        reg.add_model({IrrepId{g, r}, GModule{g, d, {E, H, F}, names}, la::unit_vector(d, 0)});
    }
    for (int r1 = 0; r1 <= max_degree; ++r1)
        for (int r2 = 0; r1 + r2 <= max_degree; ++r2) {
            Bilinear m(r1 + 1, r2 + 1, r1 + r2 + 1);
            for (int i = 0; i <= r1; ++i)
                for (int j = 0; j <= r2; ++j) m.at(i + j, i, j) = 1;
            reg.add_map(IrrepId{g, r1}, IrrepId{g, r2}, IrrepId{g, r1 + r2}, m);
        }
    return reg;
}

Matrix elementary(int k, int a, int b) {
    Matrix m(k, k);
    m(a, b) = 1;
    return m;
}

Matrix adjoint_basis_matrix(int k, std::size_t index) {
    std::size_t n = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (n++ == index) return elementary(k, i, j);
        }
    int i = int(index - n);
    if (i < 0 || i >= k - 1) throw DimensionError("adjoint basis index out of range");
    return elementary(k, i, i) - elementary(k, i + 1, i + 1);
}

Vector adjoint_coords(const Matrix& m) {
    const std::size_t k = m.rows();
    Vector v;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) v.push_back(m(i, j));
    Scalar partial = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        partial += m(i, i);
        v.push_back(partial);
    }
    return v;
}

std::vector<Matrix> gl_adjoint_ops(int k) {
    const std::size_t d = k * k - 1;
    std::vector<Matrix> basis;
    for (std::size_t j = 0; j < d; ++j) basis.push_back(adjoint_basis_matrix(k, j));
    std::vector<Matrix> ops;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Matrix op(d, d);
            Matrix x = elementary(k, a, b);
            for (std::size_t j = 0; j < d; ++j) {
                Vector c = adjoint_coords(commutator(x, basis[j]));
                for (std::size_t i = 0; i < d; ++i) op(i, j) = c[i];
            }
            ops.push_back(op);
        }
    return ops;
}

Registry gl_labeling(int k) {
    if (k < 2) throw DimensionError("GL labeling needs k >= 2");
    const Group g = Group::gl(k);
    Registry reg(g, "gl-" + std::to_string(k));
    const std::size_t d = k * k - 1;

    GModule triv{g, 1, std::vector<Matrix>(k * k, Matrix(1, 1)), {"1"}};
    GModule adj{g, d, gl_adjoint_ops(k), {}};
    reg.add_model({IrrepId{g, kTrivial}, triv, {}});
    reg.add_model({IrrepId{g, kAdjoint}, adj, {}});
    add_units(reg);

    auto mat = [k, d](const Vector& v) {
        Matrix m(k, k);
        for (std::size_t j = 0; j < d; ++j)
            if (v[j] != 0) m = m + adjoint_basis_matrix(k, j).scaled(v[j]);
        return m;
    };
    const IrrepId t{g, kTrivial}, a{g, kAdjoint};
    reg.add_map(a, a, t, tabulate(d, d, 1, [&](const Vector& x, const Vector& y) {
        return Vector{trace(mat(x) * mat(y))};
    }));
    reg.add_map(a, a, a, tabulate(d, d, d, [&](const Vector& x, const Vector& y) {
        return adjoint_coords(commutator(mat(x), mat(y)));
    }));
    // The symmetric map vanishes identically on sl(2).
    if (k > 2)
        reg.add_map(a, a, a, tabulate(d, d, d, [&](const Vector& x, const Vector& y) {
            Matrix A = mat(x), B = mat(y);
            Matrix s = A * B + B * A - Matrix::identity(k).scaled(rat(2, k) * trace(A * B));
            return adjoint_coords(s);
        }));
    return reg;
}

Registry s3_labeling() {
    const Group g = Group::s3();
    Registry reg(g, "s3");
    reg.add_model({IrrepId{g, kTr}, GModule{g, 1, {Matrix{{1}}, Matrix{{1}}}, {"1"}}, {}});
    reg.add_model({IrrepId{g, kSg}, GModule{g, 1, {Matrix{{-1}}, Matrix{{1}}}, {"1"}}, {}});
    reg.add_model({IrrepId{g, kStd},
                   GModule{g, 2, {Matrix{{0, 1}, {1, 0}}, Matrix{{-1, -1}, {1, 0}}}, {"e1", "e2"}},
                   {}});
    add_units(reg);

    const IrrepId tr{g, kTr}, sg{g, kSg}, st{g, kStd};
    reg.add_map(sg, sg, tr, Bilinear(1, 1, Matrix{{1}}));
    // Columns are images of the lexicographic tensor basis.
    reg.add_map(sg, st, st, Bilinear(1, 2, Matrix{{1, 2}, {-2, -1}}));
    reg.add_map(st, sg, st, Bilinear(2, 1, Matrix{{1, 2}, {-2, -1}}));
    reg.add_map(st, st, tr, Bilinear(2, 2, Matrix{{2, 1, 1, 2}}));
    reg.add_map(st, st, sg, Bilinear(2, 2, Matrix{{0, 1, -1, 0}}));
    reg.add_map(st, st, st, Bilinear(2, 2, Matrix{{-1, 1, 1, 2}, {2, 1, 1, -1}}));
    return reg;
}

}  // namespace gtable::rep
