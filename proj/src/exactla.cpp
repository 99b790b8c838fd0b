#include "gtable/exactla.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace gtable::la {

Scalar ratio(long n, long d) {
    if (d == 0) throw DimensionError("zero denominator");
    Scalar x(n, d);
    x.canonicalize();
    return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    if (s.empty() || s.find_first_of(" \t\n") != std::string::npos)
        throw ParseError("bad scalar '" + s + "'");
    auto slash = s.find('/');
    mpz_class num, den = 1;
    if (num.set_str(s.substr(0, slash), 10) != 0)
        throw ParseError("bad scalar '" + s + "'");
    if (slash != std::string::npos) {
        auto d = s.substr(slash + 1);
        if (d.empty() || d[0] == '-' || d[0] == '+' || den.set_str(d, 10) != 0 || den == 0)
            throw ParseError("bad scalar '" + s + "'");
    }
    Scalar x(num, den);
    x.canonicalize();
    return x;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vector add(const Vector& a, const Vector& b) {
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Scalar& s, const Vector& v) {
    Vector r(v);
    for (auto& x : r) x *= s;
    return r;
}

void axpy(const Scalar& s, const Vector& x, Vector& y) {
    if (s == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0) y[i] += s * x[i];
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) += a * o(k, j);
        }
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0 && (*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r(*this);
    for (auto& x : r.data_) x *= s;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- elimination

namespace {

std::vector<mpz_class> integer_row(const Matrix& m, std::size_t i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    std::vector<mpz_class> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) r[j] = m(i, j).get_num() * (l / m(i, j).get_den());
    return r;
}

// Rows 0..rank-1 of `rows` hold an echelon form with pivots `piv`; scale pivots to one
// and clear above them.
Echelon finish(std::size_t nrows, std::size_t ncols, std::vector<Vector> top,
               std::vector<std::size_t> piv) {
    const std::size_t rk = piv.size();
    for (std::size_t k = 0; k < rk; ++k) {
        Scalar inv = 1 / top[k][piv[k]];
        for (auto& x : top[k]) x *= inv;
    }
    for (std::size_t k = rk; k-- > 0;)
        for (std::size_t i = 0; i < k; ++i) {
            Scalar f = top[i][piv[k]];
            if (f == 0) continue;
            for (std::size_t j = piv[k]; j < ncols; ++j)
                if (top[k][j] != 0) top[i][j] -= f * top[k][j];
        }
    Echelon e{Matrix(nrows, ncols), std::move(piv)};
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < ncols; ++j) e.rref(i, j) = top[i][j];
    return e;
}

}  // namespace

Echelon rref_dense(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(R);
    for (std::size_t i = 0; i < R; ++i) a[i] = integer_row(m, i);

    mpz_class prev = 1;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        const mpz_class& pv = a[r][c];
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                mpz_class t = pv * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        piv.push_back(c);
        ++r;
    }
    std::vector<Vector> top(r, Vector(C));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) top[i][j] = a[i][j];
    return finish(R, C, std::move(top), std::move(piv));
}

Echelon rref_sparse(const Matrix& m) {
    using Row = std::map<std::size_t, mpz_class>;
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<Row> rows(R);
    for (std::size_t i = 0; i < R; ++i) {
        auto full = integer_row(m, i);
        for (std::size_t j = 0; j < C; ++j)
            if (full[j] != 0) rows[i].emplace(j, std::move(full[j]));
    }
    auto make_primitive = [](Row& row) {
        mpz_class g = 0;
        for (auto& [j, x] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& [j, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    };

    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && !rows[p].count(c)) ++p;
        if (p == R) continue;
        std::swap(rows[p], rows[r]);
        const Row& pr = rows[r];
        const mpz_class a = pr.at(c);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end()) continue;
            mpz_class b = it->second;
            mpz_class g = gcd(a, b);
            mpz_class fa = a / g, fb = b / g;
            Row next;
            auto x = rows[i].begin();
            auto y = pr.begin();
            while (x != rows[i].end() || y != pr.end()) {
                std::size_t jx = x != rows[i].end() ? x->first : C;
                std::size_t jy = y != pr.end() ? y->first : C;
                mpz_class v;
                std::size_t j;
                if (jx < jy) {
                    j = jx; v = fa * x->second; ++x;
                } else if (jy < jx) {
                    j = jy; v = -fb * y->second; ++y;
                } else {
                    j = jx; v = fa * x->second - fb * y->second; ++x; ++y;
                }
                if (v != 0) next.emplace_hint(next.end(), j, std::move(v));
            }
            make_primitive(next);
            rows[i] = std::move(next);
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<Vector> top(r, Vector(C));
    for (std::size_t i = 0; i < r; ++i)
        for (auto& [j, x] : rows[i]) top[i][j] = x;
    return finish(R, C, std::move(top), std::move(piv));
}

Echelon rref(const Matrix& m) {
    if (m.rows() > kDenseLimit || m.cols() > kDenseLimit) return rref_sparse(m);
    return rref_dense(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
    Subspace s(ambient_dim);
    if (generators.empty()) return s;
    Echelon e = rref(Matrix::from_rows(generators, ambient_dim));
    for (std::size_t i = 0; i < e.rank(); ++i) s.basis_.push_back(e.rref.row(i));
    s.pivots_ = e.pivots;
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(unit_vector(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Vector Subspace::reduce(Vector v) const {
    if (v.size() != ambient_) throw DimensionError("vector outside ambient space");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Scalar f = v[pivots_[k]];
        if (f != 0) axpy(-f, basis_[k], v);
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

Subspace Subspace::operator+(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionError("subspace ambient mismatch");
    std::vector<Vector> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, gens);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

// ---------------------------------------------------------------- solving

namespace {

Subspace kernel_from(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rref(i, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(cols, gens);
}

}  // namespace

Subspace kernel(const Matrix& m) { return kernel_from(rref(m), m.cols()); }

Subspace image(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return Subspace::span(m.rows(), cols);
}

std::optional<Solution> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
    const std::size_t C = m.cols();
    Matrix aug(m.rows(), C + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
        aug(i, C) = b[i];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == C) return std::nullopt;
    Vector x(C);
    for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.rref(i, C);
    return Solution{std::move(x), kernel_from(e, C)};
}

std::optional<Vector> coords_modulo(const Vector& z, const std::vector<Vector>& reps,
                                    const Subspace& w) {
    const std::size_t n = w.ambient_dim();
    if (z.size() != n) throw DimensionError("coords_modulo: vector outside ambient space");
    std::vector<Vector> cols;
    for (const auto& r : reps) {
        if (r.size() != n) throw DimensionError("coords_modulo: representative outside ambient space");
        cols.push_back(w.reduce(r));
    }
    Matrix a = Matrix::from_columns(cols, n);
    if (rank(a) != reps.size())
        throw AmbiguousCoordinates("representatives are dependent modulo the subspace");
    auto sol = solve(a, w.reduce(z));
    if (!sol) return std::nullopt;
    return sol->particular;
}

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionError("inverse of non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw DimensionError("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

}  // namespace gtable::la
