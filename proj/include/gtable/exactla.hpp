#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtable {

// Base for every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define GTABLE_ERROR(Name)                                                   \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

GTABLE_ERROR(AmbiguousCoordinates);
GTABLE_ERROR(DimensionError);
GTABLE_ERROR(ParseError);

}  // namespace gtable

namespace gtable::la {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// n/d in lowest terms; d must be nonzero.
Scalar ratio(long n, long d);
std::string to_string(const Scalar& x);
Scalar parse_scalar(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
void axpy(const Scalar& s, const Vector& x, Vector& y);  // y += s*x

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& other) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Scalar& s) const;
    bool operator==(const Matrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix rref;              // same shape as the input
    std::vector<std::size_t> pivots;  // pivot column of row i, i < rank
    std::size_t rank() const { return pivots.size(); }
};

// Matrices larger than this in either dimension take the sparse path.
inline constexpr std::size_t kDenseLimit = 64;

Echelon rref(const Matrix& m);
Echelon rref_dense(const Matrix& m);
Echelon rref_sparse(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    Vector reduce(Vector v) const;  // canonical representative modulo the subspace
    Subspace operator+(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

struct Solution {
    Vector particular;
    Subspace kernel;
};

// std::nullopt plays the role of NoSolution.
std::optional<Solution> solve(const Matrix& m, const Vector& b);

std::optional<Vector> coords_modulo(const Vector& z, const std::vector<Vector>& reps,
                                    const Subspace& w);

Matrix inverse(const Matrix& m);  // throws DimensionError if singular

}  // namespace gtable::la
