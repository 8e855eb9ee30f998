#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qlie/rational.hpp"

namespace qlie {

/// Dense matrix over the exact rationals, row-major. Values are immutable in
/// spirit: every operation returns a fresh matrix.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const = default;

    bool is_zero() const;

    Matrix transpose() const;

    /// Matrix product (this * rhs).
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    friend Matrix operator*(const Rational& c, const Matrix& m);

    /// this * v for a column vector v.
    Vec apply(const Vec& v) const;

    /// Horizontal concatenation [this | rhs].
    Matrix hcat(const Matrix& rhs) const;

    /// Kronecker product: (A ⊗ B)((i,k),(j,l)) = A(i,j) B(k,l).
    friend Matrix kron(const Matrix& a, const Matrix& b);

    /// Builds a matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Rank over the rationals, by exact Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Basis of the right null space {v : m v = 0}. Size = cols − rank.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some exact solution of m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Reduced row echelon form. Returns the reduced matrix and the pivot
/// column indices in order.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

Rational trace(const Matrix& m);

}  // namespace qlie
