#pragma once

#include "malg/ratlin/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace malg::ratlin {

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix zero(std::size_t n) { return Matrix(n, n); }
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t height);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    bool is_symmetric() const;
    bool is_idempotent() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Gauss-Jordan inverse. A singular input throws InternalError: callers only
/// invert Gram matrices of independent vectors.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form of the given rows, zero rows dropped. The result
/// is the canonical basis of the row space.
std::vector<Vector> rref(std::vector<Vector> rows, std::size_t width);

}  // namespace malg::ratlin
