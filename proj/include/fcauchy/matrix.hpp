#pragma once

#include <cstddef>
#include <vector>

#include "fcauchy/numerics.hpp"

namespace fcauchy {

/// Exact matrix over GaussianRational, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    /// Builds from nested rows; throws std::invalid_argument on ragged input.
    static Matrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

}  // namespace fcauchy
