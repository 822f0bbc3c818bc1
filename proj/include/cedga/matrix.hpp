#pragma once

#include "cedga/field.hpp"

#include <cstddef>
#include <vector>

namespace cedga {

/// Dense row-major matrix over F_p.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::uint32_t p, std::size_t n);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Fp& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Fp at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Fp* row(std::size_t r) { return data_.data() + r * cols_; }
    const Fp* row(std::size_t r) const { return data_.data() + r * cols_; }
    bool is_zero() const noexcept;

    Matrix transpose() const;
    Matrix operator-() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Fp> data_;
};

/// Row reduction with the elimination step parallelised over rows.
std::size_t rank(const Matrix& m);
std::size_t rank_serial(const Matrix& m);
/// Columns form a basis of the kernel.
Matrix nullspace(const Matrix& m);
Matrix hconcat(const Matrix& a, const Matrix& b);

} // namespace cedga
