#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "depthlab/bigint.hpp"
#include "depthlab/errors.hpp"

namespace depthlab {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw input_error("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n, T{0});
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw input_error("matrix product dimension mismatch: " + std::to_string(a.rows_) + "x" +
                              std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                              std::to_string(b.cols_));
        Matrix c(a.rows_, b.cols_, T{0});
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += x * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// A matrix of nonnegative big integers with positive dimensions.
class NonNegIntMatrix {
public:
    NonNegIntMatrix() = default;

    explicit NonNegIntMatrix(Matrix<BigInt> m) : m_(std::move(m))
    {
        if (m_.rows() == 0 || m_.cols() == 0)
            throw input_error("matrix dimensions must be positive");
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (m_(i, j) < 0)
                    throw input_error("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is negative");
    }

    NonNegIntMatrix(std::initializer_list<std::initializer_list<long long>> init)
    {
        Matrix<BigInt> m(init.size(), init.size() == 0 ? 0 : init.begin()->size());
        std::size_t i = 0;
        for (const auto& row : init) {
            if (row.size() != m.cols())
                throw input_error("ragged matrix initializer");
            std::size_t j = 0;
            for (long long v : row)
                m(i, j++) = v;
            ++i;
        }
        *this = NonNegIntMatrix(std::move(m));
    }

    static NonNegIntMatrix identity(std::size_t n) { return NonNegIntMatrix(Matrix<BigInt>::identity(n)); }
    static NonNegIntMatrix zero(std::size_t r, std::size_t c) { return NonNegIntMatrix(Matrix<BigInt>(r, c, 0)); }

    std::size_t rows() const noexcept { return m_.rows(); }
    std::size_t cols() const noexcept { return m_.cols(); }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix<BigInt>& matrix() const noexcept { return m_; }

    NonNegIntMatrix transpose() const { return NonNegIntMatrix(m_.transpose()); }

    friend NonNegIntMatrix operator*(const NonNegIntMatrix& a, const NonNegIntMatrix& b)
    {
        return NonNegIntMatrix(a.m_ * b.m_);
    }

    NonNegIntMatrix pow(unsigned k) const
    {
        if (rows() != cols())
            throw input_error("matrix power needs a square matrix");
        NonNegIntMatrix result = identity(rows());
        for (unsigned i = 0; i < k; ++i)
            result = result * *this;
        return result;
    }

    bool is_zero() const
    {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (m_(i, j) != 0)
                    return false;
        return true;
    }

    bool is_strictly_positive() const
    {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (m_(i, j) == 0)
                    return false;
        return true;
    }

    friend bool operator==(const NonNegIntMatrix&, const NonNegIntMatrix&) = default;

private:
    Matrix<BigInt> m_;
};

} // namespace depthlab
