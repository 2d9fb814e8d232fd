#pragma once

#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jjcoh {

using Vec = std::vector<Rational>;

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline Vec& add_scaled(Vec& dst, const Rational& s, const Vec& src)
{
    if (dst.size() != src.size())
        throw dimension_error("vector length mismatch");
    if (s != 0)
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst[i] += s * src[i];
    return dst;
}

inline Vec operator-(const Vec& a, const Vec& b)
{
    Vec r = a;
    add_scaled(r, -1, b);
    return r;
}

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (x != 0)
                return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_)
            throw dimension_error("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& x = (*this)(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += x * o(k, j);
            }
        return r;
    }

    Vec operator*(const Vec& v) const
    {
        if (cols_ != v.size())
            throw dimension_error("matrix-vector shape mismatch");
        Vec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0)
                    r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix operator+(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error("matrix sum shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error("matrix difference shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix scaled(const Rational& s) const
    {
        Matrix r = *this;
        for (auto& x : r.a_)
            x *= s;
        return r;
    }

    Matrix transposed() const
    {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    Vec column(std::size_t j) const
    {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, const Vec& v)
    {
        if (v.size() != rows_)
            throw dimension_error("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = v[i];
    }

    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.set_column(j, cols[j]);
        return m;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b)
    {
        if (a.rows() != b.rows())
            throw dimension_error("hstack row mismatch");
        Matrix m(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j)
                m(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(i, a.cols() + j) = b(i, j);
        }
        return m;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b)
    {
        if (a.cols() != b.cols())
            throw dimension_error("vstack column mismatch");
        Matrix m(a.rows() + b.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(a.rows() + i, j) = b(i, j);
        return m;
    }

    // Row-major flattening of the entries.
    Vec flattened() const { return a_; }

    static Matrix from_flat(std::size_t rows, std::size_t cols, const Vec& flat)
    {
        if (flat.size() != rows * cols)
            throw dimension_error("flat entry count mismatch");
        Matrix m(rows, cols);
        m.a_ = flat;
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec a_;
};

} // namespace jjcoh
