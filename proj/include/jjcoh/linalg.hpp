#pragma once

#include "matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace jjcoh {

struct containment_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct singular_matrix_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RrefResult {
    Matrix m;
    std::vector<std::size_t> pivots;
};

// Unique reduced row-echelon form. Pivoting is plain left-to-right,
// first-nonzero-in-column, so results are bit-identical across runs.
inline RrefResult rref(Matrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    Matrix vectors; // columns are basis vectors (linearly independent)

    std::size_t dim() const { return vectors.cols(); }

    static SubspaceBasis empty(std::size_t ambient)
    {
        return {ambient, Matrix(ambient, 0)};
    }

    static SubspaceBasis full(std::size_t ambient)
    {
        return {ambient, Matrix::identity(ambient)};
    }
};

// Basis of {v : m v = 0}; free variables of the rref give one vector each.
inline SubspaceBasis nullspace(const Matrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.m(i, f);
        basis.push_back(std::move(v));
    }
    return {m.cols(), Matrix::from_columns(m.cols(), basis)};
}

// Basis of the span of m's columns: the pivot columns of m itself.
inline SubspaceBasis column_space(const Matrix& m)
{
    RrefResult r = rref(m);
    std::vector<Vec> basis;
    for (std::size_t p : r.pivots)
        basis.push_back(m.column(p));
    return {m.rows(), Matrix::from_columns(m.rows(), basis)};
}

// One exact solution of m x = rhs with free variables set to zero,
// or absent when the system is inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& rhs)
{
    if (rhs.size() != m.rows())
        throw dimension_error("right-hand side length mismatch");
    Matrix aug = Matrix::hstack(m, Matrix::from_columns(m.rows(), {rhs}));
    RrefResult r = rref(aug);
    for (std::size_t p : r.pivots)
        if (p == m.cols())
            return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        x[r.pivots[i]] = r.m(i, m.cols());
    return x;
}

inline bool contains(const SubspaceBasis& s, const Vec& v)
{
    if (v.size() != s.ambient_dim)
        throw dimension_error("ambient dimension mismatch");
    return solve(s.vectors, v).has_value();
}

// span(a) ∩ span(b), via the nullspace of [A | -B].
inline SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b)
{
    if (a.ambient_dim != b.ambient_dim)
        throw dimension_error("intersection of subspaces of different ambient spaces");
    if (a.dim() == 0 || b.dim() == 0)
        return SubspaceBasis::empty(a.ambient_dim);
    Matrix sys = Matrix::hstack(a.vectors, b.vectors.scaled(-1));
    SubspaceBasis ker = nullspace(sys);
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < ker.dim(); ++j) {
        Vec lambda = ker.vectors.column(j);
        Vec v(a.ambient_dim);
        for (std::size_t c = 0; c < a.dim(); ++c)
            add_scaled(v, lambda[c], a.vectors.column(c));
        gens.push_back(std::move(v));
    }
    return column_space(Matrix::from_columns(a.ambient_dim, gens));
}

// Vectors of `total` extending `sub` to a basis of span(total), chosen by a
// greedy pivot scan over the columns of [sub | total].
inline SubspaceBasis quotient_representatives(const SubspaceBasis& sub, const SubspaceBasis& total)
{
    if (sub.ambient_dim != total.ambient_dim)
        throw dimension_error("quotient of subspaces of different ambient spaces");
    for (std::size_t j = 0; j < sub.dim(); ++j)
        if (!contains(total, sub.vectors.column(j)))
            throw containment_error("quotient: sub is not contained in total");
    Matrix joint = Matrix::hstack(sub.vectors, total.vectors);
    RrefResult r = rref(joint);
    std::vector<Vec> reps;
    for (std::size_t p : r.pivots)
        if (p >= sub.dim())
            reps.push_back(total.vectors.column(p - sub.dim()));
    return {total.ambient_dim, Matrix::from_columns(total.ambient_dim, reps)};
}

inline bool same_span(const SubspaceBasis& a, const SubspaceBasis& b)
{
    if (a.ambient_dim != b.ambient_dim)
        return false;
    if (a.dim() != b.dim())
        return false;
    for (std::size_t j = 0; j < b.dim(); ++j)
        if (!contains(a, b.vectors.column(j)))
            return false;
    return true;
}

inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw dimension_error("inverse of a non-square matrix");
    Matrix aug = Matrix::hstack(m, Matrix::identity(m.rows()));
    RrefResult r = rref(aug);
    if (r.pivots.size() != m.rows())
        return std::nullopt;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (r.pivots[i] != i)
            return std::nullopt;
    Matrix inv(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            inv(i, j) = r.m(i, m.cols() + j);
    return inv;
}

inline Rational determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw dimension_error("determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t p = col;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            return 0;
        if (p != col) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Rational inv = Rational(1) / m(col, col);
        for (std::size_t i = col + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0)
                continue;
            Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

} // namespace jjcoh
