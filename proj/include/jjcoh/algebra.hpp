#pragma once

#include "linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jjcoh {

struct commutativity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct non_nilpotent_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-dimensional algebra given by its structure-constant tensor:
// e_i e_j = sum_k c[i][j][k] e_k. The checked constructor enforces
// commutativity; the unchecked one exists for admissibility tests, which
// start from algebras that need not be commutative.
class Algebra {
public:
    Algebra() = default;

    explicit Algebra(std::size_t n, std::vector<std::string> names = {})
        : dim_(n), c_(n * n * n), names_(std::move(names))
    {
        default_names();
    }

    static Algebra commutative(std::size_t n, Vec structure, std::vector<std::string> names = {})
    {
        Algebra a = unchecked(n, std::move(structure), std::move(names));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (a.c(i, j, k) != a.c(j, i, k))
                        throw commutativity_error("structure constants are not symmetric at (" +
                                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        return a;
    }

    static Algebra unchecked(std::size_t n, Vec structure, std::vector<std::string> names = {})
    {
        if (structure.size() != n * n * n)
            throw dimension_error("structure tensor has wrong size");
        Algebra a;
        a.dim_ = n;
        a.c_ = std::move(structure);
        a.names_ = std::move(names);
        a.default_names();
        return a;
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const
    {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    Rational& c(std::size_t i, std::size_t j, std::size_t k)
    {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    // Sets e_i e_j = e_j e_i = v.
    void set_product(std::size_t i, std::size_t j, const Vec& v)
    {
        if (v.size() != dim_)
            throw dimension_error("product value has wrong length");
        for (std::size_t k = 0; k < dim_; ++k)
            c(i, j, k) = c(j, i, k) = v[k];
    }

    Vec product_basis(std::size_t i, std::size_t j) const
    {
        Vec v(dim_);
        for (std::size_t k = 0; k < dim_; ++k)
            v[k] = c(i, j, k);
        return v;
    }

    Vec product(const Vec& x, const Vec& y) const
    {
        if (x.size() != dim_ || y.size() != dim_)
            throw dimension_error("product operand has wrong length");
        Vec v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0)
                    continue;
                Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (c(i, j, k) != 0)
                        v[k] += f * c(i, j, k);
            }
        }
        return v;
    }

    bool is_commutative() const
    {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (c(i, j, k) != c(j, i, k))
                        return false;
        return true;
    }

    // Matrix of left multiplication by e_i.
    Matrix left_multiplication(std::size_t i) const
    {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                m(k, j) = c(i, j, k);
        return m;
    }

    const Vec& structure_flat() const { return c_; }

private:
    void default_names()
    {
        if (names_.empty())
            for (std::size_t i = 1; i <= dim_; ++i)
                names_.push_back("e" + std::to_string(i));
        if (names_.size() != dim_)
            throw dimension_error("basis name count does not match dimension");
    }

    std::size_t dim_ = 0;
    Vec c_;
    std::vector<std::string> names_;
};

struct TripleViolation {
    std::size_t i, j, k; // 0-based basis indices
    Vec residual;
};

struct CubeViolation {
    Vec witness; // x with x(xx) != 0
    Vec cube;    // x(xx)
};

struct ValidationReport {
    bool is_commutative = false;
    std::vector<TripleViolation> jacobi_violations;
    std::vector<CubeViolation> cube_violations;

    bool ok() const
    {
        return is_commutative && jacobi_violations.empty() && cube_violations.empty();
    }
};

inline Vec jacobi_residual(const Algebra& a, const Vec& x, const Vec& y, const Vec& z)
{
    Vec r = a.product(x, a.product(y, z));
    add_scaled(r, 1, a.product(y, a.product(z, x)));
    add_scaled(r, 1, a.product(z, a.product(x, y)));
    return r;
}

inline Vec basis_vector(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

// Checks commutativity and J(e_i,e_j,e_k) = 0 on all basis triples
// (sufficient by trilinearity).
inline ValidationReport validate_jacobi_jordan(const Algebra& a)
{
    ValidationReport rep;
    rep.is_commutative = a.is_commutative();
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                Vec r = jacobi_residual(a, basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
                if (!is_zero(r))
                    rep.jacobi_violations.push_back({i, j, k, std::move(r)});
            }
    return rep;
}

// Verifies the full linearization of x(xx) = 0 over basis triples; over a
// characteristic-zero field this is equivalent to x^3 = 0 for all x. For
// every violated triple a concrete cube witness is found on a small grid
// (the cubic form is nonzero, so a grid exceeding its per-variable degree
// must contain a point where it does not vanish).
inline ValidationReport check_cube_zero(const Algebra& a)
{
    ValidationReport rep;
    rep.is_commutative = a.is_commutative();
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                Vec r = jacobi_residual(a, basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
                if (is_zero(r))
                    continue;
                bool found = false;
                for (int s = 1; s <= 4 && !found; ++s)
                    for (int t = 1; t <= 4 && !found; ++t)
                        for (int u = 1; u <= 4 && !found; ++u) {
                            Vec x(n);
                            x[i] += s;
                            x[j] += t;
                            x[k] += u;
                            Vec cube = a.product(x, a.product(x, x));
                            if (!is_zero(cube)) {
                                rep.cube_violations.push_back({std::move(x), std::move(cube)});
                                found = true;
                            }
                        }
            }
    return rep;
}

// Linearized Jordan identity on all basis 4-tuples:
// x((yz)t) + y((zx)t) + z((xy)t) = (xy)(zt) + (yz)(xt) + (zx)(yt).
inline bool check_jordan_identity(const Algebra& a)
{
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Vec x = basis_vector(n, i), y = basis_vector(n, j);
                    Vec z = basis_vector(n, k), t = basis_vector(n, l);
                    Vec lhs = a.product(x, a.product(a.product(y, z), t));
                    add_scaled(lhs, 1, a.product(y, a.product(a.product(z, x), t)));
                    add_scaled(lhs, 1, a.product(z, a.product(a.product(x, y), t)));
                    Vec rhs = a.product(a.product(x, y), a.product(z, t));
                    add_scaled(rhs, 1, a.product(a.product(y, z), a.product(x, t)));
                    add_scaled(rhs, 1, a.product(a.product(z, x), a.product(y, t)));
                    if (!is_zero(lhs - rhs))
                        return false;
                }
    return true;
}

// (xy)z + x(yz) = 0 on all basis triples.
inline bool check_anti_associative(const Algebra& a)
{
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = basis_vector(n, i), y = basis_vector(n, j), z = basis_vector(n, k);
                Vec r = a.product(a.product(x, y), z);
                add_scaled(r, 1, a.product(x, a.product(y, z)));
                if (!is_zero(r))
                    return false;
            }
    return true;
}

// The algebra with product {x,y} = xy + yx; always commutative.
inline Algebra anticommutator_algebra(const Algebra& a)
{
    std::size_t n = a.dim();
    Vec s(n * n * n);
    Algebra out = Algebra::unchecked(n, std::move(s), a.basis_names());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.c(i, j, k) = a.c(i, j, k) + a.c(j, i, k);
    return out;
}

inline bool is_jacobi_jordan_admissible(const Algebra& a)
{
    return validate_jacobi_jordan(anticommutator_algebra(a)).ok();
}

// {x : x e_i = 0 for all i}, the nullspace of the stacked multiplication
// matrices.
inline SubspaceBasis annihilator(const Algebra& a)
{
    std::size_t n = a.dim();
    if (n == 0)
        return SubspaceBasis::empty(0);
    Matrix stacked(0, n);
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        // column j of block i: e_j e_i
        Matrix block(n, n);
        for (std::size_t j = 0; j < n; ++j)
            block.set_column(j, a.product_basis(j, i));
        stacked = first ? block : Matrix::vstack(stacked, block);
        first = false;
    }
    return nullspace(stacked);
}

// Descending chain of left-normed power spaces, ending at zero. Throws when
// the chain stabilizes at a nonzero space (the input is not nilpotent, hence
// not a valid Jacobi-Jordan algebra).
inline std::vector<SubspaceBasis> derived_powers(const Algebra& a)
{
    std::size_t n = a.dim();
    std::vector<SubspaceBasis> chain;
    chain.push_back(SubspaceBasis::full(n));
    while (chain.back().dim() > 0) {
        const SubspaceBasis& prev = chain.back();
        std::vector<Vec> products;
        for (std::size_t j = 0; j < prev.dim(); ++j)
            for (std::size_t i = 0; i < n; ++i)
                products.push_back(a.product(prev.vectors.column(j), basis_vector(n, i)));
        SubspaceBasis next = column_space(Matrix::from_columns(n, products));
        if (next.dim() == prev.dim())
            throw non_nilpotent_error("power chain stabilized at dimension " + std::to_string(next.dim()));
        chain.push_back(std::move(next));
    }
    return chain;
}

// First n with the n-th power space zero; the chain starts at J^1 = J.
inline std::size_t nilpotency_index(const Algebra& a)
{
    return derived_powers(a).size();
}

// Structure constants of the same product in the basis given by p's columns.
inline Algebra transport(const Algebra& a, const Matrix& p)
{
    std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n)
        throw dimension_error("basis-change matrix has wrong shape");
    auto pinv = inverse(p);
    if (!pinv)
        throw singular_matrix_error("basis-change matrix is singular");
    Algebra out = Algebra::unchecked(n, Vec(n * n * n), a.basis_names());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = (*pinv) * a.product(p.column(i), p.column(j));
            for (std::size_t k = 0; k < n; ++k)
                out.c(i, j, k) = v[k];
        }
    return out;
}

} // namespace jjcoh
