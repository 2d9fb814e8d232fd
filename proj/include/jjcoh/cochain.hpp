#pragma once

#include "representation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace jjcoh {

struct degree_error : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr std::size_t max_cochain_degree = 6;

inline std::size_t pow_sz(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

// A p-multilinear map J^p -> M as a flat coefficient vector: the entry at
// (k; i_1, ..., i_p) is the coefficient of m_k in c(e_{i_1}, ..., e_{i_p}),
// flattened row-major with the module slot as the leading index.
struct Cochain {
    std::size_t degree = 0;
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    Vec coeffs;

    Cochain() = default;
    Cochain(std::size_t p, std::size_t n, std::size_t m)
        : degree(p), algebra_dim(n), module_dim(m), coeffs(m * pow_sz(n, p))
    {
    }

    static std::size_t flat_index(std::size_t n, std::size_t k, const std::vector<std::size_t>& idx)
    {
        std::size_t f = k;
        for (std::size_t i : idx)
            f = f * n + i;
        return f;
    }

    Rational& at(std::size_t k, const std::vector<std::size_t>& idx)
    {
        return coeffs[flat_index(algebra_dim, k, idx)];
    }

    const Rational& at(std::size_t k, const std::vector<std::size_t>& idx) const
    {
        return coeffs[flat_index(algebra_dim, k, idx)];
    }

    bool is_symmetric() const
    {
        std::vector<std::size_t> idx(degree);
        do {
            std::vector<std::size_t> sorted = idx;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < module_dim; ++k)
                if (at(k, idx) != at(k, sorted))
                    return false;
        } while (next_multi_index(idx, algebra_dim));
        return true;
    }

    Cochain operator-(const Cochain& o) const
    {
        if (degree != o.degree || algebra_dim != o.algebra_dim || module_dim != o.module_dim)
            throw dimension_error("cochain shape mismatch");
        Cochain r = *this;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            r.coeffs[i] -= o.coeffs[i];
        return r;
    }

    static bool next_multi_index(std::vector<std::size_t>& idx, std::size_t n)
    {
        for (std::size_t pos = idx.size(); pos-- > 0;) {
            if (++idx[pos] < n)
                return true;
            idx[pos] = 0;
        }
        return false;
    }
};

// Value of c on module-free arguments given by basis indices.
inline Vec evaluate(const Cochain& c, const std::vector<std::size_t>& idx)
{
    Vec v(c.module_dim);
    for (std::size_t k = 0; k < c.module_dim; ++k)
        v[k] = c.at(k, idx);
    return v;
}

// Bilinear evaluation of a degree-2 cochain on coordinate vectors.
inline Vec evaluate2(const Cochain& c, const Vec& x, const Vec& y)
{
    if (c.degree != 2 || x.size() != c.algebra_dim || y.size() != c.algebra_dim)
        throw dimension_error("evaluate2 expects a 2-cochain and two algebra vectors");
    Vec v(c.module_dim);
    for (std::size_t i = 0; i < c.algebra_dim; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < c.algebra_dim; ++j) {
            if (y[j] == 0)
                continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < c.module_dim; ++k)
                v[k] += f * c.at(k, {i, j});
        }
    }
    return v;
}

enum class SymmetryClass { full, symmetric, skew };

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                sign = -sign;
    return sign;
}

template <typename Predicate, typename Fill>
SubspaceBasis monomial_basis(std::size_t n, std::size_t p, std::size_t m, Predicate admissible, Fill fill)
{
    std::size_t ambient = m * pow_sz(n, p);
    std::vector<Vec> vecs;
    std::vector<std::size_t> idx(p);
    do {
        if (!admissible(idx))
            continue;
        for (std::size_t k = 0; k < m; ++k) {
            Vec v(ambient);
            fill(v, k, idx);
            vecs.push_back(std::move(v));
        }
    } while (Cochain::next_multi_index(idx, n));
    if (p == 0) {
        // the empty multi-index is the single monomial
        vecs.clear();
        for (std::size_t k = 0; k < m; ++k) {
            Vec v(ambient);
            v[k] = 1;
            vecs.push_back(std::move(v));
        }
    }
    return {ambient, Matrix::from_columns(ambient, vecs)};
}

} // namespace detail

// Embedded basis of S^p inside L^p coordinates: one vector per non-decreasing
// multi-index and module slot, with 1 at every distinct permutation.
inline SubspaceBasis symmetric_basis(std::size_t n, std::size_t p, std::size_t m)
{
    return detail::monomial_basis(
        n, p, m,
        [](const std::vector<std::size_t>& idx) { return std::is_sorted(idx.begin(), idx.end()); },
        [n](Vec& v, std::size_t k, std::vector<std::size_t> idx) {
            do
                v[Cochain::flat_index(n, k, idx)] = 1;
            while (std::next_permutation(idx.begin(), idx.end()));
        });
}

// Embedded basis of A^p: one vector per strictly increasing multi-index and
// module slot, with sign(sigma) at each permutation.
inline SubspaceBasis skew_basis(std::size_t n, std::size_t p, std::size_t m)
{
    return detail::monomial_basis(
        n, p, m,
        [](const std::vector<std::size_t>& idx) {
            return std::adjacent_find(idx.begin(), idx.end(),
                                      [](std::size_t a, std::size_t b) { return a >= b; }) == idx.end();
        },
        [n](Vec& v, std::size_t k, std::vector<std::size_t> idx) {
            do
                v[Cochain::flat_index(n, k, idx)] = detail::permutation_sign(idx);
            while (std::next_permutation(idx.begin(), idx.end()));
        });
}

namespace detail {

// Matrix of c |-> sum_i pi(x_i) c(... x_i omitted ...)
//              +/- sum_{i<j} c(x_i x_j, ... x_i, x_j omitted ...)
// in flat L^p -> L^{p+1} coordinates. Omitted arguments are removed with the
// remaining order preserved; the product is prepended as first argument.
inline Matrix coboundary_full(const Representation& r, std::size_t p, bool second_sum_negative)
{
    if (p > max_cochain_degree)
        throw degree_error("cochain degree exceeds the hard cap of " + std::to_string(max_cochain_degree));
    std::size_t n = r.algebra.dim();
    std::size_t m = r.module_dim;
    Matrix op(m * pow_sz(n, p + 1), m * pow_sz(n, p));
    Rational second_sign = second_sum_negative ? -1 : 1;
    std::vector<std::size_t> j(p + 1);
    do {
        for (std::size_t i = 0; i <= p; ++i) {
            std::vector<std::size_t> rest;
            rest.reserve(p);
            for (std::size_t q = 0; q <= p; ++q)
                if (q != i)
                    rest.push_back(j[q]);
            const Matrix& act = r.action[j[i]];
            for (std::size_t ko = 0; ko < m; ++ko) {
                std::size_t row = Cochain::flat_index(n, ko, j);
                for (std::size_t l = 0; l < m; ++l)
                    if (act(ko, l) != 0)
                        op(row, Cochain::flat_index(n, l, rest)) += act(ko, l);
            }
        }
        for (std::size_t i1 = 0; i1 <= p; ++i1)
            for (std::size_t i2 = i1 + 1; i2 <= p; ++i2) {
                std::vector<std::size_t> rest{0};
                for (std::size_t q = 0; q <= p; ++q)
                    if (q != i1 && q != i2)
                        rest.push_back(j[q]);
                for (std::size_t t = 0; t < n; ++t) {
                    const Rational& u = r.algebra.c(j[i1], j[i2], t);
                    if (u == 0)
                        continue;
                    rest[0] = t;
                    for (std::size_t ko = 0; ko < m; ++ko)
                        op(Cochain::flat_index(n, ko, j), Cochain::flat_index(n, ko, rest)) +=
                            second_sign * u;
                }
            }
    } while (Cochain::next_multi_index(j, n));
    return op;
}

} // namespace detail

// d^p as a matrix L^p -> L^{p+1}; d^0(m)(x) = pi(x) m.
inline Matrix d_matrix(const Representation& r, std::size_t p)
{
    return detail::coboundary_full(r, p, false);
}

// delta^p restricted to the embedded skew basis of A^p (columns indexed by
// skew monomials); delta^0 = d^0.
inline Matrix delta_matrix(const Representation& r, std::size_t p)
{
    return detail::coboundary_full(r, p, true) * skew_basis(r.algebra.dim(), p, r.module_dim).vectors;
}

struct CohomologyResult {
    std::size_t degree = 0;
    SymmetryClass symmetry = SymmetryClass::full;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;      // within the reported class
    std::size_t dim_coboundaries_full = 0; // dim of im delta^{p-1} in L^p
    std::size_t dim_cohomology = 0;
    SubspaceBasis cocycle_basis;
    SubspaceBasis coboundary_basis;
    SubspaceBasis representatives;
};

namespace detail {

inline void normalize_columns(SubspaceBasis& b)
{
    for (std::size_t j = 0; j < b.dim(); ++j) {
        for (std::size_t i = 0; i < b.vectors.rows(); ++i) {
            const Rational& x = b.vectors(i, j);
            if (x != 0) {
                Rational inv = Rational(1) / x;
                for (std::size_t ii = i; ii < b.vectors.rows(); ++ii)
                    b.vectors(ii, j) *= inv;
                break;
            }
        }
    }
}

} // namespace detail

// Cocycles, coboundaries and quotient representatives at degree p.
//   full:      Z = ker d^p, B = im delta^{p-1}, H = Z/B.
//   symmetric: Z_s = Z ∩ S^p, quotient by B ∩ S^p.
//   skew:      Z_a = Z ∩ A^p, no quotient taken.
inline CohomologyResult cohomology(const Representation& r, std::size_t p, SymmetryClass cls)
{
    if (p > max_cochain_degree)
        throw degree_error("cochain degree exceeds the hard cap of " + std::to_string(max_cochain_degree));
    std::size_t n = r.algebra.dim();
    std::size_t m = r.module_dim;
    std::size_t ambient = m * pow_sz(n, p);

    SubspaceBasis cocycles = nullspace(d_matrix(r, p));
    SubspaceBasis coboundaries =
        p == 0 ? SubspaceBasis::empty(ambient) : column_space(delta_matrix(r, p - 1));
    std::size_t dim_b_full = coboundaries.dim();

    if (cls == SymmetryClass::symmetric) {
        cocycles = subspace_intersection(cocycles, symmetric_basis(n, p, m));
        coboundaries = subspace_intersection(coboundaries, symmetric_basis(n, p, m));
    } else if (cls == SymmetryClass::skew) {
        cocycles = subspace_intersection(cocycles, skew_basis(n, p, m));
        coboundaries = SubspaceBasis::empty(ambient);
    }

    CohomologyResult res;
    res.degree = p;
    res.symmetry = cls;
    res.dim_cocycles = cocycles.dim();
    res.dim_coboundaries = coboundaries.dim();
    res.dim_coboundaries_full = dim_b_full;
    res.representatives = cls == SymmetryClass::skew
                              ? cocycles
                              : quotient_representatives(coboundaries, cocycles);
    res.dim_cohomology = cls == SymmetryClass::skew ? 0 : res.representatives.dim();
    detail::normalize_columns(res.representatives);
    res.cocycle_basis = std::move(cocycles);
    res.coboundary_basis = std::move(coboundaries);
    return res;
}

inline bool is_cocycle(const Representation& r, const Cochain& c)
{
    return is_zero(d_matrix(r, c.degree) * c.coeffs);
}

// Witness c' in A^{p-1} with delta c' = c, when one exists (free variables
// zero). The zero 0-cochain counts as its own (degenerate) witness.
inline std::optional<Cochain> is_coboundary(const Representation& r, const Cochain& c)
{
    std::size_t n = r.algebra.dim();
    std::size_t m = r.module_dim;
    if (c.degree == 0) {
        if (!is_zero(c.coeffs))
            return std::nullopt;
        return Cochain(0, n, m);
    }
    auto x = solve(delta_matrix(r, c.degree - 1), c.coeffs);
    if (!x)
        return std::nullopt;
    Cochain witness(c.degree - 1, n, m);
    witness.coeffs = skew_basis(n, c.degree - 1, m).vectors * *x;
    return witness;
}

inline bool cohomologous(const Representation& r, const Cochain& c1, const Cochain& c2)
{
    if (c1.degree != c2.degree)
        throw dimension_error("cohomologous: degree mismatch");
    return is_coboundary(r, c1 - c2).has_value();
}

// Algebra structure on M ⊕ J (module coordinates first):
//   (a ⊕ x)(b ⊕ y) = (pi(x) b + pi(y) a + c(x, y)) ⊕ xy.
// With c absent this is the semidirect product E_0 = M ⋊ J.
inline Algebra semidirect_product(const Representation& r, const std::optional<Cochain>& c = std::nullopt)
{
    std::size_t n = r.algebra.dim();
    std::size_t m = r.module_dim;
    if (c) {
        if (c->degree != 2 || c->algebra_dim != n || c->module_dim != m)
            throw dimension_error("twisting cochain has the wrong shape");
        if (!c->is_symmetric())
            throw commutativity_error("twisting cochain must be symmetric");
    }
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= m; ++k)
        names.push_back("m" + std::to_string(k));
    names.insert(names.end(), r.algebra.basis_names().begin(), r.algebra.basis_names().end());
    Algebra e = Algebra::unchecked(m + n, Vec((m + n) * (m + n) * (m + n)), std::move(names));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                e.c(m + i, m + j, m + k) = r.algebra.c(i, j, k);
            if (c)
                for (std::size_t k = 0; k < m; ++k)
                    e.c(m + i, m + j, k) = c->at(k, {i, j});
        }
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < m; ++k)
                e.c(m + i, b, k) = e.c(b, m + i, k) = r.action[i](k, b);
    }
    return e;
}

} // namespace jjcoh
