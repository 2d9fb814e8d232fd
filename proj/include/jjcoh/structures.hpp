#pragma once

#include "cochain.hpp"

#include <stdexcept>
#include <utility>

namespace jjcoh {

using BilinearForm = Matrix; // form[i][j] = B(e_i, e_j)

struct degenerate_form_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_derivation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Endomorphisms are flattened row-major: D(e_j) = sum_i v[i*n + j] e_i.
inline Matrix endo_from_flat(std::size_t n, const Vec& v)
{
    return Matrix::from_flat(n, n, v);
}

// Rows of the linear system D(e_i e_j) -/+ (D(e_i) e_j + e_i D(e_j)) = 0
// over the n^2 endomorphism unknowns; sign +1 gives derivations, -1
// antiderivations.
inline Matrix leibniz_system(const Algebra& a, int sign)
{
    std::size_t n = a.dim();
    Matrix sys(n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l, ++row) {
                for (std::size_t k = 0; k < n; ++k) {
                    // D(e_i e_j) coordinate l picks up D[l][k] per c[i][j][k]
                    sys(row, l * n + k) += a.c(i, j, k);
                    // D(e_i) e_j contributes D[k][i] c[k][j][l]
                    sys(row, k * n + i) -= sign * a.c(k, j, l);
                    // e_i D(e_j) contributes D[k][j] c[i][k][l]
                    sys(row, k * n + j) -= sign * a.c(i, k, l);
                }
            }
    return sys;
}

} // namespace detail

// Solution space of D(xy) = D(x)y + xD(y), in flattened endomorphism
// coordinates.
inline SubspaceBasis derivations(const Algebra& a)
{
    return nullspace(detail::leibniz_system(a, 1));
}

// Solution space of D(xy) = -D(x)y - xD(y).
inline SubspaceBasis antiderivations(const Algebra& a)
{
    return nullspace(detail::leibniz_system(a, -1));
}

// Span of the left-multiplication matrices L_x.
inline SubspaceBasis inner_antiderivations(const Algebra& a)
{
    std::size_t n = a.dim();
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i)
        cols.push_back(a.left_multiplication(i).flattened());
    return column_space(Matrix::from_columns(n * n, cols));
}

inline bool is_antiderivation(const Algebra& a, const Matrix& d)
{
    return is_zero(detail::leibniz_system(a, -1) * d.flattened());
}

inline bool is_derivation(const Algebra& a, const Matrix& d)
{
    return is_zero(detail::leibniz_system(a, 1) * d.flattened());
}

// For d1, d2 antiderivations, tests whether {d1,d2} = d1 d2 + d2 d1 is again
// an antiderivation. This holds exactly when
// {d1,d2}(xy) = d1(x) d2(y) + d2(x) d1(y) for all x, y; both criteria are
// evaluated and must agree.
inline bool anticommutator_closure_test(const Algebra& a, const Matrix& d1, const Matrix& d2)
{
    if (!is_antiderivation(a, d1) || !is_antiderivation(a, d2))
        throw not_derivation_error("anticommutator_closure_test expects antiderivations");
    std::size_t n = a.dim();
    Matrix e = d1 * d2 + d2 * d1;
    bool closed = is_antiderivation(a, e);
    bool identity = true;
    for (std::size_t i = 0; i < n && identity; ++i)
        for (std::size_t j = 0; j < n && identity; ++j) {
            Vec lhs = e * a.product_basis(i, j);
            Vec rhs = a.product(d1.column(i), d2.column(j));
            add_scaled(rhs, 1, a.product(d2.column(i), d1.column(j)));
            if (!is_zero(lhs - rhs))
                identity = false;
        }
    if (closed != identity)
        throw std::logic_error("closure and product-rule criteria disagree");
    return closed;
}

namespace detail {

// Rows forcing symmetry and invariance phi(e_i e_j, e_k) = phi(e_i, e_j e_k)
// on the n^2 flattened form unknowns.
inline Matrix invariance_system(const Algebra& a)
{
    std::size_t n = a.dim();
    Matrix sys(n * n + n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j, ++row) {
            sys(row, i * n + j) += 1;
            sys(row, j * n + i) -= 1;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++row)
                for (std::size_t t = 0; t < n; ++t) {
                    sys(row, t * n + k) += a.c(i, j, t);
                    sys(row, i * n + t) -= a.c(j, k, t);
                }
    return sys;
}

} // namespace detail

// F(J): all invariant symmetric bilinear forms, in flattened coordinates.
inline SubspaceBasis invariant_forms(const Algebra& a)
{
    return nullspace(detail::invariance_system(a));
}

inline bool is_invariant_symmetric(const Algebra& a, const BilinearForm& b)
{
    if (b.rows() != a.dim() || b.cols() != a.dim())
        throw dimension_error("form has the wrong shape");
    return is_zero(detail::invariance_system(a) * b.flattened());
}

inline bool check_pseudo_euclidean(const Algebra& a, const BilinearForm& b)
{
    return is_invariant_symmetric(a, b) && determinant(b) != 0;
}

// Transpose of d with respect to b: B(tD x, y) = B(x, D y).
inline Matrix b_transpose(const BilinearForm& b, const Matrix& d)
{
    auto binv = inverse(b);
    if (!binv)
        throw degenerate_form_error("form is degenerate");
    return *binv * d.transposed() * b;
}

// dim F(J) if F(J) contains a nondegenerate element, else 0 (the
// nondegenerate forms then span F over an infinite field). Existence is
// decided deterministically: a common-kernel shortcut, then samples on the
// moment curve, then a complete grid exceeding the determinant's
// per-variable degree bound.
inline std::size_t b_p_dimension(const Algebra& a)
{
    std::size_t n = a.dim();
    SubspaceBasis f = invariant_forms(a);
    std::size_t d = f.dim();
    if (d == 0)
        return 0;
    std::vector<Matrix> gens;
    for (std::size_t j = 0; j < d; ++j)
        gens.push_back(detail::endo_from_flat(n, f.vectors.column(j)));

    Matrix stacked = gens[0];
    for (std::size_t j = 1; j < d; ++j)
        stacked = Matrix::vstack(stacked, gens[j]);
    if (nullspace(stacked).dim() > 0)
        return 0; // a common kernel vector degenerates every combination

    auto combo_det = [&](const Vec& lambda) {
        Matrix m(n, n);
        for (std::size_t j = 0; j < d; ++j)
            m = m + gens[j].scaled(lambda[j]);
        return determinant(m);
    };

    for (std::size_t t = 1; t <= n * (d - 1) + 1; ++t) {
        Vec lambda(d);
        Rational p = 1;
        for (std::size_t j = 0; j < d; ++j, p *= Rational(t))
            lambda[j] = p;
        if (combo_det(lambda) != 0)
            return d;
    }

    // det is multilinear of degree <= n in each coefficient, so vanishing on
    // the whole grid {1..n+1}^d means vanishing identically.
    Vec lambda(d, Rational(1));
    for (;;) {
        if (combo_det(lambda) != 0)
            return d;
        std::size_t pos = 0;
        while (pos < d && lambda[pos] == Rational(n + 1))
            lambda[pos++] = 1;
        if (pos == d)
            return 0;
        lambda[pos] += 1;
    }
}

// (Der ∩ B-symmetric, Der ∩ B-skew).
inline std::pair<SubspaceBasis, SubspaceBasis> symmetric_skew_derivations(const Algebra& a,
                                                                          const BilinearForm& b)
{
    if (!check_pseudo_euclidean(a, b))
        throw degenerate_form_error("form is not an invariant nondegenerate symmetric form");
    std::size_t n = a.dim();
    Matrix der = detail::leibniz_system(a, 1);
    // rows of tD B -/+ B D over the flattened unknowns
    auto adjacency = [&](int sign) {
        Matrix sys(n * n, n * n);
        std::size_t row = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, k * n + i) += b(k, j); // (D^T B)(i,j)
                    sys(row, k * n + j) += sign * b(i, k); // (B D)(i,j)
                }
        return sys;
    };
    SubspaceBasis sym = nullspace(Matrix::vstack(der, adjacency(-1)));
    SubspaceBasis skew = nullspace(Matrix::vstack(der, adjacency(+1)));
    return {std::move(sym), std::move(skew)};
}

// mu(phi)(x,y,z) = phi(xy, z), a symmetric scalar 3-cocycle.
inline Cochain mu_map(const Algebra& a, const BilinearForm& phi)
{
    if (!is_invariant_symmetric(a, phi))
        throw not_derivation_error("mu_map expects an invariant symmetric form");
    std::size_t n = a.dim();
    Cochain c(3, n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational v = 0;
                for (std::size_t t = 0; t < n; ++t)
                    v += a.c(i, j, t) * phi(t, k);
                c.at(0, {i, j, k}) = v;
            }
    if (!c.is_symmetric() || !is_cocycle(trivial(a, 1), c))
        throw std::logic_error("mu(phi) failed to land in the symmetric cocycles");
    return c;
}

// nu(D)(x,y) = B(D x, y) + B(x, D y); lands in F(J).
inline BilinearForm nu_map(const Algebra& a, const BilinearForm& b, const Matrix& d)
{
    if (!is_derivation(a, d))
        throw not_derivation_error("nu_map expects a derivation");
    BilinearForm out = d.transposed() * b + b * d;
    if (!is_invariant_symmetric(a, out))
        throw std::logic_error("nu(D) failed to land in the invariant forms");
    return out;
}

struct ExactSequenceReport {
    std::size_t dim_Der = 0;
    std::size_t dim_Der_a = 0;
    std::size_t dim_F = 0;
    std::size_t dim_Hs3 = 0;
    std::size_t dim_im_nu = 0;
    std::size_t dim_ker_mu_bar = 0;
    bool exact_at_derivations = false; // ker nu = Der_a
    bool exact_at_forms = false;       // im nu = ker(mu followed by projection to Hs^3)
};

// Verifies exactness of 0 -> Der_a -> Der --nu--> F --mu_bar--> Hs^3.
inline ExactSequenceReport exact_sequence_report(const Algebra& a, const BilinearForm& b)
{
    if (!check_pseudo_euclidean(a, b))
        throw degenerate_form_error("form is not an invariant nondegenerate symmetric form");
    std::size_t n = a.dim();
    SubspaceBasis der = derivations(a);
    auto [der_s, der_a] = symmetric_skew_derivations(a, b);
    SubspaceBasis f = invariant_forms(a);

    // nu in Der coordinates -> flattened form coordinates
    std::vector<Vec> nu_cols;
    for (std::size_t j = 0; j < der.dim(); ++j)
        nu_cols.push_back(nu_map(a, b, detail::endo_from_flat(n, der.vectors.column(j))).flattened());
    Matrix nu_mat = Matrix::from_columns(n * n, nu_cols);

    // ker nu, mapped back to endomorphism coordinates
    SubspaceBasis ker_lambda = nullspace(nu_mat);
    std::vector<Vec> ker_cols;
    for (std::size_t j = 0; j < ker_lambda.dim(); ++j)
        ker_cols.push_back(der.vectors * ker_lambda.vectors.column(j));
    SubspaceBasis ker_nu = column_space(Matrix::from_columns(n * n, ker_cols));

    // im nu and ker mu_bar, both in F-basis coordinates
    std::vector<Vec> im_cols;
    for (const Vec& w : nu_cols) {
        auto coord = solve(f.vectors, w);
        if (!coord)
            throw std::logic_error("nu image left the invariant forms");
        im_cols.push_back(*coord);
    }
    SubspaceBasis im_nu = column_space(Matrix::from_columns(f.dim(), im_cols));

    Representation triv_rep = trivial(a, 1);
    std::vector<Vec> mu_cols;
    for (std::size_t j = 0; j < f.dim(); ++j)
        mu_cols.push_back(mu_map(a, detail::endo_from_flat(n, f.vectors.column(j))).coeffs);
    Matrix mu_mat = Matrix::from_columns(pow_sz(n, 3), mu_cols);
    SubspaceBasis b3 = column_space(delta_matrix(triv_rep, 2));
    SubspaceBasis joint = nullspace(Matrix::hstack(mu_mat, b3.vectors));
    std::vector<Vec> ker_mu_cols;
    for (std::size_t j = 0; j < joint.dim(); ++j) {
        Vec full = joint.vectors.column(j);
        ker_mu_cols.push_back(Vec(full.begin(), full.begin() + f.dim()));
    }
    SubspaceBasis ker_mu = column_space(Matrix::from_columns(f.dim(), ker_mu_cols));

    ExactSequenceReport rep;
    rep.dim_Der = der.dim();
    rep.dim_Der_a = der_a.dim();
    rep.dim_F = f.dim();
    rep.dim_Hs3 = cohomology(triv_rep, 3, SymmetryClass::symmetric).dim_cohomology;
    rep.dim_im_nu = im_nu.dim();
    rep.dim_ker_mu_bar = ker_mu.dim();
    rep.exact_at_derivations = same_span(ker_nu, der_a);
    rep.exact_at_forms = same_span(im_nu, ker_mu);
    return rep;
}

struct StructureReport {
    std::size_t dim_Der = 0;   // Delta
    std::size_t dim_ADer = 0;
    std::size_t dim_IADer = 0;
    std::size_t dim_Der_s = 0; // Delta_s
    std::size_t dim_Der_a = 0; // Delta_a
    std::size_t dim_F = 0;     // Delta_p
    std::size_t b_p = 0;
    std::size_t dim_Hs3 = 0;
    std::size_t bound_low = 0;  // 1 + m(m+1)/2 with m = dim Ann
    std::size_t bound_high = 0; // Delta - Delta_a + dim Hs^3
};

inline StructureReport structure_report(const Algebra& a, const BilinearForm& b)
{
    StructureReport rep;
    rep.dim_Der = derivations(a).dim();
    rep.dim_ADer = antiderivations(a).dim();
    rep.dim_IADer = inner_antiderivations(a).dim();
    auto [der_s, der_a] = symmetric_skew_derivations(a, b);
    rep.dim_Der_s = der_s.dim();
    rep.dim_Der_a = der_a.dim();
    rep.dim_F = invariant_forms(a).dim();
    rep.b_p = b_p_dimension(a);
    rep.dim_Hs3 = cohomology(trivial(a, 1), 3, SymmetryClass::symmetric).dim_cohomology;
    std::size_t m = annihilator(a).dim();
    rep.bound_low = 1 + m * (m + 1) / 2;
    rep.bound_high = rep.dim_Der - rep.dim_Der_a + rep.dim_Hs3;
    return rep;
}

} // namespace jjcoh
