#pragma once

#include "cochain.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace jjcoh {

enum class DeformationMode { truncated, polynomial };

// mu_t = mu_0 + t mu_1 + ... + t^N mu_N with mu_0 the base product and every
// term a symmetric bilinear map J x J -> J (a symmetric 2-cochain with
// adjoint coefficients).
struct TruncatedDeformation {
    Algebra base;
    std::vector<Cochain> terms; // terms[i] = mu_{i+1}

    TruncatedDeformation(Algebra b, std::vector<Cochain> ts) : base(std::move(b)), terms(std::move(ts))
    {
        std::size_t n = base.dim();
        for (const Cochain& t : terms) {
            if (t.degree != 2 || t.algebra_dim != n || t.module_dim != n)
                throw dimension_error("deformation term has the wrong shape");
            if (!t.is_symmetric())
                throw commutativity_error("deformation terms must be symmetric");
        }
    }

    std::size_t order() const { return terms.size(); }

    // mu_i as a bilinear map; mu_0 is the base product.
    Vec apply(std::size_t i, const Vec& x, const Vec& y) const
    {
        if (i == 0)
            return base.product(x, y);
        if (i > terms.size())
            return Vec(base.dim());
        return evaluate2(terms[i - 1], x, y);
    }
};

struct ResidualEntry {
    std::size_t order;
    std::size_t i, j, k; // 0-based basis triple
    Vec residual;
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;
    bool verdict() const { return entries.empty(); }
};

// Order-p equations sum_{i+j=p} sum_cyc mu_i(x, mu_j(y, z)) = 0 for
// p = 0..N (truncated) or p = 0..2N (polynomial: mu_t is an honest
// polynomial product, so all cross terms must vanish).
inline ResidualReport verify_deformation(const TruncatedDeformation& d, DeformationMode mode)
{
    std::size_t n = d.base.dim();
    std::size_t top = mode == DeformationMode::truncated ? d.order() : 2 * d.order();
    ResidualReport rep;
    for (std::size_t p = 0; p <= top; ++p)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b)
                for (std::size_t c = b; c < n; ++c) {
                    Vec x = basis_vector(n, a), y = basis_vector(n, b), z = basis_vector(n, c);
                    Vec r(n);
                    for (std::size_t i = 0; i <= p; ++i) {
                        std::size_t j = p - i;
                        if (i > d.order() || j > d.order())
                            continue;
                        add_scaled(r, 1, d.apply(i, x, d.apply(j, y, z)));
                        add_scaled(r, 1, d.apply(i, y, d.apply(j, z, x)));
                        add_scaled(r, 1, d.apply(i, z, d.apply(j, x, y)));
                    }
                    if (!is_zero(r))
                        rep.entries.push_back({p, a, b, c, std::move(r)});
                }
    return rep;
}

struct InfinitesimalClass {
    bool is_cocycle = false;
    bool zero_class = false;
    Cochain representative; // canonical representative of the class of mu_1
};

// Checks mu_1 against the symmetric adjoint 2-cocycles and reduces it to a
// canonical representative modulo coboundaries (coordinates taken in the
// deterministic [coboundary basis | quotient representatives] frame).
inline InfinitesimalClass infinitesimal_class(const TruncatedDeformation& d)
{
    if (d.order() < 1)
        throw dimension_error("infinitesimal class needs a term of order 1");
    std::size_t n = d.base.dim();
    Representation adj = adjoint(d.base);
    const Cochain& mu1 = d.terms[0];
    InfinitesimalClass out;
    out.representative = Cochain(2, n, n);
    out.is_cocycle = is_cocycle(adj, mu1);
    if (!out.is_cocycle)
        return out;
    CohomologyResult h = cohomology(adj, 2, SymmetryClass::symmetric);
    Matrix frame = Matrix::hstack(h.coboundary_basis.vectors, h.representatives.vectors);
    auto coord = solve(frame, mu1.coeffs);
    if (!coord)
        throw std::logic_error("symmetric cocycle outside the computed cocycle space");
    Vec rep(mu1.coeffs.size());
    for (std::size_t j = 0; j < h.representatives.dim(); ++j)
        add_scaled(rep, (*coord)[h.coboundary_basis.dim() + j], h.representatives.vectors.column(j));
    out.representative.coeffs = std::move(rep);
    out.zero_class = is_zero(out.representative.coeffs);
    return out;
}

// Solves mu_1' - mu_1 = delta^1 Phi_1; a witness exists iff the order-1
// classes agree.
inline std::optional<Matrix> equivalent_order1(const TruncatedDeformation& d1,
                                               const TruncatedDeformation& d2)
{
    if (!(d1.base.structure_flat() == d2.base.structure_flat()) || d1.base.dim() != d2.base.dim())
        throw dimension_error("equivalence requires the same base algebra");
    std::size_t n = d1.base.dim();
    Cochain zero(2, n, n);
    const Cochain& a = d1.order() >= 1 ? d1.terms[0] : zero;
    const Cochain& b = d2.order() >= 1 ? d2.terms[0] : zero;
    auto x = solve(delta_matrix(adjoint(d1.base), 1), (b - a).coeffs);
    if (!x)
        return std::nullopt;
    // back from basis coordinates; 1-cochain entry (k; i) is matrix entry (k, i)
    return Matrix::from_flat(n, n, skew_basis(n, 1, n).vectors * *x);
}

// The algebra with product sum_i t0^i mu_i.
inline Algebra specialize(const TruncatedDeformation& d, const Rational& t0)
{
    std::size_t n = d.base.dim();
    Algebra out = Algebra::unchecked(n, d.base.structure_flat(), d.base.basis_names());
    Rational p = 1;
    for (std::size_t i = 1; i <= d.order(); ++i) {
        p *= t0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t k = 0; k < n; ++k)
                    out.c(a, b, k) += p * d.terms[i - 1].at(k, {a, b});
    }
    return out;
}

struct not_admissible_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct module_axiom_error : std::domain_error {
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    explicit module_axiom_error(std::vector<std::pair<std::size_t, std::size_t>> v)
        : std::domain_error("the action x.a = -{phi(x), a} is not a representation"),
          violations(std::move(v))
    {
    }
};

// Phi_t = Phi_0 + t Phi_1 + ... with Phi_0 a homomorphism into the
// anticommutator bracket of the (admissible) target algebra.
struct TruncatedHomDeformation {
    Algebra source;
    Algebra target;              // need not be commutative, must be admissible
    std::vector<Matrix> terms;   // terms[k] = Phi_k, target_dim x source_dim

    TruncatedHomDeformation(Algebra s, Algebra t, std::vector<Matrix> ts)
        : source(std::move(s)), target(std::move(t)), terms(std::move(ts))
    {
        if (terms.empty())
            throw dimension_error("a hom deformation needs at least Phi_0");
        for (const Matrix& m : terms)
            if (m.rows() != target.dim() || m.cols() != source.dim())
                throw dimension_error("hom deformation term has the wrong shape");
    }

    std::size_t order() const { return terms.size() - 1; }
};

// Order-n equations Phi_n(xy) = sum_{k=0}^n {Phi_k(x), Phi_{n-k}(y)} for
// n = 0..N on all basis pairs; n = 0 states that Phi_0 is a homomorphism.
inline ResidualReport verify_hom_deformation(const TruncatedHomDeformation& h)
{
    if (!is_jacobi_jordan_admissible(h.target))
        throw not_admissible_error("target algebra is not Jacobi-Jordan admissible");
    Algebra bracket = anticommutator_algebra(h.target);
    std::size_t n = h.source.dim();
    ResidualReport rep;
    for (std::size_t ord = 0; ord <= h.order(); ++ord)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Vec r = h.terms[ord] * h.source.product_basis(i, j);
                for (std::size_t k = 0; k <= ord; ++k)
                    add_scaled(r, -1,
                               bracket.product(h.terms[k].column(i), h.terms[ord - k].column(j)));
                if (!is_zero(r))
                    rep.entries.push_back({ord, i, j, 0, std::move(r)});
            }
    return rep;
}

// The module structure x.a = -{phi(x), a} on the target, as a representation
// of the source. Throws module_axiom_error when the axiom fails.
inline Representation hom_module(const TruncatedHomDeformation& h)
{
    Algebra bracket = anticommutator_algebra(h.target);
    Representation r;
    r.algebra = h.source;
    r.module_dim = h.target.dim();
    for (std::size_t i = 0; i < h.source.dim(); ++i) {
        Matrix act(r.module_dim, r.module_dim);
        for (std::size_t a = 0; a < r.module_dim; ++a) {
            Vec col = bracket.product(h.terms[0].column(i), basis_vector(r.module_dim, a));
            for (std::size_t k = 0; k < r.module_dim; ++k)
                act(k, a) = -col[k];
        }
        r.action.push_back(std::move(act));
    }
    RepresentationCheck chk = check_representation(r);
    if (!chk.ok)
        throw module_axiom_error(chk.violations);
    return r;
}

struct HomInfinitesimalClass {
    bool is_cocycle = false;
    bool zero_class = false;
    Matrix representative; // canonical H^1 representative as a linear map
};

// Verifies Phi_1 against Z^1 of the induced module and reduces it modulo
// B^1, in the same deterministic frame as infinitesimal_class.
inline HomInfinitesimalClass hom_infinitesimal_class(const TruncatedHomDeformation& h)
{
    if (h.order() < 1)
        throw dimension_error("hom infinitesimal class needs a term of order 1");
    Representation r = hom_module(h);
    std::size_t n = h.source.dim();
    std::size_t m = h.target.dim();
    Cochain phi1(1, n, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i)
            phi1.at(k, {i}) = h.terms[1](k, i);
    HomInfinitesimalClass out;
    out.representative = Matrix(m, n);
    out.is_cocycle = is_cocycle(r, phi1);
    if (!out.is_cocycle)
        return out;
    CohomologyResult hres = cohomology(r, 1, SymmetryClass::full);
    Matrix frame = Matrix::hstack(hres.coboundary_basis.vectors, hres.representatives.vectors);
    auto coord = solve(frame, phi1.coeffs);
    if (!coord)
        throw std::logic_error("cocycle outside the computed cocycle space");
    Vec rep(phi1.coeffs.size());
    for (std::size_t j = 0; j < hres.representatives.dim(); ++j)
        add_scaled(rep, (*coord)[hres.coboundary_basis.dim() + j], hres.representatives.vectors.column(j));
    out.zero_class = is_zero(rep);
    out.representative = Matrix::from_flat(m, n, rep);
    return out;
}

} // namespace jjcoh
