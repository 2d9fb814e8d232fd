#include <jjcoh/catalog.hpp>
#include <jjcoh/structures.hpp>

#include "generators.hpp"

#include <doctest.h>

using namespace jjcoh;

namespace {
const Algebra& j4() { return catalog_entry("J4").algebra; }
const BilinearForm& j4b()
{
    static BilinearForm b = catalog_form("J4.B");
    return b;
}
} // namespace

TEST_CASE("derivation and antiderivation dimensions of the catalog algebra")
{
    CHECK(derivations(j4()).dim() == 7);
    CHECK(antiderivations(j4()).dim() == 7);
    CHECK(inner_antiderivations(j4()).dim() == 2);
}

TEST_CASE("left multiplications are inner antiderivations")
{
    gen::Rng rng(501);
    for (int t = 0; t < 30; ++t) {
        Algebra a = gen::random_jacobi_jordan(rng, 1 + t % 5);
        for (std::size_t i = 0; i < a.dim(); ++i)
            CHECK(is_antiderivation(a, a.left_multiplication(i)));
    }
}

TEST_CASE("anticommutator closure criteria agree on antiderivations")
{
    SubspaceBasis ader = antiderivations(j4());
    for (std::size_t i = 0; i < ader.dim(); ++i)
        for (std::size_t jj = i; jj < ader.dim(); ++jj) {
            Matrix d1 = detail::endo_from_flat(4, ader.vectors.column(i));
            Matrix d2 = detail::endo_from_flat(4, ader.vectors.column(jj));
            CHECK_NOTHROW(anticommutator_closure_test(j4(), d1, d2));
        }
    CHECK_THROWS_AS(anticommutator_closure_test(j4(), Matrix::identity(4), Matrix::identity(4)),
                    not_derivation_error);
}

TEST_CASE("the catalog form is pseudo-Euclidean and F has dimension 5")
{
    CHECK(check_pseudo_euclidean(j4(), j4b()));
    CHECK(invariant_forms(j4()).dim() == 5);
    CHECK(b_p_dimension(j4()) == 5);
    CHECK(contains(invariant_forms(j4()), j4b().flattened()));
}

TEST_CASE("an algebra whose invariant forms are all degenerate")
{
    // e1 e1 = e2 = e3 e3; invariance forces a zero row, so no combination of
    // invariant forms is nondegenerate.
    Algebra a(3);
    a.set_product(0, 0, basis_vector(3, 1));
    a.set_product(2, 2, basis_vector(3, 1));
    REQUIRE(validate_jacobi_jordan(a).ok());
    CHECK(invariant_forms(a).dim() > 0);
    CHECK(b_p_dimension(a) == 0);
}

TEST_CASE("B-symmetric and B-skew derivations intersect trivially")
{
    auto [der_s, der_a] = symmetric_skew_derivations(j4(), j4b());
    CHECK(der_s.dim() == 3);
    CHECK(der_a.dim() == 2);
    CHECK(subspace_intersection(der_s, der_a).dim() == 0);
    // both sit inside Der
    SubspaceBasis der = derivations(j4());
    for (std::size_t jj = 0; jj < der_s.dim(); ++jj)
        CHECK(contains(der, der_s.vectors.column(jj)));
    for (std::size_t jj = 0; jj < der_a.dim(); ++jj)
        CHECK(contains(der, der_a.vectors.column(jj)));
}

TEST_CASE("b_transpose is an involution determined by the form")
{
    gen::Rng rng(502);
    for (int t = 0; t < 20; ++t) {
        Matrix d = gen::random_matrix(rng, 4, 4);
        Matrix td = b_transpose(j4b(), d);
        CHECK(b_transpose(j4b(), td) == d);
        // defining identity B(tD x, y) = B(x, D y)
        CHECK(td.transposed() * j4b() == j4b() * d);
    }
}

TEST_CASE("mu lands in symmetric 3-cocycles, nu lands in invariant forms")
{
    SubspaceBasis f = invariant_forms(j4());
    for (std::size_t jj = 0; jj < f.dim(); ++jj)
        CHECK_NOTHROW(mu_map(j4(), detail::endo_from_flat(4, f.vectors.column(jj))));
    SubspaceBasis der = derivations(j4());
    for (std::size_t jj = 0; jj < der.dim(); ++jj)
        CHECK_NOTHROW(nu_map(j4(), j4b(), detail::endo_from_flat(4, der.vectors.column(jj))));
    CHECK_THROWS_AS(nu_map(j4(), j4b(), Matrix::identity(4)), not_derivation_error);
}

TEST_CASE("the four-term sequence is exact on the catalog algebra")
{
    ExactSequenceReport rep = exact_sequence_report(j4(), j4b());
    CHECK(rep.exact_at_derivations);
    CHECK(rep.exact_at_forms);
    CHECK(rep.dim_Der == 7);
    CHECK(rep.dim_Der_a == 2);
    CHECK(rep.dim_F == 5);
    CHECK(rep.dim_Hs3 == 2);
    CHECK(rep.dim_im_nu == rep.dim_ker_mu_bar);
}

TEST_CASE("the dimension bounds hold on the catalog algebra")
{
    StructureReport st = structure_report(j4(), j4b());
    CHECK(st.bound_low == 4); // 1 + 2*3/2 with dim Ann = 2
    CHECK(st.bound_high == 7);
    CHECK(st.bound_low <= st.dim_F);
    CHECK(st.dim_F <= st.bound_high);
    CHECK(st.b_p <= st.dim_F);
}

TEST_CASE("degenerate forms are rejected where a pseudo-Euclidean one is required")
{
    CHECK_THROWS_AS(exact_sequence_report(j4(), Matrix(4, 4)), degenerate_form_error);
    CHECK_THROWS_AS(symmetric_skew_derivations(j4(), Matrix::identity(4)), degenerate_form_error);
}

TEST_CASE("skew scalar 2-cocycles correspond to B-skew derivations")
{
    // c(x, y) = B(h(x), y) carries Z_a^2 onto Der_a; the dimensions agree.
    CohomologyResult za = cohomology(trivial(j4(), 1), 2, SymmetryClass::skew);
    auto [der_s, der_a] = symmetric_skew_derivations(j4(), j4b());
    CHECK(za.dim_cocycles == der_a.dim());
    Matrix binv = *inverse(j4b());
    for (std::size_t jj = 0; jj < za.dim_cocycles; ++jj) {
        // cocycle as a matrix C with C(i,j) = c(e_i, e_j); h = B^{-1} C^T
        Matrix cmat = Matrix::from_flat(4, 4, za.cocycle_basis.vectors.column(jj));
        Matrix h = binv * cmat.transposed();
        CHECK(is_derivation(j4(), h));
        CHECK(contains(der_a, h.flattened()));
    }
}
