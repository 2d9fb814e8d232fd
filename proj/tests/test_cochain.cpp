#include <jjcoh/catalog.hpp>
#include <jjcoh/cochain.hpp>

#include "generators.hpp"

#include <doctest.h>

using namespace jjcoh;

namespace {
const Algebra& j4() { return catalog_entry("J4").algebra; }
} // namespace

TEST_CASE("d composed with delta vanishes on the catalog algebra")
{
    for (const Representation& r : {trivial(j4(), 1), adjoint(j4())})
        for (std::size_t p = 1; p <= 3; ++p)
            CHECK((d_matrix(r, p) * delta_matrix(r, p - 1)).is_zero());
}

TEST_CASE("symmetric and skew bases have binomial dimensions")
{
    // dim S^p = C(n+p-1, p) * m, dim A^p = C(n, p) * m
    CHECK(symmetric_basis(4, 2, 1).dim() == 10);
    CHECK(skew_basis(4, 2, 1).dim() == 6);
    CHECK(symmetric_basis(4, 3, 1).dim() == 20);
    CHECK(skew_basis(4, 3, 1).dim() == 4);
    CHECK(symmetric_basis(3, 2, 2).dim() == 12);
    CHECK(skew_basis(3, 2, 2).dim() == 6);
    // S^2 + A^2 = L^2
    CHECK(symmetric_basis(4, 2, 1).dim() + skew_basis(4, 2, 1).dim() == 16);
}

TEST_CASE("degree-zero and degree-one cohomology of the catalog algebra")
{
    Representation tr = trivial(j4(), 1);
    CohomologyResult h0 = cohomology(adjoint(j4()), 0, SymmetryClass::full);
    CHECK(h0.dim_cohomology == 2); // H^0(adjoint) = Ann
    CHECK(same_span(h0.cocycle_basis, annihilator(j4())));

    CohomologyResult h1 = cohomology(tr, 1, SymmetryClass::full);
    CHECK(h1.dim_cocycles == 2);
    CHECK(h1.dim_coboundaries == 0);
    CHECK(h1.dim_cohomology == 2); // (J/J^2)^* with dim J^2 = 2
    for (std::size_t jj = 0; jj < h1.representatives.dim(); ++jj) {
        Vec v = h1.representatives.vectors.column(jj);
        CHECK(v[1] == 0); // supported on e1, e3 only
        CHECK(v[3] == 0);
    }
}

TEST_CASE("degree-two cohomology dimensions of the catalog algebra")
{
    Representation tr = trivial(j4(), 1);
    CohomologyResult full = cohomology(tr, 2, SymmetryClass::full);
    CHECK(full.dim_cocycles == 9);
    CHECK(full.dim_coboundaries == 2);
    CHECK(full.dim_cohomology == 7);

    CohomologyResult sym = cohomology(tr, 2, SymmetryClass::symmetric);
    CHECK(sym.dim_cocycles == 4);
    CHECK(sym.dim_coboundaries == 2);
    CHECK(sym.dim_cohomology == 2);

    CohomologyResult skew = cohomology(tr, 2, SymmetryClass::skew);
    CHECK(skew.dim_cocycles == 2);

    // C(M) = K != 0 here, so Z^2 strictly exceeds Z_s^2 (+) Z_a^2
    CHECK(full.dim_cocycles > sym.dim_cocycles + skew.dim_cocycles);

    CohomologyResult adj = cohomology(adjoint(j4()), 2, SymmetryClass::symmetric);
    CHECK(adj.dim_cocycles == 13);
    CHECK(adj.dim_coboundaries == 9);
    CHECK(adj.dim_cohomology == 4);
}

TEST_CASE("coboundary witnesses check out")
{
    gen::Rng rng(401);
    Representation r = adjoint(j4());
    for (int t = 0; t < 30; ++t) {
        Cochain f = gen::random_1cochain(rng, 4, 4);
        Cochain df(2, 4, 4);
        df.coeffs = detail::coboundary_full(r, 1, true) * f.coeffs;
        CHECK(is_cocycle(r, df));
        auto wit = is_coboundary(r, df);
        REQUIRE(wit.has_value());
        Cochain again(2, 4, 4);
        again.coeffs = detail::coboundary_full(r, 1, true) * wit->coeffs;
        CHECK(again.coeffs == df.coeffs);
    }
}

TEST_CASE("cohomologous is reflexive and respects coboundary shifts")
{
    gen::Rng rng(402);
    Representation r = trivial(j4(), 1);
    Cochain c = gen::random_symmetric_2cochain(rng, 4, 1);
    CHECK(cohomologous(r, c, c));
    Cochain f = gen::random_1cochain(rng, 4, 1);
    Cochain shifted = c;
    Vec df = detail::coboundary_full(r, 1, true) * f.coeffs;
    for (std::size_t i = 0; i < df.size(); ++i)
        shifted.coeffs[i] += df[i];
    CHECK(cohomologous(r, c, shifted));
}

TEST_CASE("the semidirect product by a valid module is Jacobi-Jordan")
{
    Algebra e0 = semidirect_product(adjoint(j4()));
    CHECK(e0.dim() == 8);
    CHECK(validate_jacobi_jordan(e0).ok());
    CHECK(e0.basis_names()[0] == "m1");
    CHECK(e0.basis_names()[4] == "e1");
}

TEST_CASE("evaluate2 matches coefficient lookup bilinearly")
{
    gen::Rng rng(403);
    Cochain c = gen::random_symmetric_2cochain(rng, 3, 2);
    Vec x{Rational(2), Rational(-1), Rational(1, 2)};
    Vec y{Rational(0), Rational(3), Rational(1)};
    Vec direct(2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t jj = 0; jj < 3; ++jj)
            for (std::size_t k = 0; k < 2; ++k)
                direct[k] += x[i] * y[jj] * c.at(k, {i, jj});
    CHECK(evaluate2(c, x, y) == direct);
}

TEST_CASE("the degree cap is enforced")
{
    CHECK_THROWS_AS(cohomology(trivial(j4(), 1), max_cochain_degree + 1, SymmetryClass::full),
                    degree_error);
}
