#include <jjcoh/catalog.hpp>
#include <jjcoh/deformation.hpp>

#include "generators.hpp"

#include <doctest.h>

using namespace jjcoh;

namespace {

const Algebra& j4() { return catalog_entry("J4").algebra; }

// mu_1(e3, e3) = e2: the square-zero deformation of the catalog algebra.
Cochain mu1_c1()
{
    Cochain c(2, 4, 4);
    c.at(1, {2, 2}) = 1;
    return c;
}

} // namespace

TEST_CASE("the square-zero deformation passes both verification modes")
{
    TruncatedDeformation d(j4(), {mu1_c1()});
    CHECK(verify_deformation(d, DeformationMode::truncated).verdict());
    CHECK(verify_deformation(d, DeformationMode::polynomial).verdict());
}

TEST_CASE("a non-cocycle first-order term is rejected with residuals")
{
    Cochain bad(2, 4, 4);
    bad.at(0, {0, 0}) = 1; // mu_1(e1, e1) = e1
    TruncatedDeformation d(j4(), {bad});
    ResidualReport rep = verify_deformation(d, DeformationMode::truncated);
    CHECK(!rep.verdict());
    for (const auto& e : rep.entries)
        CHECK(!is_zero(e.residual));
}

TEST_CASE("the infinitesimal class of the square-zero deformation is nonzero")
{
    TruncatedDeformation d(j4(), {mu1_c1()});
    InfinitesimalClass ic = infinitesimal_class(d);
    CHECK(ic.is_cocycle);
    CHECK(!ic.zero_class);
}

TEST_CASE("deformations differing by a coboundary are equivalent at order one")
{
    gen::Rng rng(601);
    Representation adj = adjoint(j4());
    for (int t = 0; t < 20; ++t) {
        Cochain f = gen::random_1cochain(rng, 4, 4);
        Cochain mu1b = mu1_c1();
        Vec shift = detail::coboundary_full(adj, 1, true) * f.coeffs;
        for (std::size_t i = 0; i < shift.size(); ++i)
            mu1b.coeffs[i] += shift[i];
        REQUIRE(mu1b.is_symmetric());
        TruncatedDeformation d1(j4(), {mu1_c1()});
        TruncatedDeformation d2(j4(), {mu1b});
        auto phi = equivalent_order1(d1, d2);
        REQUIRE(phi.has_value());
        // the witness solves mu_1' - mu_1 = delta^1 Phi_1
        Vec check = detail::coboundary_full(adj, 1, true) * phi->flattened();
        CHECK(check == shift);
    }
}

TEST_CASE("inequivalent first-order terms are detected")
{
    TruncatedDeformation d1(j4(), {mu1_c1()});
    TruncatedDeformation d2(j4(), {Cochain(2, 4, 4)});
    CHECK(!equivalent_order1(d1, d2).has_value()); // mu_1 has a nonzero class
}

TEST_CASE("specialization at t = 4 is isomorphic to the split catalog algebra")
{
    TruncatedDeformation d(j4(), {mu1_c1()});
    Algebra s = specialize(d, 4);
    CHECK(validate_jacobi_jordan(s).ok());
    CHECK(s.product_basis(2, 2) == Vec{Rational(0), Rational(4), Rational(0), Rational(0)});

    // u1 = e3 - 2 e1, u2 = 8 e2 - 4 e4, u3 = e3 + 2 e1, u4 = 8 e2 + 4 e4
    Matrix p(4, 4);
    p.set_column(0, Vec{Rational(-2), Rational(0), Rational(1), Rational(0)});
    p.set_column(1, Vec{Rational(0), Rational(8), Rational(0), Rational(-4)});
    p.set_column(2, Vec{Rational(2), Rational(0), Rational(1), Rational(0)});
    p.set_column(3, Vec{Rational(0), Rational(8), Rational(0), Rational(4)});
    Algebra t4 = transport(s, p);
    CHECK(t4.structure_flat() == catalog_entry("A12A12").algebra.structure_flat());
}

TEST_CASE("specialization at t = 0 returns the base product")
{
    TruncatedDeformation d(j4(), {mu1_c1()});
    CHECK(specialize(d, 0).structure_flat() == j4().structure_flat());
}

TEST_CASE("hom deformations: half the identity is a bracket homomorphism")
{
    Matrix half = Matrix::identity(4).scaled(Rational(1, 2));
    TruncatedHomDeformation h(j4(), j4(), {half});
    CHECK(verify_hom_deformation(h).verdict());

    // first-order terms must be derivations of the base product
    Matrix grading(4, 4);
    grading(0, 0) = 1;
    grading(1, 1) = 2;
    grading(2, 2) = 1;
    grading(3, 3) = 2;
    TruncatedHomDeformation h1(j4(), j4(), {half, grading});
    CHECK(verify_hom_deformation(h1).verdict());
    HomInfinitesimalClass ic = hom_infinitesimal_class(h1);
    CHECK(ic.is_cocycle);

    Matrix notder = Matrix::identity(4);
    TruncatedHomDeformation hbad(j4(), j4(), {half, notder});
    CHECK(!verify_hom_deformation(hbad).verdict());
}

TEST_CASE("inadmissible targets are rejected")
{
    // x*x = x is not Jacobi-Jordan admissible: {x,x} = 2x and the cube is nonzero.
    Algebra bad(1);
    bad.set_product(0, 0, basis_vector(1, 0));
    TruncatedHomDeformation h(bad, bad, {Matrix::identity(1)});
    CHECK_THROWS_AS(verify_hom_deformation(h), not_admissible_error);
}

TEST_CASE("the induced module of a hom deformation satisfies the axiom")
{
    Matrix half = Matrix::identity(4).scaled(Rational(1, 2));
    TruncatedHomDeformation h(j4(), j4(), {half});
    Representation r = hom_module(h);
    CHECK(check_representation(r).ok);
    // x.a = -{phi(x), a} = -xa here
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(r.action[i] == j4().left_multiplication(i).scaled(-1));
}

TEST_CASE("asymmetric deformation terms are rejected at construction")
{
    Cochain c(2, 4, 4);
    c.at(0, {0, 1}) = 1; // c(e1,e2) != c(e2,e1)
    CHECK_THROWS_AS(TruncatedDeformation(j4(), {c}), commutativity_error);
}
