#include <jjcoh/algebra.hpp>
#include <jjcoh/catalog.hpp>

#include "generators.hpp"

#include <doctest.h>

using namespace jjcoh;

TEST_CASE("catalog algebras validate")
{
    for (const auto& e : catalog()) {
        CHECK(validate_jacobi_jordan(e.algebra).ok());
        CHECK(check_cube_zero(e.algebra).ok());
        CHECK(check_jordan_identity(e.algebra));
    }
}

TEST_CASE("the zero algebra is Jacobi-Jordan")
{
    Algebra z(3);
    CHECK(validate_jacobi_jordan(z).ok());
    CHECK(annihilator(z).dim() == 3);
    CHECK(nilpotency_index(z) == 2);
}

TEST_CASE("non-symmetric structure constants are rejected")
{
    Vec s(8);
    s[(0 * 2 + 1) * 2 + 0] = 1; // e1 e2 = e1, e2 e1 = 0
    CHECK_THROWS_AS(Algebra::commutative(2, s), commutativity_error);
}

TEST_CASE("a nonzero cube is detected with a witness")
{
    Algebra a(1);
    a.set_product(0, 0, basis_vector(1, 0)); // e1 e1 = e1
    ValidationReport rep = check_cube_zero(a);
    CHECK(!rep.ok());
    REQUIRE(!rep.cube_violations.empty());
    const auto& v = rep.cube_violations.front();
    Vec cube = a.product(v.witness, a.product(v.witness, v.witness));
    CHECK(cube == v.cube);
    CHECK(!is_zero(cube));
}

TEST_CASE("structure of the four-dimensional catalog algebra")
{
    const Algebra& j4 = catalog_entry("J4").algebra;
    SubspaceBasis ann = annihilator(j4);
    CHECK(ann.dim() == 2);
    CHECK(contains(ann, basis_vector(4, 1)));
    CHECK(contains(ann, basis_vector(4, 3)));
    auto chain = derived_powers(j4);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].dim() == 4);
    CHECK(chain[1].dim() == 2);
    CHECK(chain[2].dim() == 0);
    CHECK(nilpotency_index(j4) == 3);
    CHECK(check_anti_associative(j4));
    CHECK(is_jacobi_jordan_admissible(j4));
}

TEST_CASE("a non-nilpotent commutative algebra is flagged")
{
    Algebra a(1);
    a.set_product(0, 0, basis_vector(1, 0));
    CHECK_THROWS_AS(derived_powers(a), non_nilpotent_error);
}

TEST_CASE("transport round-trips and preserves the axioms")
{
    gen::Rng rng(201);
    for (int t = 0; t < 30; ++t) {
        Algebra a = gen::random_jacobi_jordan(rng, 4);
        Matrix p = gen::random_invertible(rng, 4);
        Algebra b = transport(a, p);
        CHECK(validate_jacobi_jordan(b).ok());
        Algebra back = transport(b, *inverse(p));
        CHECK(back.structure_flat() == a.structure_flat());
    }
}

TEST_CASE("transport rejects singular basis changes")
{
    const Algebra& j4 = catalog_entry("J4").algebra;
    CHECK_THROWS_AS(transport(j4, Matrix(4, 4)), singular_matrix_error);
}

TEST_CASE("random layered algebras satisfy all characterizations")
{
    gen::Rng rng(202);
    for (int t = 0; t < 50; ++t) {
        Algebra a = gen::random_jacobi_jordan(rng, 1 + t % 5);
        CHECK(validate_jacobi_jordan(a).ok());
        CHECK(check_cube_zero(a).ok());
        CHECK(check_jordan_identity(a));
    }
}

TEST_CASE("anticommutator of a commutative algebra doubles the product")
{
    const Algebra& j4 = catalog_entry("J4").algebra;
    Algebra br = anticommutator_algebra(j4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(br.c(i, j, k) == 2 * j4.c(i, j, k));
}
