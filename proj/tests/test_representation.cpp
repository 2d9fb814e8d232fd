#include <jjcoh/catalog.hpp>
#include <jjcoh/representation.hpp>

#include "generators.hpp"

#include <doctest.h>

using namespace jjcoh;

TEST_CASE("adjoint and trivial modules satisfy the axiom")
{
    gen::Rng rng(301);
    for (int t = 0; t < 30; ++t) {
        Algebra a = gen::random_jacobi_jordan(rng, 1 + t % 5);
        CHECK(check_representation(adjoint(a)).ok);
        CHECK(check_representation(trivial(a, 2)).ok);
    }
}

TEST_CASE("layered representations satisfy the axiom")
{
    gen::Rng rng(302);
    for (int t = 0; t < 30; ++t) {
        gen::LayeredAlgebra l = gen::random_layered(rng, 2 + t % 4);
        Representation r = gen::random_layered_representation(rng, l, 2, 2);
        CHECK(check_representation(r).ok);
    }
}

TEST_CASE("a broken action is reported with the offending pair")
{
    const Algebra& j4 = catalog_entry("J4").algebra;
    Representation r = trivial(j4, 2);
    r.action[0](0, 1) = 1;
    r.action[0](1, 0) = 1; // pi(e1)^2 != 0 but pi(e1 e1) = pi(e2) = 0
    RepresentationCheck chk = check_representation(r);
    CHECK(!chk.ok);
    REQUIRE(!chk.violations.empty());
    CHECK(chk.violations.front() == std::pair<std::size_t, std::size_t>(0, 0));
}

TEST_CASE("invariants of the adjoint module are the annihilator")
{
    gen::Rng rng(303);
    for (int t = 0; t < 30; ++t) {
        Algebra a = gen::random_jacobi_jordan(rng, 1 + t % 5);
        CHECK(same_span(module_invariants(adjoint(a)), annihilator(a)));
    }
}

TEST_CASE("action shape mismatches are rejected")
{
    const Algebra& j4 = catalog_entry("J4").algebra;
    Representation r = trivial(j4, 2);
    r.action.pop_back();
    CHECK_THROWS_AS(check_representation(r), dimension_error);
}
