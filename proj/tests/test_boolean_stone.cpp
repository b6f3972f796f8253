#include "doctest.h"

#include <set>

#include "wittstone/boolean_stone.hpp"

using namespace wittstone;

TEST_CASE("function algebras of finite sets are p-Boolean with one character per point") {
    for (std::uint64_t pv : {2ull, 3ull}) {
        for (std::size_t k = 1; k <= 4; ++k) {
            PBooleanAlgebra a = stone_dual_of_set(k, Prime(pv));
            CHECK(PBooleanAlgebra::is_p_boolean(a.algebra()));
            FiniteStoneDual d = spec_chars(a.algebra());
            CHECK(d.points.size() == k);
            // each character is evaluation at one point: exactly one
            // indicator goes to 1, and distinct characters pick distinct points
            std::set<std::size_t> picked;
            for (const auto& chi : d.points) {
                std::size_t pt = SIZE_MAX;
                for (std::size_t i = 0; i < k; ++i)
                    if (chi[i] % pv != 0) {
                        CHECK(pt == SIZE_MAX);
                        CHECK(chi[i] % pv == 1);
                        pt = i;
                    }
                REQUIRE(pt != SIZE_MAX);
                picked.insert(pt);
            }
            CHECK(picked.size() == k);
        }
    }
}

TEST_CASE("F4 and dual numbers are not p-Boolean") {
    CHECK_FALSE(PBooleanAlgebra::is_p_boolean(algebras::f4()));
    CHECK_FALSE(PBooleanAlgebra::is_p_boolean(algebras::dual_numbers(Prime(2))));
    CHECK(PBooleanAlgebra::is_p_boolean(algebras::fp(Prime(3))));
}

TEST_CASE("a proper subalgebra of F_2^3 still has one character per dimension") {
    FiniteFpAlgebra amb = algebras::fp_power(Prime(2), 3);
    // span of (1,1,1) and (1,1,0): functions constant on {0,1}
    PresentedSubalgebra sub = subalgebra_from_span(amb, {{1, 1, 1}, {1, 1, 0}});
    CHECK(sub.algebra.dim() == 2);
    CHECK(PBooleanAlgebra::is_p_boolean(sub.algebra));
    CHECK(spec_chars(sub.algebra).points.size() == 2);
}

TEST_CASE("coperfection strips nilpotents and fixes perfect algebras") {
    Coperfection c = coperfection(algebras::dual_numbers(Prime(2)));
    CHECK(c.image.algebra.dim() == 1); // F_2[x]/(x^2) --> F_2
    CHECK(is_perfect_algebra(c.image.algebra));

    Coperfection cf = coperfection(algebras::f4());
    CHECK(cf.image.algebra.dim() == 2); // F_4 is already perfect
    CHECK(is_perfect_algebra(algebras::f4()));
    CHECK(perfection(algebras::fp_power(Prime(3), 2)).algebra.dim() == 2);
}

TEST_CASE("Frobenius invariants and coinvariants of split and field cases") {
    // On F_2^k the Frobenius is the identity: invariants are everything and
    // the coinvariant quotient is the full algebra.
    auto a = algebras::fp_power(Prime(2), 2);
    CHECK(frobenius_invariants(a).algebra.dim() == 2);
    auto co = frobenius_coinvariants(a);
    REQUIRE(co.algebra.has_value());
    CHECK(co.algebra->dim() == 2);

    // On F_4 the fixed field is F_2 and x^2 - x generates the unit ideal's
    // complement: the coinvariants collapse to F_2 as well.
    CHECK(frobenius_invariants(algebras::f4()).algebra.dim() == 1);
}

TEST_CASE("algebra map enumeration refuses absurdly large searches") {
    FiniteFpAlgebra big = algebras::fp_power(Prime(3), 4);
    CHECK_THROWS_AS(enumerate_algebra_maps(big, big), std::invalid_argument);
}
