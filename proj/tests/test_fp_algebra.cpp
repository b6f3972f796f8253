#include "doctest.h"

#include "wittstone/boolean_stone.hpp"
#include "wittstone/fp_algebra.hpp"

using namespace wittstone;

TEST_CASE("F4 is a field: every nonzero element has an inverse") {
    FpAlgebraRing r(algebras::f4());
    CHECK(r.size() == 4);
    for (std::size_t i = 1; i < r.size(); ++i) {
        bool invertible = false;
        for (std::size_t j = 1; j < r.size(); ++j)
            if (r.eq(r.mul(r.element(i), r.element(j)), r.one())) invertible = true;
        CHECK(invertible);
    }
}

TEST_CASE("dual numbers have a square-zero generator and are not reduced") {
    FiniteFpAlgebra d = algebras::dual_numbers(Prime(2));
    FpAlgebraRing r(d);
    auto x = r.element(2); // basis vector e1 = x
    CHECK(r.eq(r.mul(x, x), r.zero()));
    CHECK_FALSE(is_perfect_algebra(d));
}

TEST_CASE("Frobenius matrix is a ring endomorphism and has the right fixed points") {
    // On F_2^k the Frobenius is the identity; on F_4 it has order two and
    // fixes exactly the prime field.
    CHECK(frobenius_matrix(algebras::fp_power(Prime(2), 3)) == fplin::identity(3));
    fplin::Mat f = frobenius_matrix(algebras::f4());
    CHECK(f != fplin::identity(2));
    for (std::size_t i = 0; i < 2; ++i) {
        fplin::Vec e(2, 0);
        e[i] = 1;
        CHECK(fplin::mat_vec(f, fplin::mat_vec(f, e, 2), 2) == e);
    }
    CHECK(frobenius_invariants(algebras::f4()).algebra.dim() == 1);
    CHECK(frobenius_invariants(algebras::fp_power(Prime(2), 3)).algebra.dim() == 3);
}

TEST_CASE("element enumeration is a bijection with p^dim codes") {
    FiniteFpAlgebra a = algebras::f9();
    FpAlgebraRing r(a);
    CHECK(r.size() == 9);
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r.index_of(r.element(i)) == i);
}

TEST_CASE("unital algebra maps between split function algebras count set maps") {
    // Hom(F_p^s, F_p^t) in algebras corresponds to maps of spectra t -> s.
    FiniteFpAlgebra a2 = algebras::fp_power(Prime(2), 2);
    FiniteFpAlgebra a3 = algebras::fp_power(Prime(2), 3);
    CHECK(enumerate_algebra_maps(a2, a2).size() == 4);  // maps 2 -> 2
    CHECK(enumerate_algebra_maps(a2, a3).size() == 8);  // maps 3 -> 2
    CHECK(enumerate_algebra_maps(a3, a2).size() == 9);  // maps 2 -> 3
    // F_4 has no characters over F_2, so no maps F_4 -> F_2.
    CHECK(enumerate_algebra_maps(algebras::f4(), algebras::fp(Prime(2))).empty());
}

TEST_CASE("structure constant validation rejects a broken unit") {
    // e0 declared as unit but e0*e1 = 0 violates the unit law.
    std::vector<std::vector<std::vector<std::uint64_t>>> sc{
        {{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
    CHECK_THROWS_AS(FiniteFpAlgebra(Prime(2), 2, {}, sc, {1, 0}), std::invalid_argument);
}
