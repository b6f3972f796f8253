#include "doctest.h"

#include "wittstone/residue.hpp"

using namespace wittstone;

TEST_CASE("Z/p^m arithmetic matches plain integer arithmetic mod p^m") {
    for (std::uint64_t pv : {2ull, 3ull}) {
        for (std::uint32_t m = 1; m <= 3; ++m) {
            ZmodRing r(Prime(pv), m);
            std::uint64_t mod = r.modulus();
            for (std::uint64_t a = 0; a < mod; ++a)
                for (std::uint64_t b = 0; b < mod; ++b) {
                    CHECK(r.add(a, b) == (a + b) % mod);
                    CHECK(r.mul(a, b) == (a * b) % mod);
                    CHECK(r.add(a, r.neg(a)) == 0);
                }
        }
    }
}

TEST_CASE("residue class wrappers carry and enforce their modulus") {
    ResidueInt a(Prime(2), 3, 5), b(Prime(2), 3, 6);
    CHECK((a + b).value() == 3);
    CHECK((a * b).value() == 6);
    CHECK((a - b).value() == 7);
    CHECK((-a).value() == 3);
    ResidueInt other(Prime(3), 3, 5);
    CHECK_THROWS_AS((void)(a + other), std::invalid_argument);
}

TEST_CASE("truncation drops precision and commutes with arithmetic") {
    ResidueInt a(Prime(2), 3, 5), b(Prime(2), 3, 7);
    CHECK((a * b).truncate(2).value() == (a.truncate(2) * b.truncate(2)).value());
    CHECK_THROWS_AS(a.truncate(4), std::invalid_argument);
}

TEST_CASE("division by p is exact or loudly refused") {
    ResidueInt a(Prime(2), 3, 6);
    ResidueInt h = a.exact_div_p();
    CHECK(h.precision() == 2);
    CHECK(h.value() == 3);
    ResidueInt odd(Prime(2), 3, 5);
    CHECK_THROWS_AS(odd.exact_div_p(), std::domain_error);
}

TEST_CASE("the zero ring is rejected up front") {
    CHECK_THROWS_AS(ZmodRing(Prime(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(ResidueInt(Prime(2), 0, 0), std::invalid_argument);
}
