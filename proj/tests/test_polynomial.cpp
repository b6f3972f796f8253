#include "doctest.h"

#include "wittstone/polynomial.hpp"
#include "wittstone/residue.hpp"

using namespace wittstone;

namespace {
const std::vector<std::string> XY{"X", "Y"};
}

TEST_CASE("binomial expansion is computed exactly") {
    auto x = IntPolynomial::variable(XY, 0);
    auto y = IntPolynomial::variable(XY, 1);
    auto lhs = (x + y).pow(2);
    auto rhs = x.pow(2) + x * y * BigInt(2) + y.pow(2);
    CHECK(lhs == rhs);
    CHECK(lhs.term_count() == 3);
}

TEST_CASE("polynomial arithmetic agrees with integer evaluation") {
    auto x = IntPolynomial::variable(XY, 0);
    auto y = IntPolynomial::variable(XY, 1);
    auto q = (x * y - x.pow(3)) * BigInt(7) + IntPolynomial::constant(XY, 5);
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b) {
            BigInt expect = 7 * (BigInt(a) * b - BigInt(a) * a * a) + 5;
            CHECK(q.eval_int({BigInt(a), BigInt(b)}) == expect);
        }
}

TEST_CASE("ring evaluation reduces the integer value") {
    auto x = IntPolynomial::variable(XY, 0);
    auto y = IntPolynomial::variable(XY, 1);
    auto q = x.pow(2) * y + IntPolynomial::constant(XY, 10) - y;
    ZmodRing r(Prime(3), 2); // Z/9
    for (std::uint64_t a = 0; a < 9; ++a)
        for (std::uint64_t b = 0; b < 9; ++b) {
            std::uint64_t expect =
                (std::uint64_t)(((__int128)a * a % 9 * b + 10 + 9 - b % 9) % 9);
            CHECK(q.eval(r, {a, b}) == expect);
        }
}

TEST_CASE("exact division succeeds only when every coefficient divides") {
    auto x = IntPolynomial::variable(XY, 0);
    auto even = x * BigInt(4) + IntPolynomial::constant(XY, 6);
    CHECK(even.exact_div(2) == x * BigInt(2) + IntPolynomial::constant(XY, 3));
    auto odd = x * BigInt(4) + IntPolynomial::constant(XY, 3);
    CHECK_THROWS_AS(odd.exact_div(2), std::domain_error);
    CHECK_THROWS_AS(x.exact_div(0), std::invalid_argument);
}

TEST_CASE("zero coefficients are never stored, so equality is structural") {
    auto x = IntPolynomial::variable(XY, 0);
    auto z = x - x;
    CHECK(z.is_zero());
    CHECK(z == IntPolynomial::constant(XY, 0));
    CHECK(x + (-x) == z);
}
