#include "doctest.h"

#include "wittstone/fp_algebra.hpp"
#include "wittstone/witt.hpp"

using namespace wittstone;

TEST_CASE("length-2 universal polynomials match the closed forms for p=2") {
    // Derived by hand from the ghost equations:
    //   S0 = X0+Y0, S1 = X1+Y1-X0*Y0,
    //   P0 = X0*Y0, P1 = X0^2*Y1 + X1*Y0^2 + 2*X1*Y1.
    const WittPolySet& ws = WittPolySet::get(Prime(2), 2);
    const auto& v = ws.variables();
    auto var = [&](std::size_t i) { return IntPolynomial::variable(v, i); };
    auto X0 = var(0), X1 = var(1), Y0 = var(2), Y1 = var(3);
    CHECK(ws.sums()[0] == X0 + Y0);
    CHECK(ws.sums()[1] == X1 + Y1 - X0 * Y0);
    CHECK(ws.products()[0] == X0 * Y0);
    CHECK(ws.products()[1] == X0.pow(2) * Y1 + X1 * Y0.pow(2) + X1 * Y1 * BigInt(2));
}

TEST_CASE("sum polynomials satisfy the ghost equations on integer samples") {
    for (std::uint64_t pv : {2ull, 3ull, 5ull}) {
        Prime p(pv);
        const std::size_t n = 3;
        const WittPolySet& ws = WittPolySet::get(p, n);
        std::vector<BigInt> vals{3, -5, 7, 2, 11, -4}; // X0..X2, Y0..Y2
        auto ghost_at = [&](std::size_t i, std::size_t off) {
            return ws.ghost(i, off).eval_int(vals);
        };
        std::vector<BigInt> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = ws.sums()[i].eval_int(vals);
        for (std::size_t i = 0; i < n; ++i) {
            // ghost_i of the sum digits equals the sum of the two ghosts
            BigInt g = 0, q = 1;
            for (std::size_t j = 0; j <= i; ++j) {
                BigInt t = s[j];
                std::uint64_t reps = 1; // t^(p^(i-j)) by repeated multiplication
                for (std::size_t k = 0; k < i - j; ++k) reps *= pv;
                BigInt tp = 1;
                for (std::uint64_t e = 0; e < reps; ++e) tp *= t;
                g += q * tp;
                q *= pv;
            }
            CHECK(g == ghost_at(i, 0) + ghost_at(i, n));
        }
    }
}

TEST_CASE("W_2(F_2) is cyclic of order four") {
    WittRingT<ZmodRing> w(Prime(2), 2, ZmodRing(Prime(2), 1));
    auto x = w.one();
    std::size_t order = 1;
    while (!w.eq(x, w.zero())) {
        x = w.add(x, w.one());
        ++order;
        REQUIRE(order <= 8);
    }
    CHECK(order == 4);
    // 1 + 1 = (0, 1): the carry digit appears.
    auto two = w.add(w.one(), w.one());
    CHECK(two[0] == 0);
    CHECK(two[1] == 1);
}

TEST_CASE("Teichmuller lift is multiplicative") {
    WittRingT<FpAlgebraRing> w(Prime(2), 3, FpAlgebraRing(algebras::f4()));
    const auto& base = w.base();
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j) {
            auto lhs = w.mul(w.teichmuller(base.element(i)), w.teichmuller(base.element(j)));
            auto rhs = w.teichmuller(base.mul(base.element(i), base.element(j)));
            CHECK(w.eq(lhs, rhs));
        }
}

TEST_CASE("ghost map is a ring homomorphism over a torsion-free quotient") {
    // Over Z/3^4 the ghost coordinates are still additive/multiplicative
    // because the universal identities hold over Z.
    WittRingT<ZmodRing> w(Prime(3), 3, ZmodRing(Prime(3), 4));
    ZmodRing base(Prime(3), 4);
    std::vector<WittRingT<ZmodRing>::Elem> samples{
        {1, 2, 3}, {80, 5, 7}, {0, 0, 1}, {13, 26, 52}};
    for (const auto& a : samples)
        for (const auto& b : samples) {
            auto gs = w.ghost(w.add(a, b));
            auto gp = w.ghost(w.mul(a, b));
            auto ga = w.ghost(a), gb = w.ghost(b);
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(gs[i] == base.add(ga[i], gb[i]));
                CHECK(gp[i] == base.mul(ga[i], gb[i]));
            }
        }
}

TEST_CASE("Witt Frobenius is a ring endomorphism on W_2(F_4)") {
    WittRingT<FpAlgebraRing> w(Prime(2), 2, FpAlgebraRing(algebras::f4()));
    CHECK(is_perfect_base(w.base(), Prime(2)));
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            auto a = w.element(i), b = w.element(j);
            CHECK(w.eq(witt_frobenius(w, w.add(a, b)), w.add(witt_frobenius(w, a), witt_frobenius(w, b))));
            CHECK(w.eq(witt_frobenius(w, w.mul(a, b)), w.mul(witt_frobenius(w, a), witt_frobenius(w, b))));
        }
    CHECK(w.eq(witt_frobenius(w, w.one()), w.one()));
}

TEST_CASE("Frobenius lift on a non-perfect base is refused") {
    WittRingT<FpAlgebraRing> w(Prime(2), 2, FpAlgebraRing(algebras::dual_numbers(Prime(2))));
    CHECK_FALSE(is_perfect_base(w.base(), Prime(2)));
    CHECK_THROWS_AS((void)witt_frobenius(w, w.one()), std::domain_error);
}
