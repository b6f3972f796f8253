#include "doctest.h"

#include "wittstone/delta_duality.hpp"
#include "wittstone/fp_algebra.hpp"

using namespace wittstone;

TEST_CASE("delta from the identity lift on Z/p^m matches the closed formula") {
    // delta(x) = (x - x^p)/p, computed at one precision lower.
    for (std::uint64_t pv : {2ull, 3ull}) {
        std::uint32_t m = 3;
        ZmodCarrier c(Prime(pv), m);
        std::uint64_t mod = c.ring().modulus();
        for (std::uint64_t x = 0; x < mod; ++x) {
            std::uint64_t xp = x;
            for (std::uint64_t e = 1; e < pv; ++e) xp = xp * x % mod;
            std::uint64_t diff = (x + mod - xp) % mod;
            REQUIRE(diff % pv == 0);
            auto d = delta_from_lift(
                c, [](const ZmodRing::Elem& y) { return y; }, x);
            CHECK(d == diff / pv % (mod / pv));
        }
    }
}

TEST_CASE("delta axioms hold for honest lifts and fail for a tampered delta") {
    ZmodCarrier c(Prime(2), 3);
    std::function<ZmodRing::Elem(const ZmodRing::Elem&)> good =
        [&](const ZmodRing::Elem& x) {
            return delta_from_lift(c, [](const ZmodRing::Elem& y) { return y; }, x);
        };
    CHECK(check_delta_axioms(c, good).passed);

    std::function<ZmodRing::Elem(const ZmodRing::Elem&)> bad =
        [&](const ZmodRing::Elem& x) { return (good(x) + 1) % 4; };
    auto rep = check_delta_axioms(c, bad);
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("Teichmuller lifts are the roots of x^p = x") {
    for (std::uint64_t pv : {2ull, 3ull, 5ull}) {
        for (std::uint32_t m = 1; m <= 3; ++m) {
            std::uint64_t mod = pow_u64(pv, m);
            for (std::uint64_t a = 0; a < pv; ++a) {
                std::uint64_t t = teichmuller_lift(a, Prime(pv), m);
                CHECK(t % pv == a);
                std::uint64_t tp = 1;
                for (std::uint64_t e = 0; e < pv; ++e) tp = tp * t % mod;
                CHECK(tp == t);
            }
        }
    }
}

TEST_CASE("Witt vectors of mod-p functions match p-adic functions exactly") {
    WittContIso iso(Prime(3), 2, 2);
    IsoReport rep = verify_witt_cont_iso(iso, 1 << 20);
    CHECK(rep.bijective);
    CHECK(rep.additive);
    CHECK(rep.multiplicative);
    CHECK(rep.unital);
    CHECK(rep.passed());
}

TEST_CASE("point recovery from characters inverts the function-ring construction") {
    Tower t = canonical_ntilde(3);
    for (std::size_t lvl = 0; lvl <= 3; ++lvl) {
        StoneDeltaApprox a = phi_functor(t, lvl, Prime(2), 2);
        PsiResult r = psi_functor(a);
        CHECK(r.dual.points.size() == t.level_size(lvl));
        std::vector<bool> hit(t.level_size(lvl), false);
        for (auto pt : r.point_of_char) {
            CHECK_FALSE(hit[pt]);
            hit[pt] = true;
        }
    }
}

TEST_CASE("delta invariants of W_2(F_4) form Z/4 and reduce to the fixed field") {
    using WR = WittRingT<FpAlgebraRing>;
    WR w(Prime(2), 2, FpAlgebraRing(algebras::f4()));
    std::function<WR::Elem(const WR::Elem&)> phi = [&](const WR::Elem& x) {
        return witt_frobenius(w, x);
    };
    SubringView<WR> inv = delta_invariants(w, phi);
    CHECK(inv.size() == 4);
    // the invariants are cyclic of order 4, i.e. a copy of W_2(F_2)
    auto x = inv.one();
    std::size_t order = 1;
    while (!inv.eq(x, inv.zero())) {
        x = inv.add(x, inv.one());
        ++order;
        REQUIRE(order <= 8);
    }
    CHECK(order == 4);
    // mod-p reduction of the invariants has the size of Frob-invariants of F_4
    CHECK(mod_p_reduction(inv, 2).size() == 2);
}

TEST_CASE("faithful flatness is equivalent to surjectivity of the dual map") {
    // dual T -> S surjective <=> Cont(S) -> Cont(T) faithfully flat
    FunctionRingMap onto{2, 3, {0, 1, 0}};
    FFReport good = ff_check(Prime(2), onto);
    CHECK(good.faithfully_flat);
    CHECK(good.injective);
    CHECK(good.dual_surjective);
    CHECK(p_complete_ff_check(Prime(2), onto).faithfully_flat);

    FunctionRingMap misses{2, 1, {0}};
    FFReport bad = ff_check(Prime(2), misses);
    CHECK_FALSE(bad.faithfully_flat);
    CHECK_FALSE(bad.injective);
    CHECK_FALSE(p_complete_ff_check(Prime(2), misses).faithfully_flat);
}

TEST_CASE("covers of finite sets translate to faithfully flat ring maps and back") {
    FiniteCover cover{3, {{0, 1}, {1, 2}}};
    SiteTranslation st = site_translate(Prime(2), 2, cover);
    CHECK(st.is_cover);
    CHECK(st.ff.faithfully_flat);
    CHECK(st.round_trip_ok);

    FiniteCover gap{3, {{0, 1}}};
    SiteTranslation bad = site_translate(Prime(2), 2, gap);
    CHECK_FALSE(bad.is_cover);
    CHECK_FALSE(bad.ff.faithfully_flat);
}

TEST_CASE("ring and delta-ring map enumeration agree with hand counts") {
    // unital ring maps Z/4 -> Z/4: only the identity
    ZmodRing z4(Prime(2), 2);
    CHECK(enumerate_ring_maps(z4, z4).size() == 1);
    // delta-ring maps with the canonical deltas: still just the identity
    std::function<ZmodRing::Elem(const ZmodRing::Elem&)> id =
        [](const ZmodRing::Elem& x) { return x; };
    CHECK(enumerate_delta_maps(z4, id, z4, id).size() == 1);
}
