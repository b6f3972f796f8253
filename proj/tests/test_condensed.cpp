#include "doctest.h"

#include "wittstone/condensed.hpp"
#include "wittstone/delta_duality.hpp"

using namespace wittstone;

namespace {

// A small site: point, two-point set, three-point set, with the three-point
// set covered by two overlapping two-point pieces.
struct SmallSite {
    FiniteSite site{2, 2};
    std::size_t pt, d2, d3;
    std::size_t incl01, incl12;
    std::size_t cover;
};

SmallSite make_small_site() {
    SmallSite s;
    s.pt = s.site.add_object(Tower::point(2));
    s.d2 = s.site.add_object(Tower::discrete(2, 2));
    s.d3 = s.site.add_object(Tower::discrete(3, 2));
    const Tower& d2 = s.site.objects()[s.d2];
    const Tower& d3 = s.site.objects()[s.d3];
    std::vector<std::vector<std::size_t>> m01(3, {0, 1}), m12(3, {1, 2});
    s.incl01 = s.site.add_morphism(s.d2, s.d3, ProMap::levelwise(d2, d3, m01));
    s.incl12 = s.site.add_morphism(s.d2, s.d3, ProMap::levelwise(d2, d3, m12));
    s.cover = s.site.add_cover(s.d3, {s.incl01, s.incl12});
    return s;
}

} // namespace

TEST_CASE("covers must be jointly surjective at every level") {
    FiniteSite site(1, 1);
    std::size_t d2 = site.add_object(Tower::discrete(2, 1));
    std::size_t d3 = site.add_object(Tower::discrete(3, 1));
    std::vector<std::vector<std::size_t>> m01(2, {0, 1});
    std::size_t f = site.add_morphism(d2, d3,
                                      ProMap::levelwise(site.objects()[d2], site.objects()[d3], m01));
    CHECK_THROWS_AS(site.add_cover(d3, {f}), std::invalid_argument);
}

TEST_CASE("representables and discrete condensifications are sheaves on the small site") {
    SmallSite s = make_small_site();
    for (const ConcretePresheaf& x :
         {representable_presheaf(Tower::discrete(2, 2)), condensify_discrete(2, 2),
          condensify_discrete(3, 2)}) {
        PresheafApprox tab = tabulate_presheaf(s.site, x);
        CHECK(check_presheaf_functoriality(s.site, tab).passed);
        CHECK(sheaf_check(s.site, tab, s.cover).passed);
    }
}

TEST_CASE("breaking one restriction entry is caught by functoriality or gluing") {
    SmallSite s = make_small_site();
    PresheafApprox tab = tabulate_presheaf(s.site, condensify_discrete(2, 2));
    REQUIRE(tab.restriction[s.incl01].size() >= 3);
    std::swap(tab.restriction[s.incl01][0], tab.restriction[s.incl01][2]);
    bool caught = !check_presheaf_functoriality(s.site, tab).passed ||
                  !sheaf_check(s.site, tab, s.cover).passed;
    CHECK(caught);
}

TEST_CASE("sections of a discrete condensification count maps from the working level") {
    ConcretePresheaf x = condensify_discrete(3, 2);
    CHECK(x.count(Tower::point(2)) == 3);
    CHECK(x.count(Tower::discrete(2, 2)) == 9);
    CHECK(x.count(canonical_cantor(2)) == 81); // 3^4
}

TEST_CASE("quasiseparatedness fails exactly for transition-incompatible relations") {
    Tower ct = canonical_cantor(2);
    std::vector<std::vector<std::size_t>> idm(3);
    for (std::size_t n = 0; n <= 2; ++n)
        for (std::size_t i = 0; i < ct.level_size(n); ++i) idm[n].push_back(i);

    // diagonal relation: always quasiseparated
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> diag(3);
    for (std::size_t n = 0; n <= 2; ++n)
        diag[n] = close_pairs(ct.level_size(n), {});
    CHECK(qs_check_presented(ct, ct, ct, diag, idm, idm).passed);

    // dyadic endpoint identifications do not descend along transitions
    auto dy = dyadic_interval_pairs(2);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> dyc(3);
    for (std::size_t n = 0; n <= 2; ++n) dyc[n] = close_pairs(ct.level_size(n), dy[n]);
    CHECK_FALSE(qs_check_presented(ct, ct, ct, dyc, idm, idm).passed);
}

TEST_CASE("coequalizer of a presented quotient agrees with the map-space quotient") {
    auto dy = dyadic_interval_pairs(2);
    for (std::size_t u = 1; u <= 3; ++u) {
        CoeqReport rep = coequalizer_check(u, 4, close_pairs(4, dy[2]));
        CHECK(rep.passed);
        CHECK(rep.coeq_classes == rep.quotient_maps);
        // 3 dyadic classes at level 2, so 3^u maps from a u-point set
        std::size_t expect = 1;
        for (std::size_t i = 0; i < u; ++i) expect *= 3;
        CHECK(rep.quotient_maps == expect);
    }
}

TEST_CASE("pushing a condensed set through point recovery counts tower homs") {
    StoneDeltaApprox a(2, Prime(2), 2);
    ConcretePresheaf x = representable_presheaf(Tower::discrete(2, 2));
    PsiPushforward pp = psi_pushforward(x, a, 2);
    CHECK(pp.dual_tower.level_size(0) == 2);
    CHECK(pp.value_count == enumerate_tower_homs(pp.dual_tower, Tower::discrete(2, 2)).size());
}

TEST_CASE("maps of dual sets biject with ring maps of p-adic function rings") {
    for (const Tower& k : {Tower::point(2), Tower::discrete(2, 2), canonical_ntilde(2)}) {
        StoneDeltaApprox a(2, Prime(2), 2);
        BettiReport rep = betti_delta_check(k, 2, a, 4096);
        CHECK(rep.passed);
        CHECK(rep.lhs_count == rep.rhs_count);
        std::size_t expect = 1; // |K_2|^2 set maps dual(A) -> K_2
        for (std::size_t i = 0; i < 2; ++i) expect *= k.level_size(2);
        CHECK(rep.lhs_count == expect);
    }
}
