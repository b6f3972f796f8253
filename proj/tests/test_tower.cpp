#include "doctest.h"

#include <set>

#include "wittstone/condensed.hpp"
#include "wittstone/tower.hpp"

using namespace wittstone;

TEST_CASE("canonical towers have the expected level sizes and surjective transitions") {
    Tower nt = canonical_ntilde(4);
    Tower ct = canonical_cantor(4);
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(nt.level_size(n) == n + 1); // {1..n} plus the extra limit point
        CHECK(ct.level_size(n) == (std::size_t(1) << n));
    }
    CHECK(nt.transitions_surjective());
    CHECK(ct.transitions_surjective());
}

TEST_CASE("lift witnesses form genuine compatible chains") {
    Tower t = canonical_ntilde(5);
    std::vector<LiftWitness> ws;
    REQUIRE(check_sequential_surjectivity(t, &ws));
    std::size_t expected = 0;
    for (std::size_t n = 0; n <= 5; ++n) expected += t.level_size(n);
    CHECK(ws.size() == expected);
    for (const auto& w : ws) {
        REQUIRE(w.chain.size() == 5 - w.level + 1);
        CHECK(w.chain[0] == w.point);
        for (std::size_t i = 0; i + 1 < w.chain.size(); ++i)
            CHECK(t.transition(w.level + i, w.chain[i + 1]) == w.chain[i]);
    }
}

TEST_CASE("level maps must commute with transitions to form a morphism") {
    Tower nt = canonical_ntilde(2);
    Tower d2 = Tower::discrete(2, 2);
    // parity of the index does not commute with the transition of the tower
    std::vector<std::vector<std::size_t>> bad(3);
    for (std::size_t n = 0; n <= 2; ++n)
        for (std::size_t i = 0; i < nt.level_size(n); ++i) bad[n].push_back(i % 2);
    CHECK_THROWS_AS(ProMap::levelwise(nt, d2, bad), std::invalid_argument);
    // a constant map always does
    std::vector<std::vector<std::size_t>> good(3);
    for (std::size_t n = 0; n <= 2; ++n) good[n].assign(nt.level_size(n), 0);
    CHECK_NOTHROW(ProMap::levelwise(nt, d2, good));
}

TEST_CASE("products and fiber products match brute-force pair enumeration") {
    Tower a = Tower::discrete(2, 2);
    Tower b = canonical_ntilde(2);
    TowerProduct pr = tower_product(a, b);
    for (std::size_t n = 0; n <= 2; ++n)
        CHECK(pr.product.level_size(n) == a.level_size(n) * b.level_size(n));

    // fiber product of (identity: d2 -> d2) with (constant 0: ntilde -> d2)
    Tower d2 = Tower::discrete(2, 2);
    std::vector<std::vector<std::size_t>> idm(3, {0, 1});
    std::vector<std::vector<std::size_t>> cm(3);
    for (std::size_t n = 0; n <= 2; ++n) cm[n].assign(b.level_size(n), 0);
    ProMap f = ProMap::levelwise(d2, d2, idm);
    ProMap g = ProMap::levelwise(b, d2, cm);
    TowerFiberProduct fp = tower_fiber_product(f, g);
    for (std::size_t n = 0; n <= 2; ++n) {
        std::set<std::pair<std::size_t, std::size_t>> expect;
        for (std::size_t x = 0; x < d2.level_size(n); ++x)
            for (std::size_t y = 0; y < b.level_size(n); ++y)
                if (idm[n][x] == cm[n][y]) expect.insert({x, y});
        std::set<std::pair<std::size_t, std::size_t>> got(fp.pairs[n].begin(), fp.pairs[n].end());
        CHECK(got == expect);
    }
}

TEST_CASE("pair closure yields equivalence relations and canonical quotients") {
    // close_pairs adds the diagonal and the flips; the listed pairs must
    // already generate a transitive relation
    auto closed = close_pairs(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(pairs_are_equivalence(4, closed));
    LevelQuotient q = level_quotient(4, closed);
    CHECK(q.class_count == 2);
    CHECK(q.class_of[0] == q.class_of[1]);
    CHECK(q.class_of[1] == q.class_of[2]);
    CHECK(q.class_of[3] != q.class_of[0]);
}

TEST_CASE("quotient transitions exist only for transition-compatible relations") {
    Tower ct = canonical_cantor(2);
    // same-first-bit relation at every level is compatible with dropping the
    // high bit, so the quotient transition exists
    auto rel = [&](std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> ps;
        for (std::size_t i = 0; i < ct.level_size(n); ++i)
            for (std::size_t j = 0; j < ct.level_size(n); ++j)
                if ((i & 1) == (j & 1)) ps.push_back({i, j});
        return ps;
    };
    LevelQuotient lo = level_quotient(ct.level_size(1), close_pairs(ct.level_size(1), rel(1)));
    LevelQuotient hi = level_quotient(ct.level_size(2), close_pairs(ct.level_size(2), rel(2)));
    CHECK(quotient_transition(ct, lo, hi, 1).has_value());

    // the depth-2 dyadic relation glues 01 ~ 10 but not their images, so no
    // transition is induced
    auto dy = dyadic_interval_pairs(2);
    LevelQuotient dlo = level_quotient(ct.level_size(1), close_pairs(ct.level_size(1), dy[1]));
    LevelQuotient dhi = level_quotient(ct.level_size(2), close_pairs(ct.level_size(2), dy[2]));
    CHECK(dhi.class_count == 3);
    CHECK_FALSE(quotient_transition(ct, dlo, dhi, 1).has_value());
}

TEST_CASE("tower homs into a constant discrete tower are level-0 maps") {
    Tower u = canonical_cantor(2);
    Tower k = Tower::discrete(3, 2);
    // h_{n+1} = h_n after the transition, so a hom is determined by its
    // level-0 component: 3^1 = 3 homs
    CHECK(enumerate_tower_homs(u, k).size() == 3);
    CHECK(enumerate_tower_homs(Tower::discrete(2, 2), k).size() == 9);
}
