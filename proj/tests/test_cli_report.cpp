#include "doctest.h"

#include "wittstone/checks.hpp"
#include "wittstone/json_io.hpp"

using namespace wittstone;
using json = nlohmann::ordered_json;

TEST_CASE("report serialization is byte-identical across repeated runs") {
    checks::RunConfig cfg;
    cfg.depth = 2;
    cfg.max_level_size = 2;
    cfg.precision = 2;
    std::vector<checks::CheckRecord> r1, r2;
    checks::check_duality_roundtrip(cfg, r1);
    checks::check_duality_roundtrip(cfg, r2);
    checks::Report a{checks::kToolVersion, cfg, r1};
    checks::Report b{checks::kToolVersion, cfg, r2};
    CHECK(checks::report_to_json(a).dump(2) == checks::report_to_json(b).dump(2));
    CHECK(a.all_passed());
}

TEST_CASE("report JSON exposes config and one record per instance") {
    checks::RunConfig cfg;
    std::vector<checks::CheckRecord> rs{{"witt.ring-axioms", "p=2;n=2", true, ""},
                                        {"delta.axioms", "p=2;m=3", false, "broken"}};
    json j = checks::report_to_json(checks::Report{checks::kToolVersion, cfg, rs});
    CHECK(j.at("tool") == "wittstone");
    CHECK(j.at("config").at("p") == cfg.p);
    REQUIRE(j.at("records").size() == 2);
    CHECK(j.at("records")[1].at("passed") == false);
    CHECK(j.at("records")[1].at("witness") == "broken");
    CHECK_FALSE(j.at("records")[0].contains("witness"));
}

TEST_CASE("every check id that can appear in a report has an explanation") {
    checks::RunConfig cfg;
    cfg.depth = 2;
    cfg.max_level_size = 2;
    cfg.precision = 2;
    checks::Report rep = checks::run_suite(cfg);
    CHECK(rep.all_passed());
    for (const auto& r : rep.records) CHECK_FALSE(checks::explain(r.check).empty());
    CHECK_THROWS_AS((void)checks::explain("no.such.check"), std::invalid_argument);
}

TEST_CASE("JSON round trips preserve towers, algebras, maps, and covers") {
    Tower t = canonical_ntilde(3);
    Tower t2 = io::decode_tower(io::encode(t));
    CHECK(t2.depth() == 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(t2.level_labels(n) == t.level_labels(n));
        for (std::size_t i = 0; n < 3 && i < t.level_size(n + 1); ++i)
            CHECK(t2.transition(n, i) == t.transition(n, i));
    }

    FiniteFpAlgebra a = algebras::f9();
    FiniteFpAlgebra a2 = io::decode_algebra(io::encode(a));
    CHECK(a2.dim() == a.dim());
    CHECK(a2.structure_constants() == a.structure_constants());
    CHECK(a2.unit() == a.unit());

    FunctionRingMap m{2, 3, {0, 1, 1}};
    FunctionRingMap m2 = io::decode_function_ring_map(io::encode(m));
    CHECK(m2.dual == m.dual);

    FiniteCover c{3, {{0, 1}, {1, 2}}};
    FiniteCover c2 = io::decode_cover(io::encode(c));
    CHECK(c2.piece_maps == c.piece_maps);

    io::QuotientFixture q{canonical_cantor(2), dyadic_interval_pairs(2)};
    io::QuotientFixture q2 = io::decode_quotient_fixture(io::encode(q));
    CHECK(q2.pairs == q.pairs);
}

TEST_CASE("decoded sites replay identities, fiber products, and covers") {
    json site_json;
    site_json["depth"] = 1;
    site_json["working_level"] = 1;
    site_json["objects"] = json::array({io::encode(Tower::discrete(2, 1)), io::encode(Tower::discrete(3, 1))});
    site_json["morphisms"] = json::array();
    site_json["morphisms"].push_back(
        json{{"from", 0}, {"to", 1}, {"maps", json::array({json::array({0, 1}), json::array({0, 1})})}});
    site_json["morphisms"].push_back(
        json{{"from", 0}, {"to", 1}, {"maps", json::array({json::array({1, 2}), json::array({1, 2})})}});
    site_json["covers"] = json::array({json{{"target", 1}, {"pieces", json::array({0, 1})}}});

    io::DecodedSite d = io::decode_site(site_json);
    CHECK(d.site.covers().size() == 1);
    CHECK(d.listed_morphism_ids.size() == 2);
    // 2 listed objects + 4 pairwise fiber products
    CHECK(d.site.objects().size() == 6);

    PresheafApprox tab = tabulate_presheaf(d.site, io::decode_presheaf(json{{"kind", "discrete"}, {"size", 2}},
                                                                       d.site.working_level()));
    CHECK(check_presheaf_functoriality(d.site, tab).passed);
    CHECK(sheaf_check(d.site, tab, d.cover_ids[0]).passed);

    json bad{{"kind", "mystery"}};
    CHECK_THROWS_AS((void)io::decode_presheaf(bad, 1), std::invalid_argument);
}
