#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittstone/condensed.hpp"
#include "wittstone/delta_duality.hpp"
#include "wittstone/fp_algebra.hpp"
#include "wittstone/residue.hpp"
#include "wittstone/tower.hpp"

namespace wittstone::io {

using json = nlohmann::ordered_json;

// ResidueInt <-> {"p": 2, "m": 3, "value": 5}
inline json encode(const ResidueInt& r) {
    return json{{"p", r.prime().value()}, {"m", r.precision()}, {"value", r.value()}};
}

inline ResidueInt decode_residue(const json& j) {
    return ResidueInt(Prime(j.at("p").get<std::uint64_t>()), j.at("m").get<std::uint32_t>(),
                      j.at("value").get<std::uint64_t>());
}

// FiniteFpAlgebra <-> {"p": 2, "dim": 2, "unit": [1,0], "sc": [[[...]]], "labels": [...]}
inline json encode(const FiniteFpAlgebra& a) {
    json j;
    j["p"] = a.prime().value();
    j["dim"] = a.dim();
    j["unit"] = a.unit();
    j["sc"] = a.structure_constants();
    j["labels"] = a.labels();
    return j;
}

inline FiniteFpAlgebra decode_algebra(const json& j) {
    Prime p(j.at("p").get<std::uint64_t>());
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::vector<std::vector<std::uint64_t>>> sc =
        j.at("sc").get<std::vector<std::vector<std::vector<std::uint64_t>>>>();
    std::vector<std::uint64_t> unit = j.at("unit").get<std::vector<std::uint64_t>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (sc.size() != dim) throw std::invalid_argument("algebra JSON: sc size differs from dim");
    return FiniteFpAlgebra(p, dim, labels, sc, unit);
}

// Tower <-> {"depth": 3, "levels": [[labels]], "transitions": [[targets]]}
inline json encode(const Tower& t) {
    json j;
    j["depth"] = t.depth();
    j["levels"] = json::array();
    for (std::size_t n = 0; n <= t.depth(); ++n) j["levels"].push_back(t.level_labels(n));
    j["transitions"] = t.transitions();
    return j;
}

inline Tower decode_tower(const json& j) {
    auto levels = j.at("levels").get<std::vector<std::vector<std::string>>>();
    auto trans = j.at("transitions").get<std::vector<std::vector<std::size_t>>>();
    Tower t(levels, trans);
    if (j.contains("depth") && j.at("depth").get<std::size_t>() != t.depth())
        throw std::invalid_argument("tower JSON: stated depth differs from level count");
    return t;
}

// FunctionRingMap <-> {"source_size": 2, "target_size": 3, "dual": [0,1,0]}
inline json encode(const FunctionRingMap& m) {
    return json{{"source_size", m.source_size}, {"target_size", m.target_size}, {"dual", m.dual}};
}

inline FunctionRingMap decode_function_ring_map(const json& j) {
    FunctionRingMap m;
    m.source_size = j.at("source_size").get<std::size_t>();
    m.target_size = j.at("target_size").get<std::size_t>();
    m.dual = j.at("dual").get<std::vector<std::size_t>>();
    if (m.dual.size() != m.target_size)
        throw std::invalid_argument("map JSON: dual length differs from target_size");
    for (auto d : m.dual)
        if (d >= m.source_size) throw std::invalid_argument("map JSON: dual value out of range");
    return m;
}

// FiniteCover <-> {"target_size": 3, "pieces": [[0,1],[1,2]]}
inline json encode(const FiniteCover& c) {
    return json{{"target_size", c.target_size}, {"pieces", c.piece_maps}};
}

inline FiniteCover decode_cover(const json& j) {
    FiniteCover c;
    c.target_size = j.at("target_size").get<std::size_t>();
    c.piece_maps = j.at("pieces").get<std::vector<std::vector<std::size_t>>>();
    return c;
}

// quotient presentation fixture:
// {"base": <tower>, "pairs": [[[a,b],...] per level]} (pairs listed minimally)
struct QuotientFixture {
    Tower base;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
};

inline json encode(const QuotientFixture& q) {
    json j;
    j["base"] = encode(q.base);
    j["pairs"] = json::array();
    for (const auto& lvl : q.pairs) {
        json row = json::array();
        for (auto [a, b] : lvl) row.push_back(json::array({a, b}));
        j["pairs"].push_back(row);
    }
    return j;
}

inline QuotientFixture decode_quotient_fixture(const json& j) {
    QuotientFixture q{decode_tower(j.at("base")), {}};
    for (const auto& lvl : j.at("pairs")) {
        std::vector<std::pair<std::size_t, std::size_t>> row;
        for (const auto& pr : lvl) row.push_back({pr.at(0).get<std::size_t>(), pr.at(1).get<std::size_t>()});
        q.pairs.push_back(std::move(row));
    }
    if (q.pairs.size() != q.base.depth() + 1)
        throw std::invalid_argument("quotient fixture JSON: need one pair list per level");
    return q;
}

// site JSON:
// {"depth": 2, "working_level": 2,
//  "objects": [<tower>, ...],
//  "morphisms": [{"from": 0, "to": 1, "maps": [[..] per target level]}, ...],
//  "covers": [{"target": 1, "pieces": [morphism indices as listed above]}]}
// Objects get identity morphisms automatically; "pieces" therefore index the
// listed morphisms in order of appearance in the file, and the decoder
// returns that index translation.
struct DecodedSite {
    FiniteSite site;
    std::vector<std::size_t> listed_morphism_ids; // file order -> site morphism id
    std::vector<std::size_t> cover_ids;
};

inline DecodedSite decode_site(const json& j) {
    DecodedSite d{FiniteSite(j.at("depth").get<std::size_t>(), j.at("working_level").get<std::size_t>()),
                  {},
                  {}};
    std::vector<std::size_t> obj_ids;
    for (const auto& oj : j.at("objects")) obj_ids.push_back(d.site.add_object(decode_tower(oj)));
    if (j.contains("morphisms"))
        for (const auto& mj : j.at("morphisms")) {
            std::size_t from = obj_ids.at(mj.at("from").get<std::size_t>());
            std::size_t to = obj_ids.at(mj.at("to").get<std::size_t>());
            auto maps = mj.at("maps").get<std::vector<std::vector<std::size_t>>>();
            d.listed_morphism_ids.push_back(d.site.add_morphism(
                from, to, ProMap::levelwise(d.site.objects()[from], d.site.objects()[to], maps)));
        }
    if (j.contains("covers"))
        for (const auto& cj : j.at("covers")) {
            std::vector<std::size_t> pieces;
            for (const auto& pj : cj.at("pieces"))
                pieces.push_back(d.listed_morphism_ids.at(pj.get<std::size_t>()));
            d.cover_ids.push_back(d.site.add_cover(obj_ids.at(cj.at("target").get<std::size_t>()), pieces));
        }
    return d;
}

// presheaf JSON, one of:
//   {"kind": "representable", "tower": <tower>}
//   {"kind": "discrete", "size": 2}
//   {"kind": "quotient", "base": <tower>, "pairs": [[a,b], ...]}  (pairs at
//    the working level, closed up reflexively/symmetrically by the decoder)
inline ConcretePresheaf decode_presheaf(const json& j, std::size_t working_level) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "representable") return representable_presheaf(decode_tower(j.at("tower")));
    if (kind == "discrete") return condensify_discrete(j.at("size").get<std::size_t>(), working_level);
    if (kind == "quotient") {
        Tower base = decode_tower(j.at("base"));
        std::vector<std::pair<std::size_t, std::size_t>> listed;
        for (const auto& pj : j.at("pairs"))
            listed.push_back({pj.at(0).get<std::size_t>(), pj.at(1).get<std::size_t>()});
        auto closed = close_pairs(base.level_size(working_level), listed);
        return condensify_quotient(base, closed, working_level);
    }
    throw std::invalid_argument("presheaf JSON: unknown kind '" + kind + "'");
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace wittstone::io
