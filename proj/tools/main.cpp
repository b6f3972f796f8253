// wittstone: exact truncated Witt vectors, p-Boolean Stone duality, light
// profinite towers, and the verification battery tying them together.
//
// Subcommands: witt, stone, profinite, duality, flatness, condensed, verify,
// explain. Global flags (also via WITTSTONE_* environment variables):
// --p --precision --depth --seed --max-level-size --out --format json|text.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wittstone/checks.hpp"
#include "wittstone/json_io.hpp"

namespace ws = wittstone;
using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::uint64_t p = 2;
    std::uint32_t precision = 3;
    std::size_t depth = 3;
    std::size_t max_level_size = 3;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "text";
};

json record_json(const ws::checks::CheckRecord& r) {
    json j{{"check", r.check}, {"instance_key", r.instance_key}, {"passed", r.passed}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

json records_json(const std::vector<ws::checks::CheckRecord>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(record_json(r));
    return arr;
}

std::string records_text(const std::vector<ws::checks::CheckRecord>& rs) {
    std::string s;
    for (const auto& r : rs) {
        s += (r.passed ? "PASS " : "FAIL ") + r.check + " [" + r.instance_key + "]";
        if (!r.witness.empty()) s += " -- " + r.witness;
        s += "\n";
    }
    return s;
}

/// Writes the result to --out or stdout. Text format renders "records"
/// arrays as PASS/FAIL lines and everything else as indented JSON.
void emit(const GlobalOpts& g, const json& j, const std::vector<ws::checks::CheckRecord>* records) {
    std::string payload;
    if (g.format == "json" || records == nullptr)
        payload = j.dump(2) + "\n";
    else
        payload = records_text(*records);
    if (g.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(g.out);
        if (!f) throw std::runtime_error("cannot write " + g.out);
        f << payload;
    }
}

bool all_passed(const std::vector<ws::checks::CheckRecord>& rs) {
    for (const auto& r : rs)
        if (!r.passed) return false;
    return true;
}

json poly_json(const ws::IntPolynomial& q) {
    json terms = json::array();
    for (const auto& [e, c] : q.terms()) terms.push_back(json{{"exps", e}, {"coeff", c.str()}});
    return terms;
}

ws::checks::RunConfig to_config(const GlobalOpts& g) {
    ws::checks::RunConfig cfg;
    cfg.p = g.p;
    cfg.precision = g.precision;
    cfg.depth = g.depth;
    cfg.max_level_size = g.max_level_size;
    cfg.seed = g.seed;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Witt vectors, p-Boolean Stone duality, and light profinite towers"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--p", g.p, "prime")->envname("WITTSTONE_P")->check(CLI::PositiveNumber);
    app.add_option("--precision", g.precision, "p-adic precision m")->envname("WITTSTONE_PRECISION");
    app.add_option("--depth", g.depth, "tower depth")->envname("WITTSTONE_DEPTH");
    app.add_option("--max-level-size", g.max_level_size, "bound on enumerated level sizes")
        ->envname("WITTSTONE_MAX_LEVEL_SIZE");
    app.add_option("--seed", g.seed, "sampling seed (mt19937_64)")->envname("WITTSTONE_SEED");
    app.add_option("--out", g.out, "output file (default stdout)")->envname("WITTSTONE_OUT");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("WITTSTONE_FORMAT");

    int rc = 0;
    auto finish = [&](const json& j, const std::vector<ws::checks::CheckRecord>& rs) {
        emit(g, j, &rs);
        if (!all_passed(rs)) rc = 1;
    };

    // ---------------- witt ----------------
    auto* witt = app.add_subcommand("witt", "truncated Witt vector arithmetic");
    witt->require_subcommand(1);
    {
        static std::vector<std::uint64_t> lhs, rhs;
        static std::size_t len = 2;
        static std::string base_path;
        for (const char* name : {"add", "mul"}) {
            auto* sc = witt->add_subcommand(name, std::string("digitwise Witt ") + name);
            sc->add_option("--len", len, "Witt length n");
            sc->add_option("--lhs", lhs, "left digits")->delimiter(',')->required();
            sc->add_option("--rhs", rhs, "right digits")->delimiter(',')->required();
            sc->add_option("--base", base_path, "base algebra JSON (default: the prime field)");
            std::string op = name;
            sc->callback([&, op]() {
                json out;
                if (base_path.empty()) {
                    ws::WittRingT<ws::ZmodRing> w(ws::Prime(g.p), len, ws::ZmodRing(ws::Prime(g.p), 1));
                    if (lhs.size() != len || rhs.size() != len)
                        throw CLI::ValidationError("witt", "need exactly --len digits per operand");
                    auto r = op == "add" ? w.add(lhs, rhs) : w.mul(lhs, rhs);
                    out = json{{"p", g.p}, {"len", len}, {"op", op}, {"result", r}};
                } else {
                    ws::FpAlgebraRing base(ws::io::decode_algebra(ws::io::load_json_file(base_path)));
                    ws::WittRingT<ws::FpAlgebraRing> w(ws::Prime(g.p), len, base);
                    ws::WittRingT<ws::FpAlgebraRing>::Elem a, b;
                    if (lhs.size() != len || rhs.size() != len)
                        throw CLI::ValidationError("witt", "need exactly --len digits per operand");
                    for (auto v : lhs) a.push_back(base.element(v));
                    for (auto v : rhs) b.push_back(base.element(v));
                    auto r = op == "add" ? w.add(a, b) : w.mul(a, b);
                    std::vector<std::size_t> digits;
                    for (const auto& d : r) digits.push_back(base.index_of(d));
                    out = json{{"p", g.p}, {"len", len}, {"op", op}, {"result", digits},
                               {"digit_encoding", "element index in the base algebra"}};
                }
                emit(g, out, nullptr);
            });
        }
        static std::size_t plen = 2;
        auto* polys = witt->add_subcommand("polys", "emit the universal sum/product/negation polynomials");
        polys->add_option("--len", plen, "Witt length n");
        polys->callback([&]() {
            const ws::WittPolySet& wsps = ws::WittPolySet::get(ws::Prime(g.p), plen);
            json out{{"p", g.p}, {"len", plen}, {"variables", wsps.variables()}};
            json s = json::array(), pr = json::array(), ng = json::array();
            for (std::size_t i = 0; i < plen; ++i) {
                s.push_back(poly_json(wsps.sums()[i]));
                pr.push_back(poly_json(wsps.products()[i]));
                ng.push_back(poly_json(wsps.negations()[i]));
            }
            out["sums"] = s;
            out["products"] = pr;
            out["negations"] = ng;
            emit(g, out, nullptr);
        });
        static std::string carrier = "zmod";
        auto* cd = witt->add_subcommand("check-delta", "verify the delta axioms on a carrier, exhaustively");
        cd->add_option("--carrier", carrier, "zmod | witt-f4")->check(CLI::IsMember({"zmod", "witt-f4"}));
        cd->callback([&]() {
            std::vector<ws::checks::CheckRecord> rs;
            if (carrier == "zmod") {
                ws::ZmodCarrier c(ws::Prime(g.p), g.precision);
                std::function<ws::ZmodRing::Elem(const ws::ZmodRing::Elem&)> delta =
                    [&](const ws::ZmodRing::Elem& x) {
                        return ws::delta_from_lift(c, [](const ws::ZmodRing::Elem& y) { return y; }, x);
                    };
                auto rep = ws::check_delta_axioms(c, delta);
                rs.push_back({"delta.axioms", "carrier=zmod;p=" + std::to_string(g.p) +
                                                   ";m=" + std::to_string(g.precision),
                              rep.passed, rep.witness});
            } else {
                ws::WittCarrier<ws::FpAlgebraRing> c(ws::Prime(2), g.precision,
                                                     ws::FpAlgebraRing(ws::algebras::f4()));
                std::function<ws::WittRingT<ws::FpAlgebraRing>::Elem(
                    const ws::WittRingT<ws::FpAlgebraRing>::Elem&)>
                    delta = [&](const auto& x) {
                        return ws::delta_from_lift(
                            c, [&](const auto& y) { return ws::witt_frobenius(c.ring(), y); }, x);
                    };
                auto rep = ws::check_delta_axioms(c, delta);
                rs.push_back({"delta.axioms", "carrier=witt-f4;n=" + std::to_string(g.precision),
                              rep.passed, rep.witness});
            }
            finish(records_json(rs), rs);
        });
    }

    // ---------------- stone ----------------
    auto* stone = app.add_subcommand("stone", "p-Boolean algebras and their finite Stone duals");
    stone->require_subcommand(1);
    {
        static std::size_t set_size = 2;
        auto* dual = stone->add_subcommand("dual", "function algebra of a finite set");
        dual->add_option("--set-size", set_size, "number of points")->required();
        dual->callback([&]() {
            ws::PBooleanAlgebra a = ws::stone_dual_of_set(set_size, ws::Prime(g.p));
            emit(g, ws::io::encode(a.algebra()), nullptr);
        });
        static std::string alg_path;
        auto* spec = stone->add_subcommand("spec", "enumerate the characters of an algebra");
        spec->add_option("--algebra", alg_path, "algebra JSON")->required();
        spec->callback([&]() {
            ws::FiniteFpAlgebra a = ws::io::decode_algebra(ws::io::load_json_file(alg_path));
            ws::FiniteStoneDual d = ws::spec_chars(a);
            json out{{"dim", a.dim()}, {"p", a.prime().value()}, {"characters", d.points},
                     {"p_boolean", ws::PBooleanAlgebra::is_p_boolean(a)}};
            emit(g, out, nullptr);
        });
        static std::string perf_path;
        auto* perf = stone->add_subcommand("perfection", "eventual Frobenius image with the unit map");
        perf->add_option("--algebra", perf_path, "algebra JSON")->required();
        perf->callback([&]() {
            ws::FiniteFpAlgebra a = ws::io::decode_algebra(ws::io::load_json_file(perf_path));
            ws::Coperfection c = ws::coperfection(a);
            json out{{"image", ws::io::encode(c.image.algebra)},
                     {"image_basis", c.image.basis},
                     {"unit_map", c.unit_map},
                     {"perfect", ws::is_perfect_algebra(c.image.algebra)}};
            emit(g, out, nullptr);
        });
    }

    // ---------------- profinite ----------------
    auto* prof = app.add_subcommand("profinite", "towers of finite sets");
    prof->require_subcommand(1);
    {
        static std::string tower_path;
        auto* chk = prof->add_subcommand("check", "transition surjectivity with lifting witnesses");
        chk->add_option("--tower", tower_path, "tower JSON")->required();
        chk->callback([&]() {
            ws::Tower t = ws::io::decode_tower(ws::io::load_json_file(tower_path));
            std::vector<ws::LiftWitness> wits;
            bool ok = ws::check_sequential_surjectivity(t, &wits);
            json out{{"transitions_surjective", ok}};
            json warr = json::array();
            for (const auto& w : wits)
                warr.push_back(json{{"level", w.level}, {"point", w.point}, {"chain", w.chain}});
            out["witnesses"] = warr;
            std::vector<ws::checks::CheckRecord> rs{
                {"profinite.replete", "tower=" + tower_path, ok, ok ? "" : "a transition is not surjective"}};
            if (g.format == "json") emit(g, out, nullptr);
            else emit(g, out, &rs);
            if (!ok) rc = 1;
        });
        static std::string fix_path;
        static std::size_t qlevel = 1;
        auto* quot = prof->add_subcommand("quotient", "level quotient of a presented relation fixture");
        quot->add_option("--fixture", fix_path, "quotient fixture JSON")->required();
        quot->add_option("--level", qlevel, "level n");
        quot->callback([&]() {
            ws::io::QuotientFixture f = ws::io::decode_quotient_fixture(ws::io::load_json_file(fix_path));
            auto closed = ws::close_pairs(f.base.level_size(qlevel), f.pairs.at(qlevel));
            ws::LevelQuotient q = ws::level_quotient(f.base.level_size(qlevel), closed);
            json out{{"level", qlevel}, {"classes", q.class_count}, {"class_of", q.class_of}};
            if (qlevel >= 1) {
                auto lo_closed = ws::close_pairs(f.base.level_size(qlevel - 1), f.pairs.at(qlevel - 1));
                ws::LevelQuotient lo = ws::level_quotient(f.base.level_size(qlevel - 1), lo_closed);
                auto tr = ws::quotient_transition(f.base, lo, q, qlevel - 1);
                out["transition_defined"] = tr.has_value();
                if (tr) out["transition"] = *tr;
            }
            emit(g, out, nullptr);
        });
    }

    // ---------------- duality ----------------
    auto* dual = app.add_subcommand("duality", "point/function-ring duality checks");
    dual->require_subcommand(1);
    {
        auto* rt = dual->add_subcommand("roundtrip", "recover tower levels from function-ring characters");
        rt->callback([&]() {
            std::vector<ws::checks::CheckRecord> rs;
            ws::checks::check_duality_roundtrip(to_config(g), rs);
            finish(records_json(rs), rs);
        });
        static std::string tower_path;
        static std::size_t level = 0;
        auto* wc = dual->add_subcommand("witt-cont", "Witt vectors of mod-p functions vs p-adic functions");
        wc->add_option("--tower", tower_path, "tower JSON")->required();
        wc->add_option("--level", level, "tower level n");
        wc->callback([&]() {
            ws::Tower t = ws::io::decode_tower(ws::io::load_json_file(tower_path));
            ws::WittContIso iso(ws::Prime(g.p), t.level_size(level), g.precision);
            ws::IsoReport rep = ws::verify_witt_cont_iso(iso, 10000);
            std::vector<ws::checks::CheckRecord> rs{
                {"duality.witt-cont",
                 "size=" + std::to_string(t.level_size(level)) + ";p=" + std::to_string(g.p) +
                     ";m=" + std::to_string(g.precision),
                 rep.passed(), rep.witness}};
            finish(records_json(rs), rs);
        });
    }

    // ---------------- flatness ----------------
    auto* flat = app.add_subcommand("flatness", "faithful flatness of function-ring maps");
    flat->require_subcommand(1);
    {
        static std::string map_path;
        auto* chk = flat->add_subcommand("check", "decide faithful flatness of a map given by its dual");
        chk->add_option("--map", map_path, "function-ring map JSON")->required();
        chk->callback([&]() {
            ws::FunctionRingMap m = ws::io::decode_function_ring_map(ws::io::load_json_file(map_path));
            ws::FFReport ff = ws::ff_check(ws::Prime(g.p), m);
            ws::PCompleteFFReport pc = ws::p_complete_ff_check(ws::Prime(g.p), m);
            std::vector<ws::checks::CheckRecord> rs{
                {"flatness.correspondence",
                 "s=" + std::to_string(m.source_size) + ";t=" + std::to_string(m.target_size),
                 ff.faithfully_flat && pc.faithfully_flat, ff.witness}};
            json out{{"faithfully_flat", ff.faithfully_flat},
                     {"injective", ff.injective},
                     {"dual_surjective", ff.dual_surjective},
                     {"p_complete_faithfully_flat", pc.faithfully_flat},
                     {"records", records_json(rs)}};
            emit(g, out, &rs);
            if (!ff.faithfully_flat) rc = 1;
        });
    }

    // ---------------- condensed ----------------
    auto* cond = app.add_subcommand("condensed", "sheaves on a finite site of towers");
    cond->require_subcommand(1);
    {
        static std::string site_path, presheaf_path;
        auto* sc = cond->add_subcommand("sheaf-check", "equalizer sheaf condition on every cover");
        sc->add_option("--site", site_path, "site JSON")->required();
        sc->add_option("--presheaf", presheaf_path, "presheaf JSON")->required();
        sc->callback([&]() {
            ws::io::DecodedSite d = ws::io::decode_site(ws::io::load_json_file(site_path));
            ws::ConcretePresheaf x =
                ws::io::decode_presheaf(ws::io::load_json_file(presheaf_path), d.site.working_level());
            ws::PresheafApprox tab = ws::tabulate_presheaf(d.site, x);
            std::vector<ws::checks::CheckRecord> rs;
            auto fun = ws::check_presheaf_functoriality(d.site, tab);
            rs.push_back({"condensed.functoriality", "presheaf=" + presheaf_path, fun.passed, fun.witness});
            for (std::size_t c = 0; c < d.site.covers().size(); ++c) {
                auto rep = ws::sheaf_check(d.site, tab, c);
                rs.push_back({"condensed.sheaf", "cover=" + std::to_string(c), rep.passed, rep.witness});
            }
            finish(records_json(rs), rs);
        });
        static std::string btower_path;
        static std::size_t blevel = SIZE_MAX;
        auto* bt = cond->add_subcommand("betti", "maps from dual sets vs ring maps of function rings");
        bt->add_option("--tower", btower_path, "tower JSON for K")->required();
        bt->add_option("--level", blevel, "level of K (default: its depth)");
        bt->callback([&]() {
            ws::Tower k = ws::io::decode_tower(ws::io::load_json_file(btower_path));
            std::size_t lvl = blevel == SIZE_MAX ? k.depth() : blevel;
            std::vector<ws::checks::CheckRecord> rs;
            for (std::size_t s = 1; s <= g.max_level_size; ++s) {
                ws::StoneDeltaApprox a(s, ws::Prime(g.p), g.precision);
                auto rep = ws::betti_delta_check(k, lvl, a);
                rs.push_back({"condensed.betti",
                              "level=" + std::to_string(lvl) + ";dual-size=" + std::to_string(s) +
                                  ";p=" + std::to_string(g.p) + ";m=" + std::to_string(g.precision),
                              rep.passed, rep.witness});
            }
            finish(records_json(rs), rs);
        });
    }

    // ---------------- verify ----------------
    auto* verify = app.add_subcommand("verify", "run the full verification battery");
    verify->callback([&]() {
        ws::checks::Report rep = ws::checks::run_suite(to_config(g));
        emit(g, ws::checks::report_to_json(rep), &rep.records);
        if (!rep.all_passed()) rc = 1;
    });

    // ---------------- explain ----------------
    auto* expl = app.add_subcommand("explain", "describe a check id");
    {
        static std::string id;
        static bool list = false;
        expl->add_option("id", id, "check id (as reported by verify)");
        expl->add_flag("--list", list, "list all check ids");
        expl->callback([&]() {
            if (list) {
                for (const auto& [k, v] : ws::checks::explain_table()) std::cout << k << "\n";
                return;
            }
            if (id.empty()) throw CLI::ValidationError("explain", "need a check id or --list");
            std::cout << ws::checks::explain(id) << "\n";
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
