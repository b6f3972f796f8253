#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittstone/boolean_stone.hpp"
#include "wittstone/condensed.hpp"
#include "wittstone/delta_duality.hpp"
#include "wittstone/json_io.hpp"
#include "wittstone/tower.hpp"
#include "wittstone/witt.hpp"

namespace wittstone::checks {

constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    std::uint64_t p = 2;
    std::uint32_t precision = 3;
    std::size_t depth = 3;
    std::size_t max_level_size = 3;
    std::uint64_t seed = 0;
    bool include_mutations = true;
};

struct CheckRecord {
    std::string check;
    std::string instance_key;
    bool passed = true;
    std::string witness;
};

struct Report {
    std::string version = kToolVersion;
    RunConfig config;
    std::vector<CheckRecord> records;

    bool all_passed() const {
        for (const auto& r : records)
            if (!r.passed) return false;
        return true;
    }
};

/// Deterministic sampler: mt19937_64 (a fully specified generator) with
/// modulo reduction. Reduction bias is irrelevant here; only reproducibility
/// across platforms matters.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}
    std::size_t below(std::size_t n) { return n ? (std::size_t)(eng_() % n) : 0; }

private:
    std::mt19937_64 eng_;
};

namespace detail {

inline std::string key(std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : kv) {
        if (!first) os << ";";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

/// Cayley tables of a small finite ring, for cheap exhaustive axiom runs.
template <typename R>
struct Tables {
    std::size_t n = 0, zero = 0, one = 0;
    std::vector<std::vector<std::size_t>> add, mul;
    std::vector<std::size_t> neg;

    explicit Tables(const R& r) {
        n = r.size();
        zero = r.index_of(r.zero());
        one = r.index_of(r.one());
        add.assign(n, std::vector<std::size_t>(n));
        mul.assign(n, std::vector<std::size_t>(n));
        neg.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            neg[i] = r.index_of(r.neg(r.element(i)));
            for (std::size_t j = 0; j < n; ++j) {
                add[i][j] = r.index_of(r.add(r.element(i), r.element(j)));
                mul[i][j] = r.index_of(r.mul(r.element(i), r.element(j)));
            }
        }
    }
};

template <typename R>
std::string ring_axiom_violation(const R& ring) {
    Tables<R> t(ring);
    const std::size_t n = t.n;
    for (std::size_t a = 0; a < n; ++a) {
        if (t.add[a][t.zero] != a) return "additive identity fails";
        if (t.mul[a][t.one] != a) return "multiplicative identity fails";
        if (t.add[a][t.neg[a]] != t.zero) return "additive inverse fails";
        for (std::size_t b = 0; b < n; ++b) {
            if (t.add[a][b] != t.add[b][a]) return "addition not commutative";
            if (t.mul[a][b] != t.mul[b][a]) return "multiplication not commutative";
            for (std::size_t c = 0; c < n; ++c) {
                if (t.add[t.add[a][b]][c] != t.add[a][t.add[b][c]]) return "addition not associative";
                if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) return "multiplication not associative";
                if (t.mul[a][t.add[b][c]] != t.add[t.mul[a][b]][t.mul[a][c]]) return "distributivity fails";
            }
        }
    }
    return "";
}

/// Ghost identities of the universal polynomials, re-derived from scratch:
/// w_i(S) = w_i(X) + w_i(Y), w_i(P) = w_i(X) w_i(Y), w_i(N) = -w_i(X) as
/// exact polynomial identities over Z.
inline bool verify_ghost_identities(Prime p, std::size_t n, std::string* witness) {
    const WittPolySet& ws = WittPolySet::get(p, n);
    for (std::size_t i = 0; i < n; ++i) {
        IntPolynomial wx = ws.ghost(i, 0), wy = ws.ghost(i, n);
        IntPolynomial ls = IntPolynomial::constant(ws.variables(), 0);
        IntPolynomial lp = ls, ln = ls;
        BigInt pj = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            std::uint64_t e = pow_u64(p.value(), i - j);
            ls = ls + ws.sums()[j].pow(e) * pj;
            lp = lp + ws.products()[j].pow(e) * pj;
            ln = ln + ws.negations()[j].pow(e) * pj;
            pj *= p.value();
        }
        if (!(ls == wx + wy)) {
            if (witness) *witness = "sum ghost identity fails at i=" + std::to_string(i);
            return false;
        }
        if (!(lp == wx * wy)) {
            if (witness) *witness = "product ghost identity fails at i=" + std::to_string(i);
            return false;
        }
        if (!(ln == -wx)) {
            if (witness) *witness = "negation ghost identity fails at i=" + std::to_string(i);
            return false;
        }
    }
    return true;
}

template <typename R>
std::string ghost_hom_violation(const WittRingT<R>& w) {
    const auto& base = w.base();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            auto a = w.element(i), b = w.element(j);
            auto gs = w.ghost(w.add(a, b)), gp = w.ghost(w.mul(a, b));
            auto ga = w.ghost(a), gb = w.ghost(b);
            for (std::size_t k = 0; k < ga.size(); ++k) {
                if (!base.eq(gs[k], base.add(ga[k], gb[k]))) return "ghost not additive";
                if (!base.eq(gp[k], base.mul(ga[k], gb[k]))) return "ghost not multiplicative";
            }
        }
    return "";
}

inline std::vector<std::pair<std::string, Tower>> corpus_towers(std::size_t depth) {
    std::vector<std::pair<std::string, Tower>> out;
    out.push_back({"point", Tower::point(depth)});
    out.push_back({"disc2", Tower::discrete(2, depth)});
    out.push_back({"disc3", Tower::discrete(3, depth)});
    out.push_back({"ntilde", canonical_ntilde(depth)});
    out.push_back({"cantor", canonical_cantor(depth)});
    out.push_back({"ntilde-x-disc2", tower_product(canonical_ntilde(depth), Tower::discrete(2, depth)).product});
    // quotient fixture: the Cantor tower modulo "same first bit", a
    // transition-compatible identification built through the quotient
    // machinery (level quotients plus induced transitions)
    {
        Tower cant = canonical_cantor(depth);
        std::vector<LevelQuotient> qs;
        for (std::size_t n = 0; n <= depth; ++n) {
            std::vector<std::pair<std::size_t, std::size_t>> listed;
            for (std::size_t i = 0; i < cant.level_size(n); ++i)
                for (std::size_t j = i + 1; j < cant.level_size(n); ++j)
                    if ((i & 1) == (j & 1)) listed.push_back({i, j});
            qs.push_back(level_quotient(cant.level_size(n), close_pairs(cant.level_size(n), listed)));
        }
        std::vector<std::vector<std::string>> levels(depth + 1);
        std::vector<std::vector<std::size_t>> trans(depth);
        for (std::size_t n = 0; n <= depth; ++n)
            for (std::size_t c = 0; c < qs[n].class_count; ++c) levels[n].push_back("c" + std::to_string(c));
        for (std::size_t n = 0; n < depth; ++n) {
            auto t = quotient_transition(cant, qs[n], qs[n + 1], n);
            if (!t) throw std::logic_error("corpus_towers: first-bit quotient transition undefined");
            trans[n] = *t;
        }
        out.push_back({"cantor-quotient", Tower(levels, trans)});
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Individual check groups. Each appends records; ids are stable.
// ---------------------------------------------------------------------------

inline void check_witt_kernel(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    {
        WittRingT<ZmodRing> w2(Prime(2), 2, ZmodRing(Prime(2), 1));
        std::string v = detail::ring_axiom_violation(w2);
        out.push_back({"witt.ring-axioms", "p=2;n=2;base=F2", v.empty(), v});
        std::string g = detail::ghost_hom_violation(w2);
        out.push_back({"witt.ghost-hom", "p=2;n=2;base=F2", g.empty(), g});
    }
    {
        WittRingT<ZmodRing> w3(Prime(3), 2, ZmodRing(Prime(3), 1));
        std::string v = detail::ring_axiom_violation(w3);
        out.push_back({"witt.ring-axioms", "p=3;n=2;base=F3", v.empty(), v});
        std::string g = detail::ghost_hom_violation(w3);
        out.push_back({"witt.ghost-hom", "p=3;n=2;base=F3", g.empty(), g});
    }
    for (std::uint64_t p : {2, 3, 5})
        for (std::size_t n = 1; n <= 4; ++n) {
            std::string w;
            bool ok = detail::verify_ghost_identities(Prime(p), n, &w);
            out.push_back({"witt.ghost-identities", key({{"p", p}, {"n", n}}), ok, w});
        }
    for (std::uint64_t p : {2, 3})
        for (std::size_t n = 1; n <= 4; ++n) {
            WittContIso iso(Prime(p), 1, (std::uint32_t)n);
            IsoReport r = verify_witt_cont_iso(iso, 10000);
            out.push_back({"witt.zmod-iso", key({{"p", p}, {"n", n}}), r.passed(), r.witness});
        }
    (void)cfg;
}

inline void check_delta_axioms(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    for (std::uint64_t p : {2, 3})
        for (std::uint32_t m = 2; m <= 4; ++m) {
            ZmodCarrier c(Prime(p), m);
            std::function<ZmodRing::Elem(const ZmodRing::Elem&)> delta = [&](const ZmodRing::Elem& x) {
                return delta_from_lift(c, [](const ZmodRing::Elem& y) { return y; }, x);
            };
            auto rep = check_delta_axioms(c, delta);
            out.push_back({"delta.axioms", key({{"p", p}, {"m", m}}) + ";carrier=zmod;phi=id", rep.passed,
                           rep.witness});
        }
    {
        // W_3(F_4) with the Witt-vector Frobenius lift
        WittCarrier<FpAlgebraRing> c(Prime(2), 3, FpAlgebraRing(algebras::f4()));
        std::function<WittRingT<FpAlgebraRing>::Elem(const WittRingT<FpAlgebraRing>::Elem&)> delta =
            [&](const auto& x) {
                return delta_from_lift(
                    c, [&](const auto& y) { return witt_frobenius(c.ring(), y); }, x);
            };
        auto rep = check_delta_axioms(c, delta);
        out.push_back({"delta.axioms", "p=2;n=3;carrier=witt-f4;phi=frobenius", rep.passed, rep.witness});
    }
    if (cfg.include_mutations) {
        // shifting delta by 1 must be caught
        ZmodCarrier c(Prime(2), 3);
        std::function<ZmodRing::Elem(const ZmodRing::Elem&)> bad = [&](const ZmodRing::Elem& x) {
            auto good = delta_from_lift(c, [](const ZmodRing::Elem& y) { return y; }, x);
            return c.lower().ring().add(good, c.lower().ring().one());
        };
        auto rep = check_delta_axioms(c, bad);
        out.push_back({"delta.mutation", "p=2;m=3;mutant=delta-plus-one", !rep.passed,
                       rep.passed ? "mutant delta not caught" : ""});
    }
}

inline void check_stone_duality(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    for (std::uint64_t p : {2, 3})
        for (std::size_t k = 1; k <= 5; ++k) {
            PBooleanAlgebra a = stone_dual_of_set(k, Prime(p));
            FiniteStoneDual d = spec_chars(a.algebra());
            bool ok = d.points.size() == k;
            // each character is evaluation at exactly one point
            std::vector<bool> hit(k, false);
            for (const auto& chi : d.points) {
                std::size_t pt = SIZE_MAX;
                for (std::size_t i = 0; i < k && ok; ++i)
                    if (chi[i] % p == 1) {
                        if (pt != SIZE_MAX) ok = false;
                        pt = i;
                    }
                if (pt == SIZE_MAX || hit[pt]) ok = false;
                if (ok) hit[pt] = true;
            }
            out.push_back({"stone.dual-roundtrip", key({{"p", p}, {"size", k}}), ok,
                           ok ? "" : "characters do not biject with points"});
        }
    // double dualization of set maps: f: S -> T, dualize to the algebra map
    // F_p^T -> F_p^S, recover f on characters
    for (std::uint64_t p : {2, 3})
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t t = 1; t <= 3; ++t) {
                std::size_t total = 1;
                for (std::size_t i = 0; i < s; ++i) total *= t;
                bool ok = true;
                std::string w;
                for (std::size_t code = 0; code < total && ok; ++code) {
                    std::size_t c = code;
                    std::vector<std::size_t> f(s);
                    for (auto& v : f) {
                        v = c % t;
                        c /= t;
                    }
                    // the induced algebra map F_p^T -> F_p^S pulls the
                    // indicator of t0 back to the indicator of f^{-1}(t0);
                    // recovering the dual set map from those images must give
                    // back f
                    FunctionRing src(t, ZmodRing(Prime(p), 1));
                    FunctionRing tgt(s, ZmodRing(Prime(p), 1));
                    std::vector<FunctionRing::Elem> images;
                    for (std::size_t t0 = 0; t0 < t; ++t0) {
                        FunctionRing::Elem ind(s, 0);
                        for (std::size_t s0 = 0; s0 < s; ++s0)
                            if (f[s0] == t0) ind[s0] = 1;
                        images.push_back(ind);
                    }
                    FunctionRingMap back = dual_of_indicator_images(src, tgt, images);
                    if (back.dual != f) {
                        ok = false;
                        w = "indicator-image dual differs from the original map";
                    }
                }
                out.push_back({"stone.double-dual", key({{"p", p}, {"s", s}, {"t", t}}), ok, w});
            }
    // every corpus p-Boolean algebra embeds isomorphically into its function
    // algebra of characters
    std::vector<std::pair<std::string, FiniteFpAlgebra>> pbool;
    for (std::size_t k = 1; k <= 5; ++k) pbool.push_back({"diag-f2^" + std::to_string(k), algebras::fp_power(Prime(2), k)});
    for (std::size_t k = 1; k <= 3; ++k) pbool.push_back({"diag-f3^" + std::to_string(k), algebras::fp_power(Prime(3), k)});
    {
        // a non-diagonal presentation: the subalgebra of F_2^3 spanned by
        // (1,1,1) and (1,1,0)
        FiniteFpAlgebra amb = algebras::fp_power(Prime(2), 3);
        PresentedSubalgebra sub = subalgebra_from_span(amb, {{1, 1, 1}, {1, 1, 0}});
        pbool.push_back({"sub-of-f2^3", sub.algebra});
    }
    for (auto& [name, a] : pbool) {
        bool ok = PBooleanAlgebra::is_p_boolean(a);
        std::string w = ok ? "" : "not p-Boolean";
        if (ok) {
            FiniteStoneDual d = spec_chars(a);
            ok = d.points.size() == a.dim();
            if (!ok) w = "character count differs from dimension";
            if (ok) {
                // evaluation map A -> F_p^chars is injective (hence iso by count)
                const std::uint64_t p = a.prime().value();
                for (std::size_t idx = 1; idx < a.element_count() && ok; ++idx) {
                    fplin::Vec v = a.element(idx);
                    bool all_zero = true;
                    for (const auto& chi : d.points) {
                        std::uint64_t acc = 0;
                        for (std::size_t i = 0; i < a.dim(); ++i) acc += chi[i] * v[i] % p;
                        if (acc % p != 0) all_zero = false;
                    }
                    if (all_zero) {
                        ok = false;
                        w = "evaluation map has nonzero kernel";
                    }
                }
            }
        }
        out.push_back({"stone.function-algebra", "algebra=" + name, ok, w});
    }
    (void)cfg;
}

inline void check_duality_roundtrip(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    Prime p(cfg.p);
    for (const auto& [name, t] : detail::corpus_towers(cfg.depth)) {
        for (std::size_t n = 0; n <= t.depth() && n <= 3; ++n) {
            for (std::uint32_t m = 1; m <= cfg.precision && m <= 3; ++m) {
                if (t.level_size(n) == 0) continue;
                bool ok = true;
                std::string w;
                try {
                    StoneDeltaApprox a = phi_functor(t, n, p, m);
                    PsiResult r = psi_functor(a);
                    ok = r.dual.points.size() == t.level_size(n);
                    if (!ok) w = "dual size differs from level size";
                } catch (const std::exception& e) {
                    ok = false;
                    w = e.what();
                }
                out.push_back({"duality.roundtrip",
                               "tower=" + name + ";" + key({{"level", n}, {"m", m}}), ok, w});
            }
        }
    }
    // contravariant functoriality: dualizing a level map twice recovers it
    for (std::size_t s = 1; s <= cfg.max_level_size; ++s)
        for (std::size_t t = 1; t <= cfg.max_level_size; ++t) {
            std::size_t total = 1;
            for (std::size_t i = 0; i < t; ++i) total *= s;
            bool ok = true;
            std::string w;
            for (std::size_t code = 0; code < total && ok; ++code) {
                std::size_t c = code;
                FunctionRingMap m;
                m.source_size = s;
                m.target_size = t;
                for (std::size_t i = 0; i < t; ++i) {
                    m.dual.push_back(c % s);
                    c /= s;
                }
                FunctionRing src(s, ZmodRing(p, cfg.precision));
                FunctionRing tgt(t, ZmodRing(p, cfg.precision));
                std::vector<FunctionRing::Elem> images;
                for (std::size_t i = 0; i < s; ++i) {
                    FunctionRing::Elem ind(s, src.codomain().zero());
                    ind[i] = src.codomain().one();
                    images.push_back(m.apply(src, tgt, ind));
                }
                FunctionRingMap back = dual_of_indicator_images(src, tgt, images);
                if (back.dual != m.dual) {
                    ok = false;
                    w = "dual-of-dual differs at code " + std::to_string(code);
                }
            }
            out.push_back({"duality.contravariance", key({{"s", s}, {"t", t}}), ok, w});
        }
}

inline void check_witt_cont(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    for (std::uint64_t p : {2, 3})
        for (std::size_t s = 1; s <= 2; ++s)
            for (std::uint32_t m = 1; m <= 2; ++m) {
                WittContIso iso(Prime(p), s, m);
                IsoReport r = verify_witt_cont_iso(iso, 10000);
                out.push_back({"duality.witt-cont", key({{"p", p}, {"s", s}, {"m", m}}) + ";mode=exhaustive",
                               r.passed(), r.witness});
            }
    {
        // |S| = 3, m = 3: bijectivity exhaustive, homomorphism on seeded samples
        WittContIso iso(Prime(2), 3, 3);
        const auto& w = iso.source();
        const auto& f = iso.target();
        bool ok = true;
        std::string wit;
        std::vector<bool> hit(f.size(), false);
        for (std::size_t i = 0; i < w.size() && ok; ++i) {
            std::size_t j = f.index_of(iso.apply(w.element(i)));
            if (hit[j]) {
                ok = false;
                wit = "collision at " + std::to_string(i);
            }
            hit[j] = true;
        }
        DetRng rng(cfg.seed ^ 0x77697474u);
        for (std::size_t k = 0; k < 1000 && ok; ++k) {
            auto a = w.element(rng.below(w.size())), b = w.element(rng.below(w.size()));
            if (!f.eq(iso.apply(w.add(a, b)), f.add(iso.apply(a), iso.apply(b))) ||
                !f.eq(iso.apply(w.mul(a, b)), f.mul(iso.apply(a), iso.apply(b)))) {
                ok = false;
                wit = "homomorphism fails on sample " + std::to_string(k);
            }
        }
        out.push_back({"duality.witt-cont", "p=2;s=3;m=3;mode=sampled", ok, wit});
    }
}

inline void check_flatness(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    for (std::uint64_t p : {2, 3})
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t t = 1; t <= 3; ++t) {
                std::size_t total = 1;
                for (std::size_t i = 0; i < t; ++i) total *= s;
                bool ok = true;
                std::string w;
                std::uint32_t m = std::min<std::uint32_t>(cfg.precision, 2);
                for (std::size_t code = 0; code < total && ok; ++code) {
                    std::size_t c = code;
                    FunctionRingMap fm;
                    fm.source_size = s;
                    fm.target_size = t;
                    for (std::size_t i = 0; i < t; ++i) {
                        fm.dual.push_back(c % s);
                        c /= s;
                    }
                    FFReport ff = ff_check(Prime(p), fm); // internal consistency asserted inside
                    PCompleteFFReport pc = p_complete_ff_check(Prime(p), fm);
                    if (pc.faithfully_flat != ff.faithfully_flat) {
                        ok = false;
                        w = "lifted and mod-p verdicts disagree";
                    }
                    // independent oracle at precision m: the lifted map is
                    // injective exactly when faithfully flat
                    FunctionRing src(s, ZmodRing(Prime(p), m));
                    FunctionRing tgt(t, ZmodRing(Prime(p), m));
                    if (src.size() <= 4096) {
                        std::vector<bool> hit(tgt.size(), false);
                        bool inj = true;
                        for (std::size_t i = 0; i < src.size(); ++i) {
                            std::size_t j = tgt.index_of(fm.apply(src, tgt, src.element(i)));
                            if (hit[j]) inj = false;
                            hit[j] = true;
                        }
                        if (inj != ff.faithfully_flat) {
                            ok = false;
                            w = "precision-" + std::to_string(m) + " injectivity oracle disagrees";
                        }
                    }
                }
                out.push_back({"flatness.correspondence", key({{"p", p}, {"s", s}, {"t", t}}), ok, w});
            }
}

inline void check_site_comparison(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    Prime p(cfg.p);
    const std::uint32_t m = std::min<std::uint32_t>(cfg.precision, 2);
    for (std::size_t t = 1; t <= cfg.max_level_size; ++t) {
        // all piece maps: a source size in 1..3 and a map into the target
        std::vector<std::vector<std::size_t>> all_pieces;
        for (std::size_t s = 1; s <= 3; ++s) {
            std::size_t total = 1;
            for (std::size_t i = 0; i < s; ++i) total *= t;
            for (std::size_t code = 0; code < total; ++code) {
                std::size_t c = code;
                std::vector<std::size_t> pm(s);
                for (auto& v : pm) {
                    v = c % t;
                    c /= t;
                }
                all_pieces.push_back(pm);
            }
        }
        bool ok = true;
        std::string w;
        std::size_t families = 0;
        for (std::size_t k = 1; k <= 3 && ok; ++k) {
            std::vector<std::size_t> pick(k, 0);
            while (true) {
                FiniteCover cov;
                cov.target_size = t;
                for (auto idx : pick) cov.piece_maps.push_back(all_pieces[idx]);
                SiteTranslation st = site_translate(p, m, cov); // asserts cover <=> ff internally
                ++families;
                if (!st.round_trip_ok) {
                    ok = false;
                    w = "round trip failed for a family over target size " + std::to_string(t);
                    break;
                }
                std::size_t pos = 0;
                while (pos < k && pick[pos] + 1 == all_pieces.size()) pick[pos++] = 0;
                if (pos == k) break;
                ++pick[pos];
            }
        }
        out.push_back({"site.roundtrip", key({{"target", t}, {"families", families}}), ok, w});
    }
    if (cfg.include_mutations) {
        // a deliberately non-surjective family must be flagged, with witness
        FiniteCover bad{3, {{0, 1}}};
        SiteTranslation st = site_translate(p, m, bad);
        bool ok = !st.is_cover && !st.ff.faithfully_flat && !st.ff.witness.empty();
        out.push_back({"site.mutation", "target=3;pieces=1;missing-point", ok,
                       ok ? "" : "non-cover was not flagged"});
    }
}

inline void check_stone_characterization(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    auto push = [&](const std::string& name, bool equivalent, bool well_defined, const std::string& w) {
        out.push_back({"stone.characterization", "carrier=" + name, equivalent && well_defined, w});
    };
    {
        ZmodRing z(Prime(2), 2);
        Endo<ZmodRing> id = [](const ZmodRing::Elem& x) { return x; };
        auto r = stone_characterization_check(z, id, Prime(2));
        push("z4-id", r.equivalent && r.phi_is_identity && r.coinv_map_pc_ff, r.delta_well_defined, r.witness);
    }
    {
        ZmodRing z(Prime(3), 2);
        Endo<ZmodRing> id = [](const ZmodRing::Elem& x) { return x; };
        auto r = stone_characterization_check(z, id, Prime(3));
        push("z9-id", r.equivalent && r.phi_is_identity, r.delta_well_defined, r.witness);
    }
    for (std::size_t s = 1; s <= cfg.max_level_size; ++s) {
        FunctionRing fr(s, ZmodRing(Prime(2), 2));
        Endo<FunctionRing> id = [](const FunctionRing::Elem& x) { return x; };
        auto r = stone_characterization_check(fr, id, Prime(2));
        push("z4^" + std::to_string(s) + "-id", r.equivalent && r.phi_is_identity, r.delta_well_defined,
             r.witness);
    }
    {
        // the non-Stone instance: W_2(F_4) with the Frobenius lift
        WittRingT<FpAlgebraRing> w(Prime(2), 2, FpAlgebraRing(algebras::f4()));
        Endo<WittRingT<FpAlgebraRing>> phi = [&](const auto& a) { return witt_frobenius(w, a); };
        auto r = stone_characterization_check(w, phi, Prime(2));
        bool ok = r.equivalent && !r.phi_is_identity && !r.coinv_map_pc_ff;
        push("w2f4-frobenius", ok, r.delta_well_defined, ok ? "" : "expected both sides false");
    }
    {
        // W_2(F_2): the Frobenius lift is the identity, so this is Stone
        WittRingT<ZmodRing> w(Prime(2), 2, ZmodRing(Prime(2), 1));
        Endo<WittRingT<ZmodRing>> phi = [&](const auto& a) { return witt_frobenius(w, a); };
        auto r = stone_characterization_check(w, phi, Prime(2));
        push("w2f2-frobenius", r.equivalent && r.phi_is_identity, r.delta_well_defined, r.witness);
    }
    {
        // W_2 of the dual numbers with the digitwise lift: not Stone
        WittRingT<FpAlgebraRing> w(Prime(2), 2, FpAlgebraRing(algebras::dual_numbers(Prime(2))));
        Endo<WittRingT<FpAlgebraRing>> phi = [&](const auto& a) { return witt_digitwise_frobenius(w, a); };
        auto r = stone_characterization_check(w, phi, Prime(2));
        push("w2dual-digitwise", r.equivalent && !r.phi_is_identity, r.delta_well_defined, r.witness);
    }
}

inline void check_adjunctions(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    // --- Frobenius (co)invariants against p-Boolean algebras, dim <= 2 ---
    std::vector<std::pair<std::string, FiniteFpAlgebra>> corpus = {
        {"f2", algebras::fp(Prime(2))},
        {"f4", algebras::f4()},
        {"f2x", algebras::dual_numbers(Prime(2))},
        {"f2^2", algebras::fp_power(Prime(2), 2)},
    };
    std::vector<std::pair<std::string, FiniteFpAlgebra>> pbool = {
        {"f2", algebras::fp(Prime(2))},
        {"f2^2", algebras::fp_power(Prime(2), 2)},
    };
    for (auto& [an, a] : corpus)
        for (auto& [bn, b] : pbool) {
            // coinvariants: Hom_alg(A, B) = Hom(A_coinv, B)
            std::size_t rhs = enumerate_algebra_maps(a, b).size();
            PresentedQuotient q = frobenius_coinvariants(a);
            std::size_t lhs = q.algebra ? enumerate_algebra_maps(*q.algebra, b).size() : 0;
            bool ok = lhs == rhs;
            out.push_back({"adjunction.frobenius", "kind=coinv;a=" + an + ";b=" + bn, ok,
                           ok ? "" : "hom counts differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs)});
            // invariants: Hom_alg(B, A) = Hom(B, A_inv)
            std::size_t rhs2 = enumerate_algebra_maps(b, a).size();
            PresentedSubalgebra inv = frobenius_invariants(a);
            std::size_t lhs2 = enumerate_algebra_maps(b, inv.algebra).size();
            bool ok2 = lhs2 == rhs2;
            out.push_back({"adjunction.frobenius", "kind=inv;a=" + an + ";b=" + bn, ok2,
                           ok2 ? "" : "hom counts differ: " + std::to_string(lhs2) + " vs " + std::to_string(rhs2)});
        }
    // --- (co)perfection against perfect algebras ---
    std::vector<std::pair<std::string, FiniteFpAlgebra>> perfect = {
        {"f2", algebras::fp(Prime(2))},
        {"f4", algebras::f4()},
        {"f2^2", algebras::fp_power(Prime(2), 2)},
    };
    for (auto& [an, a] : corpus)
        for (auto& [pn, pf] : perfect) {
            Coperfection cp = coperfection(a);
            std::size_t lhs = enumerate_algebra_maps(cp.image.algebra, pf).size();
            std::size_t rhs = enumerate_algebra_maps(a, pf).size();
            bool ok = lhs == rhs;
            out.push_back({"adjunction.perfection", "kind=coperf;a=" + an + ";p=" + pn, ok,
                           ok ? "" : "hom counts differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs)});
            PresentedSubalgebra pr = perfection(a);
            std::size_t lhs2 = enumerate_algebra_maps(pf, pr.algebra).size();
            std::size_t rhs2 = enumerate_algebra_maps(pf, a).size();
            bool ok2 = lhs2 == rhs2;
            out.push_back({"adjunction.perfection", "kind=perf;a=" + an + ";p=" + pn, ok2,
                           ok2 ? "" : "hom counts differ: " + std::to_string(lhs2) + " vs " + std::to_string(rhs2)});
        }
    // --- delta-(co)invariants for carriers with <= 16 elements ---
    {
        WittRingT<FpAlgebraRing> wf4(Prime(2), 2, FpAlgebraRing(algebras::f4()));
        Endo<WittRingT<FpAlgebraRing>> phi = [&](const auto& a) { return witt_frobenius(wf4, a); };
        ZmodRing z4(Prime(2), 2);
        FunctionRing z4sq(2, ZmodRing(Prime(2), 2));
        Endo<ZmodRing> idz = [](const ZmodRing::Elem& x) { return x; };
        Endo<FunctionRing> idf = [](const FunctionRing::Elem& x) { return x; };

        auto run_pair = [&](const std::string& name, auto& stone_ring, auto& stone_id) {
            // invariants: delta-maps B -> A = ring maps B -> Inv(A)
            auto inv = delta_invariants(wf4, phi);
            std::size_t lhs = enumerate_ring_maps(stone_ring, inv).size();
            std::size_t rhs = enumerate_delta_maps(stone_ring, stone_id, wf4, phi).size();
            bool ok = lhs == rhs;
            out.push_back({"adjunction.delta", "kind=inv;b=" + name + ";a=w2f4", ok,
                           ok ? "" : "hom counts differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs)});
            // coinvariants: delta-maps A -> B = ring maps Coinv(A) -> B
            auto coin = delta_coinvariants(wf4, phi);
            std::size_t lhs2 = enumerate_ring_maps(coin, stone_ring).size();
            std::size_t rhs2 = enumerate_delta_maps(wf4, phi, stone_ring, stone_id).size();
            bool ok2 = lhs2 == rhs2;
            out.push_back({"adjunction.delta", "kind=coinv;a=w2f4;b=" + name, ok2,
                           ok2 ? "" : "hom counts differ: " + std::to_string(lhs2) + " vs " + std::to_string(rhs2)});
        };
        run_pair("z4", z4, idz);
        run_pair("z4^2", z4sq, idf);
        // modulo-p reduction of delta-invariants matches Frobenius invariants
        // of the reduced algebra
        auto inv = delta_invariants(wf4, phi);
        auto red_inv = mod_p_reduction(inv, 2);
        PresentedSubalgebra frob_inv = frobenius_invariants(algebras::f4());
        bool ok = red_inv.size() == (std::size_t)pow_u64(2, frob_inv.algebra.dim());
        out.push_back({"adjunction.delta", "kind=reduction-square;a=w2f4", ok,
                       ok ? "" : "reduced invariants have unexpected size"});
    }
    (void)cfg;
}

inline void check_profinite(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    for (std::size_t d = 1; d <= 6; ++d) {
        for (auto [name, t] : {std::pair<std::string, Tower>{"ntilde", canonical_ntilde(d)},
                               std::pair<std::string, Tower>{"cantor", canonical_cantor(d)}}) {
            std::vector<LiftWitness> ws;
            bool ok = check_sequential_surjectivity(t, &ws);
            std::string w;
            if (ok) {
                std::size_t expected = 0;
                for (std::size_t n = 0; n <= t.depth(); ++n) expected += t.level_size(n);
                if (ws.size() != expected) {
                    ok = false;
                    w = "witness count mismatch";
                }
                for (const auto& lw : ws) {
                    if (lw.chain.front() != lw.point) { ok = false; w = "witness chain start wrong"; break; }
                    for (std::size_t i = 0; i + 1 < lw.chain.size(); ++i)
                        if (t.transition(lw.level + i, lw.chain[i + 1]) != lw.chain[i]) {
                            ok = false;
                            w = "witness chain not compatible";
                            break;
                        }
                    if (!ok) break;
                }
            } else {
                w = "transitions not surjective";
            }
            out.push_back({"profinite.replete", "tower=" + name + ";" + key({{"depth", d}}), ok, w});
        }
    }
    // fiber product universal property, exhaustively at small level sizes
    {
        const std::size_t d = 2;
        Tower a = Tower::discrete(2, d), b = canonical_ntilde(d), c = Tower::discrete(2, d);
        // f: a -> c the identity, g: b -> c the constant map at 0 (constant
        // maps always commute with transitions)
        std::vector<std::vector<std::size_t>> fm(d + 1), gm(d + 1);
        for (std::size_t n = 0; n <= d; ++n) {
            fm[n] = {0, 1};
            gm[n].assign(b.level_size(n), 0);
        }
        ProMap f = ProMap::levelwise(a, c, fm), g = ProMap::levelwise(b, c, gm);
        TowerFiberProduct fp = tower_fiber_product(f, g);
        bool ok = true;
        std::string w;
        // (i) the level pairs are exactly the agreeing pairs
        for (std::size_t n = 0; n <= d && ok; ++n) {
            std::vector<std::pair<std::size_t, std::size_t>> expect;
            for (std::size_t i = 0; i < a.level_size(n); ++i)
                for (std::size_t j = 0; j < b.level_size(n); ++j)
                    if (f.apply(n, i) == g.apply(n, j)) expect.push_back({i, j});
            if (expect != fp.pairs[n]) {
                ok = false;
                w = "fiber pairs differ at level " + std::to_string(n);
            }
        }
        // (ii) universal property against small test towers
        for (const Tower& test : {Tower::point(d), Tower::discrete(2, d)}) {
            if (!ok) break;
            auto homs_a = enumerate_tower_homs(test, a);
            auto homs_b = enumerate_tower_homs(test, b);
            for (const auto& ha : homs_a)
                for (const auto& hb : homs_b) {
                    ProMap u = tower_hom_as_promap(test, a, ha);
                    ProMap v = tower_hom_as_promap(test, b, hb);
                    if (!promap_equal(compose(f, u), compose(g, v))) continue;
                    std::size_t count = 0;
                    for (const auto& hp : enumerate_tower_homs(test, fp.product)) {
                        ProMap h = tower_hom_as_promap(test, fp.product, hp);
                        if (promap_equal(compose(fp.to_first, h), u) &&
                            promap_equal(compose(fp.to_second, h), v))
                            ++count;
                    }
                    if (count != 1) {
                        ok = false;
                        w = "universal property: " + std::to_string(count) + " factorizations";
                    }
                }
        }
        out.push_back({"profinite.fiber-product", "a=disc2;b=ntilde;c=disc2;depth=2", ok, w});
    }
    (void)cfg;
}

/// The standard finite site used by the condensed checks: the point, small
/// discrete sets with an overlapping two-piece cover, and the depth-2 Cantor
/// tower covered by its two halves.
struct StandardSite {
    FiniteSite site;
    std::vector<std::size_t> cover_ids;
    std::size_t obj_point, obj_disc2, obj_disc3, obj_cantor;
    std::size_t morph_c1, morph_c2; // the two pieces of the disc3 cover
};

inline StandardSite build_standard_site(std::size_t depth, std::size_t working_level) {
    StandardSite s{FiniteSite(depth, working_level), {}, 0, 0, 0, 0, 0, 0};
    FiniteSite& site = s.site;
    s.obj_point = site.add_object(Tower::point(depth));
    s.obj_disc2 = site.add_object(Tower::discrete(2, depth));
    s.obj_disc3 = site.add_object(Tower::discrete(3, depth));
    s.obj_cantor = site.add_object(canonical_cantor(depth));
    auto lv = [&](std::size_t from, std::size_t to, std::vector<std::vector<std::size_t>> maps) {
        return site.add_morphism(from, to, ProMap::levelwise(site.objects()[from], site.objects()[to], maps));
    };
    std::size_t d2a = site.add_object(Tower::discrete(2, depth));
    std::size_t d2b = site.add_object(Tower::discrete(2, depth));
    s.morph_c1 = lv(d2a, s.obj_disc3, std::vector<std::vector<std::size_t>>(depth + 1, {0, 1}));
    s.morph_c2 = lv(d2b, s.obj_disc3, std::vector<std::vector<std::size_t>>(depth + 1, {1, 2}));
    s.cover_ids.push_back(site.add_cover(s.obj_disc3, {s.morph_c1, s.morph_c2}));
    s.cover_ids.push_back(site.add_cover(
        s.obj_disc3, {site.add_morphism(s.obj_disc3, s.obj_disc3, ProMap::identity(site.objects()[s.obj_disc3]))}));
    // cover the Cantor tower by its two halves (cylinders on the first bit)
    {
        const Tower cant = site.objects()[s.obj_cantor];
        std::vector<std::size_t> half_morphs;
        for (std::size_t bit = 0; bit < 2; ++bit) {
            std::vector<std::vector<std::string>> levels(depth + 1);
            std::vector<std::vector<std::size_t>> trans(depth);
            std::vector<std::vector<std::size_t>> incl(depth + 1);
            for (std::size_t n = 0; n <= depth; ++n) {
                for (std::size_t i = 0; i < cant.level_size(n); ++i) {
                    // at level 0 both halves project to the root
                    if (n == 0 || (i & 1) == bit) {
                        levels[n].push_back(cant.level_labels(n)[i]);
                        incl[n].push_back(i);
                    }
                }
                if (n > 0) {
                    for (std::size_t idx : incl[n]) {
                        std::size_t tgt = cant.transition(n - 1, idx);
                        for (std::size_t k2 = 0; k2 < incl[n - 1].size(); ++k2)
                            if (incl[n - 1][k2] == tgt) trans[n - 1].push_back(k2);
                    }
                }
            }
            std::size_t half = site.add_object(Tower(levels, trans));
            half_morphs.push_back(
                site.add_morphism(half, s.obj_cantor, ProMap::levelwise(site.objects()[half], cant, incl)));
        }
        s.cover_ids.push_back(site.add_cover(s.obj_cantor, half_morphs));
    }
    return s;
}

inline void check_condensed(const RunConfig& cfg, std::vector<CheckRecord>& out) {
    using detail::key;
    const std::size_t depth = 2, wl = 2;
    StandardSite ss = build_standard_site(depth, wl);
    FiniteSite& site = ss.site;

    std::vector<std::pair<std::string, ConcretePresheaf>> sheaves;
    sheaves.push_back({"representable-disc2", representable_presheaf(Tower::discrete(2, depth))});
    sheaves.push_back({"representable-point", representable_presheaf(Tower::point(depth))});
    sheaves.push_back({"condensify-disc2", condensify_discrete(2, wl)});
    sheaves.push_back({"condensify-disc3", condensify_discrete(3, wl)});
    {
        Tower cant = canonical_cantor(depth);
        auto dy = dyadic_interval_pairs(depth);
        auto closed = close_pairs(cant.level_size(wl), dy[wl]);
        sheaves.push_back({"condensify-dyadic", condensify_quotient(cant, closed, wl)});
    }
    for (auto& [name, x] : sheaves) {
        PresheafApprox tab = tabulate_presheaf(site, x);
        auto fun = check_presheaf_functoriality(site, tab);
        out.push_back({"condensed.functoriality", "presheaf=" + name, fun.passed, fun.witness});
        for (std::size_t c = 0; c < site.covers().size(); ++c) {
            auto rep = sheaf_check(site, tab, c);
            out.push_back({"condensed.sheaf", "presheaf=" + name + ";cover=" + std::to_string(c), rep.passed,
                           rep.witness});
        }
    }
    if (cfg.include_mutations) {
        // break compatibility: swap two sections of the disc3 target that
        // differ on the overlap of the two cover pieces
        PresheafApprox tab = tabulate_presheaf(site, condensify_discrete(2, wl));
        auto& table = tab.restriction[ss.morph_c2];
        std::swap(table[0], table[2]); // codes 000 and 010 differ at point 1
        auto rep = sheaf_check(site, tab, ss.cover_ids[0]);
        out.push_back({"condensed.mutation", "presheaf=condensify-disc2;broken-restriction", !rep.passed,
                       rep.passed ? "broken restriction not caught" : ""});
    }
    // qc: representables and condensifications are quasicompact; an
    // unreachable constant presheaf is not
    {
        bool q1 = qc_check(site, representable_presheaf(Tower::discrete(2, depth)));
        bool q2 = qc_check(site, condensify_discrete(2, wl));
        ConcretePresheaf big{[](const Tower&) { return std::size_t(2); },
                             [](const Tower&, const Tower&, const ProMap&, std::size_t i) { return i; }};
        bool q3 = qc_check(site, big);
        out.push_back({"condensed.qcqs", "qc=representable", q1, q1 ? "" : "no covering section"});
        out.push_back({"condensed.qcqs", "qc=condensify", q2, q2 ? "" : "no covering section"});
        out.push_back({"condensed.qcqs", "qc=constant-2-expect-false", !q3, q3 ? "unexpected cover" : ""});
    }
    // qs: diagonal relation passes; the dyadic relation with identity maps
    // is transition-incompatible and must fail with a witness
    {
        Tower cant = canonical_cantor(depth);
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> diag(depth + 1), dyc(depth + 1);
        std::vector<std::vector<std::size_t>> idmaps(depth + 1);
        auto dy = dyadic_interval_pairs(depth);
        for (std::size_t n = 0; n <= depth; ++n) {
            diag[n] = close_pairs(cant.level_size(n), {});
            dyc[n] = close_pairs(cant.level_size(n), dy[n]);
            for (std::size_t i = 0; i < cant.level_size(n); ++i) idmaps[n].push_back(i);
        }
        auto qs1 = qs_check_presented(cant, cant, cant, diag, idmaps, idmaps);
        out.push_back({"condensed.qcqs", "qs=diagonal", qs1.passed, qs1.witness});
        auto qs2 = qs_check_presented(cant, cant, cant, dyc, idmaps, idmaps);
        out.push_back({"condensed.qcqs", "qs=dyadic-identity-expect-false", !qs2.passed,
                       qs2.passed ? "incompatible relation not caught" : ""});
    }
    // Betti comparison over the corpus, with naturality
    {
        Prime p(2);
        std::uint32_t m = std::min<std::uint32_t>(cfg.precision, 2);
        std::vector<std::pair<std::string, Tower>> ks = {
            {"point", Tower::point(depth)},
            {"disc2", Tower::discrete(2, depth)},
            {"ntilde", canonical_ntilde(depth)},
        };
        std::vector<std::pair<std::string, StoneDeltaApprox>> as;
        for (std::size_t s = 1; s <= cfg.max_level_size; ++s)
            as.push_back({"z" + std::to_string(pow_u64(2, m)) + "^" + std::to_string(s),
                          StoneDeltaApprox(s, p, m)});
        for (auto& [kn, k] : ks)
            for (auto& [an, a] : as) {
                auto rep = betti_delta_check(k, wl, a);
                out.push_back({"condensed.betti", "k=" + kn + ";a=" + an, rep.passed, rep.witness});
            }
        // psi pushforward of a representable agrees with the hom count
        {
            Tower k = Tower::discrete(2, depth);
            auto pp = psi_pushforward(representable_presheaf(k), as[0].second, depth);
            bool ok = pp.value_count == enumerate_tower_homs(pp.dual_tower, k).size();
            out.push_back({"condensed.betti", "psi-pushforward=representable-disc2", ok,
                           ok ? "" : "pushforward value count differs"});
        }
        // naturality in A: pre-composing a set map dual(A) -> K_n with a set
        // map dual(A') -> dual(A) matches composing the induced ring maps
        // Cont(K_n) -> A -> A' (checked on all ring elements)
        {
            StoneDeltaApprox a2(2, p, m), a1(1, p, m);
            FunctionRing r2 = a2.ring(), r1 = a1.ring();
            Tower k = Tower::discrete(2, depth);
            const std::size_t kn = k.level_size(wl);
            FunctionRing rk(kn, ZmodRing(p, m));
            bool ok = true;
            for (std::size_t u = 0; u < 2 && ok; ++u) {        // dual(a1) -> dual(a2)
                FunctionRingMap a2_to_a1{2, 1, {u}};           // ring map a2 -> a1
                for (std::size_t d2 = 0; d2 < 4 && ok; ++d2) { // dual(a2) -> K_n
                    FunctionRingMap k_to_a2{kn, 2, {d2 % 2, d2 / 2}};
                    // composite set map dual(a1) -> K_n is s |-> k_to_a2.dual[u]
                    FunctionRingMap composite{kn, 1, {k_to_a2.dual[u]}};
                    for (std::size_t e = 0; e < rk.size() && ok; ++e) {
                        auto lhs = a2_to_a1.apply(r2, r1, k_to_a2.apply(rk, r2, rk.element(e)));
                        auto rhs = composite.apply(rk, r1, rk.element(e));
                        if (!r1.eq(lhs, rhs)) ok = false;
                    }
                }
            }
            out.push_back({"condensed.betti", "naturality=k-disc2", ok, ok ? "" : "naturality square fails"});
        }
    }
    // objectwise coequalizer presentation of the dyadic quotient
    for (std::size_t lvl = 1; lvl <= 3; ++lvl) {
        auto dy = dyadic_interval_pairs(lvl);
        std::size_t s = std::size_t(1) << lvl;
        auto closed = close_pairs(s, dy[lvl]);
        for (std::size_t u = 1; u <= 3; ++u) {
            auto rep = coequalizer_check(u, s, closed);
            out.push_back({"condensed.coequalizer", key({{"level", lvl}, {"u", u}}), rep.passed, rep.witness});
        }
    }
}

// ---------------------------------------------------------------------------
// Suite driver, report serialization, explain.
// ---------------------------------------------------------------------------

inline Report run_suite(const RunConfig& cfg) {
    Report rep;
    rep.config = cfg;
    check_witt_kernel(cfg, rep.records);
    check_delta_axioms(cfg, rep.records);
    check_stone_duality(cfg, rep.records);
    check_duality_roundtrip(cfg, rep.records);
    check_witt_cont(cfg, rep.records);
    check_flatness(cfg, rep.records);
    check_site_comparison(cfg, rep.records);
    check_stone_characterization(cfg, rep.records);
    check_adjunctions(cfg, rep.records);
    check_profinite(cfg, rep.records);
    check_condensed(cfg, rep.records);
    std::stable_sort(rep.records.begin(), rep.records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::tie(a.check, a.instance_key) < std::tie(b.check, b.instance_key);
    });
    return rep;
}

inline nlohmann::ordered_json report_to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["tool"] = "wittstone";
    j["version"] = rep.version;
    j["config"] = {{"p", rep.config.p},
                   {"precision", rep.config.precision},
                   {"depth", rep.config.depth},
                   {"max_level_size", rep.config.max_level_size},
                   {"seed", rep.config.seed},
                   {"include_mutations", rep.config.include_mutations}};
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.records) {
        nlohmann::ordered_json rec{{"check", r.check}, {"instance_key", r.instance_key}, {"passed", r.passed}};
        if (!r.witness.empty()) rec["witness"] = r.witness;
        j["records"].push_back(rec);
    }
    return j;
}

inline const std::map<std::string, std::string>& explain_table() {
    static const std::map<std::string, std::string> table = {
        {"witt.ring-axioms",
         "Ring axioms hold exhaustively on small truncated Witt rings (all pairs and triples), "
         "computed from the universal addition/multiplication polynomials."},
        {"witt.ghost-hom",
         "The ghost map (w_0, ..., w_{n-1}) is a ring homomorphism into the componentwise base "
         "ring, checked on all element pairs."},
        {"witt.ghost-identities",
         "The universal sum/product/negation polynomials satisfy the ghost identities "
         "w_i(S) = w_i(X) + w_i(Y), w_i(P) = w_i(X) w_i(Y), w_i(N) = -w_i(X) as exact polynomial "
         "identities over the integers, re-derived independently of the construction cache."},
        {"witt.zmod-iso",
         "W_n over the prime field is isomorphic to Z/p^n via the Teichmueller digit expansion, "
         "verified as a bijective ring homomorphism by enumeration."},
        {"delta.axioms",
         "delta(x) = (phi(x) - x^p)/p derived from a Frobenius lift satisfies delta(1) = 0, the "
         "product rule, and the sum rule with the exact binomial correction, exhaustively."},
        {"delta.mutation",
         "A deliberately shifted delta must violate the axioms; the checker is required to catch it."},
        {"stone.dual-roundtrip",
         "Characters of the function algebra F_p^S biject with S via evaluation, for sets up to "
         "size 5."},
        {"stone.double-dual",
         "Dualizing a set map to an algebra map and back recovers the map, for all maps between "
         "sets of size at most 3."},
        {"stone.function-algebra",
         "Every p-Boolean algebra in the corpus is isomorphic to the function algebra on its "
         "character set (the evaluation map is injective with matching dimension)."},
        {"duality.roundtrip",
         "Points of a tower level are recovered as characters of the mod-p reduction of "
         "Cont(S_n, Z/p^m), for all corpus towers, levels and precisions."},
        {"duality.contravariance",
         "Function-ring maps at precision m dualize to set maps and back without loss, for all "
         "set maps between levels of size at most 3."},
        {"duality.witt-cont",
         "The digit map W_m(Cont(S, F_p)) -> Cont(S, Z/p^m), s |-> sum [f_i(s)] p^i with "
         "Teichmueller lifts, is a bijective ring homomorphism (exhaustive for small instances, "
         "seeded samples for the largest)."},
        {"flatness.correspondence",
         "For maps of function rings F_p^S -> F_p^T: faithfully flat, dual-map surjective, and "
         "ring-map injective are equivalent; the digitwise lift at precision m passes the "
         "p-complete check exactly when the reduction is faithfully flat."},
        {"site.roundtrip",
         "Finite families of set maps translate to function-ring maps and back; joint "
         "surjectivity corresponds exactly to faithful flatness of the product map."},
        {"site.mutation",
         "A family missing a target point must be rejected with a witness."},
        {"stone.characterization",
         "phi = id holds exactly when the canonical map to the coinvariants is p-completely "
         "faithfully flat (its mod-p reduction is injective), across Stone and non-Stone carriers."},
        {"adjunction.frobenius",
         "Hom-set bijections for the Frobenius invariants (right adjoint) and coinvariants (left "
         "adjoint) of the inclusion of p-Boolean algebras, by exhaustive map enumeration."},
        {"adjunction.perfection",
         "Hom-set bijections for perfection (right adjoint) and coperfection (left adjoint) of "
         "the inclusion of perfect algebras, by exhaustive map enumeration."},
        {"adjunction.delta",
         "Hom-set bijections for delta-invariants and delta-coinvariants against identity-lift "
         "carriers, by exhaustive enumeration of ring maps commuting with the lifts; the mod-p "
         "reduction of the invariants matches the Frobenius invariants of the reduction."},
        {"profinite.replete",
         "Towers with surjective transitions admit a compatible lifting chain for every level "
         "point; the chains are produced and re-verified."},
        {"profinite.fiber-product",
         "Levelwise fiber products of tower maps consist exactly of the agreeing pairs and "
         "satisfy the universal property against small test towers."},
        {"condensed.sheaf",
         "Representable presheaves and condensifications satisfy the equalizer sheaf condition "
         "on every cover of the standard finite site."},
        {"condensed.functoriality",
         "Tabulated restriction maps respect identities and all composites present in the site."},
        {"condensed.mutation",
         "A presheaf with a deliberately broken restriction table must fail the sheaf condition."},
        {"condensed.qcqs",
         "Quasicompactness: some representable surjects onto the sheaf. Quasiseparatedness: the "
         "fiber product of two maps into a presented quotient is stable under transitions; a "
         "transition-incompatible relation is flagged."},
        {"condensed.betti",
         "Maps from the dual set of a Stone-type carrier into a tower level correspond "
         "bijectively to ring maps Cont(K_n, Z/p^m) -> A commuting with the (identity) lifts; "
         "natural in A."},
        {"condensed.coequalizer",
         "For a presented quotient S/R, maps into the quotient agree with the coequalizer of "
         "maps into R and S, computed independently by union-find."},
    };
    return table;
}

inline std::string explain(const std::string& check_id) {
    const auto& t = explain_table();
    auto it = t.find(check_id);
    if (it == t.end()) throw std::invalid_argument("unknown check id: " + check_id);
    return it->second;
}

} // namespace wittstone::checks
