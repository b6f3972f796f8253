#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittstone/delta_duality.hpp"
#include "wittstone/tower.hpp"

namespace wittstone {

// ---------------------------------------------------------------------------
// Tower homs: levelwise maps commuting with transitions, enumerated in a
// deterministic (level-by-level lexicographic) order.
// ---------------------------------------------------------------------------

using TowerHom = std::vector<std::vector<std::size_t>>; // per level: U_n -> K_n

inline std::vector<TowerHom> enumerate_tower_homs(const Tower& u, const Tower& k) {
    if (u.depth() != k.depth())
        throw std::invalid_argument("enumerate_tower_homs: depth mismatch");
    std::vector<TowerHom> out;
    TowerHom cur(u.depth() + 1);
    // extend a partial hom defined on levels 0..n-1 by all commuting choices
    std::function<void(std::size_t)> extend = [&](std::size_t n) {
        if (n > u.depth()) {
            out.push_back(cur);
            return;
        }
        const std::size_t us = u.level_size(n), ks = k.level_size(n);
        if (ks == 0 && us > 0) return; // nowhere to map a nonempty level
        std::vector<std::size_t> f(us, 0);
        // odometer over all level maps, reject non-commuting ones
        while (true) {
            bool ok = true;
            if (n > 0)
                for (std::size_t i = 0; i < us && ok; ++i)
                    if (k.transition(n - 1, f[i]) != cur[n - 1][u.transition(n - 1, i)]) ok = false;
            if (ok) {
                cur[n] = f;
                extend(n + 1);
            }
            std::size_t pos = 0;
            while (pos < us && f[pos] + 1 == ks) f[pos++] = 0;
            if (pos == us) break; // for an empty level the body ran once: the empty map
            ++f[pos];
        }
    };
    extend(0);
    return out;
}

inline ProMap tower_hom_as_promap(const Tower& u, const Tower& k, const TowerHom& h) {
    std::vector<std::size_t> re(k.depth() + 1);
    for (std::size_t n = 0; n <= k.depth(); ++n) re[n] = n;
    return ProMap(u, k, re, h);
}

// ---------------------------------------------------------------------------
// Finite site: explicit objects (towers of one fixed depth), morphisms
// (pro-maps), and covers with precomputed fiber products.
// ---------------------------------------------------------------------------

struct SiteMorphism {
    std::size_t from, to;
    ProMap map;
};

struct CoverFiber {
    std::size_t object;    // the fiber-product tower, as a site object
    std::size_t to_first;  // morphism: fiber -> source of piece i
    std::size_t to_second; // morphism: fiber -> source of piece j
};

struct SiteCover {
    std::size_t target;
    std::vector<std::size_t> pieces;             // morphism ids into the target
    std::vector<std::vector<CoverFiber>> fibers; // per ordered pair of pieces
};

/// A finite sub-site of truncated towers. Covers are finite families that
/// are jointly surjective at every level; their pairwise fiber products are
/// adjoined as objects when a cover is added.
class FiniteSite {
public:
    FiniteSite(std::size_t depth, std::size_t working_level) : depth_(depth), level_(working_level) {
        if (working_level > depth) throw std::invalid_argument("FiniteSite: working level exceeds depth");
    }

    std::size_t depth() const { return depth_; }
    std::size_t working_level() const { return level_; }
    const std::vector<Tower>& objects() const { return objects_; }
    const std::vector<SiteMorphism>& morphisms() const { return morphisms_; }
    const std::vector<SiteCover>& covers() const { return covers_; }

    std::size_t add_object(Tower t) {
        if (t.depth() != depth_) throw std::invalid_argument("FiniteSite: object depth mismatch");
        objects_.push_back(std::move(t));
        std::size_t idx = objects_.size() - 1;
        add_morphism(idx, idx, ProMap::identity(objects_[idx]));
        return idx;
    }

    std::size_t add_morphism(std::size_t from, std::size_t to, ProMap m) {
        morphisms_.push_back(SiteMorphism{from, to, std::move(m)});
        return morphisms_.size() - 1;
    }

    /// Adds a cover given by morphism ids into a common target; validates
    /// levelwise joint surjectivity and adjoins all pairwise fiber products.
    std::size_t add_cover(std::size_t target, std::vector<std::size_t> piece_ids) {
        if (piece_ids.empty()) throw std::invalid_argument("FiniteSite: empty cover");
        const Tower& t = objects_.at(target);
        for (auto id : piece_ids)
            if (morphisms_.at(id).to != target)
                throw std::invalid_argument("FiniteSite: cover piece does not land in the target");
        for (std::size_t n = 0; n <= t.depth(); ++n) {
            std::vector<bool> hit(t.level_size(n), false);
            for (auto id : piece_ids) {
                const ProMap& f = morphisms_[id].map;
                const Tower& src = objects_[morphisms_[id].from];
                for (std::size_t i = 0; i < src.level_size(f.reindex()[n]); ++i) hit[f.apply(n, i)] = true;
            }
            for (bool h : hit)
                if (!h) throw std::invalid_argument("FiniteSite: cover not jointly surjective at level " +
                                                    std::to_string(n));
        }
        SiteCover c;
        c.target = target;
        c.pieces = piece_ids;
        c.fibers.resize(piece_ids.size(), std::vector<CoverFiber>(piece_ids.size()));
        for (std::size_t i = 0; i < piece_ids.size(); ++i)
            for (std::size_t j = 0; j < piece_ids.size(); ++j) {
                TowerFiberProduct fp =
                    tower_fiber_product(morphisms_[piece_ids[i]].map, morphisms_[piece_ids[j]].map);
                objects_.push_back(fp.product);
                std::size_t obj = objects_.size() - 1;
                add_morphism(obj, obj, ProMap::identity(objects_[obj]));
                std::size_t m1 = add_morphism(obj, morphisms_[piece_ids[i]].from, fp.to_first);
                std::size_t m2 = add_morphism(obj, morphisms_[piece_ids[j]].from, fp.to_second);
                c.fibers[i][j] = CoverFiber{obj, m1, m2};
            }
        covers_.push_back(std::move(c));
        return covers_.size() - 1;
    }

private:
    std::size_t depth_, level_;
    std::vector<Tower> objects_;
    std::vector<SiteMorphism> morphisms_;
    std::vector<SiteCover> covers_;
};

// ---------------------------------------------------------------------------
// Presheaves: a functional form (values computable on any tower, restriction
// along any pro-map) and a tabulated form on a fixed site.
// ---------------------------------------------------------------------------

/// A set-valued presheaf given functionally: X(U) is {0, ..., count(U)-1},
/// restriction along g: V -> U sends an index in X(U) to one in X(V).
struct ConcretePresheaf {
    std::function<std::size_t(const Tower&)> count;
    std::function<std::size_t(const Tower&, const Tower&, const ProMap&, std::size_t)> restrict_along;
    // (source V, target U, g: V -> U, x in X(U)) -> X(V)
};

/// Value-set sizes per site object and a restriction table per site
/// morphism (contravariant: the table of morphism f: A -> B maps X(B) to
/// X(A)).
struct PresheafApprox {
    std::vector<std::size_t> value_count;
    std::vector<std::vector<std::size_t>> restriction;
};

inline PresheafApprox tabulate_presheaf(const FiniteSite& site, const ConcretePresheaf& x) {
    PresheafApprox p;
    for (const auto& obj : site.objects()) p.value_count.push_back(x.count(obj));
    for (const auto& m : site.morphisms()) {
        std::vector<std::size_t> table(p.value_count[m.to]);
        for (std::size_t v = 0; v < table.size(); ++v)
            table[v] = x.restrict_along(site.objects()[m.from], site.objects()[m.to], m.map, v);
        p.restriction.push_back(std::move(table));
    }
    return p;
}

struct CheckReportC {
    bool passed = true;
    std::string witness;
};

/// Functoriality of a tabulated presheaf: identities act as the identity,
/// and whenever a listed morphism equals a composite of two listed
/// morphisms, the restriction tables compose accordingly.
inline CheckReportC check_presheaf_functoriality(const FiniteSite& site, const PresheafApprox& x) {
    CheckReportC rep;
    const auto& ms = site.morphisms();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i].from == ms[i].to && promap_equal(ms[i].map, ProMap::identity(site.objects()[ms[i].from]))) {
            for (std::size_t v = 0; v < x.value_count[ms[i].to]; ++v)
                if (x.restriction[i][v] != v) {
                    rep.passed = false;
                    rep.witness = "identity morphism " + std::to_string(i) + " does not restrict trivially";
                    return rep;
                }
        }
    }
    for (std::size_t f = 0; f < ms.size(); ++f)
        for (std::size_t g = 0; g < ms.size(); ++g) {
            if (ms[f].to != ms[g].from) continue;
            ProMap comp = compose(ms[g].map, ms[f].map);
            for (std::size_t h = 0; h < ms.size(); ++h) {
                if (ms[h].from != ms[f].from || ms[h].to != ms[g].to) continue;
                if (!promap_equal(ms[h].map, comp)) continue;
                for (std::size_t v = 0; v < x.value_count[ms[g].to]; ++v)
                    if (x.restriction[h][v] != x.restriction[f][x.restriction[g][v]]) {
                        rep.passed = false;
                        rep.witness = "restriction tables fail to compose on morphisms " + std::to_string(f) +
                                      ", " + std::to_string(g);
                        return rep;
                    }
            }
        }
    return rep;
}

/// The sheaf condition for one cover: X(T) -> Prod X(T_i) equalizes the two
/// maps to Prod X(T_i x_T T_j), bijectively onto the compatible families.
inline CheckReportC sheaf_check(const FiniteSite& site, const PresheafApprox& x, std::size_t cover_idx) {
    CheckReportC rep;
    const SiteCover& c = site.covers().at(cover_idx);
    const std::size_t k = c.pieces.size();
    std::vector<std::size_t> piece_obj(k), piece_count(k);
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < k; ++i) {
        piece_obj[i] = site.morphisms()[c.pieces[i]].from;
        piece_count[i] = x.value_count[piece_obj[i]];
        if (piece_count[i] != 0 && tuples > 1000000 / piece_count[i])
            throw std::invalid_argument("sheaf_check: tuple space too large");
        tuples *= piece_count[i];
    }
    auto compatible = [&](const std::vector<std::size_t>& xs) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const CoverFiber& fb = c.fibers[i][j];
                if (x.restriction[fb.to_first][xs[i]] != x.restriction[fb.to_second][xs[j]]) return false;
            }
        return true;
    };
    // image of X(T), with injectivity
    std::map<std::vector<std::size_t>, std::size_t> image;
    for (std::size_t s = 0; s < x.value_count[c.target]; ++s) {
        std::vector<std::size_t> xs(k);
        for (std::size_t i = 0; i < k; ++i) xs[i] = x.restriction[c.pieces[i]][s];
        auto [it, fresh] = image.emplace(xs, s);
        if (!fresh) {
            rep.passed = false;
            rep.witness = "sections " + std::to_string(it->second) + " and " + std::to_string(s) +
                          " of the target restrict identically";
            return rep;
        }
        if (!compatible(xs)) {
            rep.passed = false;
            rep.witness = "restriction of section " + std::to_string(s) + " is not a compatible family";
            return rep;
        }
    }
    // every compatible family is hit
    std::vector<std::size_t> xs(k, 0);
    for (std::size_t code = 0; code < tuples; ++code) {
        std::size_t cc = code;
        for (std::size_t i = 0; i < k; ++i) {
            xs[i] = piece_count[i] ? cc % piece_count[i] : 0;
            cc = piece_count[i] ? cc / piece_count[i] : cc;
        }
        if (compatible(xs) && !image.count(xs)) {
            rep.passed = false;
            rep.witness = "compatible family not glued (tuple code " + std::to_string(code) + ")";
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Standard presheaves: representables and condensifications.
// ---------------------------------------------------------------------------

/// Hom(-, K) as a functional presheaf; values are tower homs in the
/// deterministic enumeration order.
inline ConcretePresheaf representable_presheaf(const Tower& k) {
    auto count = [k](const Tower& u) { return enumerate_tower_homs(u, k).size(); };
    auto restrict_along = [k](const Tower& v, const Tower& u, const ProMap& g, std::size_t idx) {
        auto homs_u = enumerate_tower_homs(u, k);
        auto homs_v = enumerate_tower_homs(v, k);
        ProMap h = tower_hom_as_promap(u, k, homs_u.at(idx));
        ProMap comp = compose(h, g);
        for (std::size_t i = 0; i < homs_v.size(); ++i)
            if (promap_equal(tower_hom_as_promap(v, k, homs_v[i]), comp)) return i;
        throw std::logic_error("representable_presheaf: composite hom not found");
    };
    return ConcretePresheaf{count, restrict_along};
}

/// Maps from the working level into a fixed finite set, encoded base-k;
/// the condensification of a finite discrete set at finite level.
inline ConcretePresheaf condensify_discrete(std::size_t k, std::size_t working_level) {
    if (k == 0) throw std::invalid_argument("condensify_discrete: empty set");
    auto count = [k, working_level](const Tower& u) {
        std::size_t n = 1;
        for (std::size_t i = 0; i < u.level_size(working_level); ++i) {
            if (n > 1000000 / k) throw std::overflow_error("condensify_discrete: value set too large");
            n *= k;
        }
        return n;
    };
    auto restrict_along = [k, working_level](const Tower& v, const Tower& u, const ProMap& g, std::size_t idx) {
        // decode f: U_n -> k, precompose with g at the working level
        std::vector<std::size_t> f(u.level_size(working_level));
        for (std::size_t i = 0; i < f.size(); ++i) {
            f[i] = idx % k;
            idx /= k;
        }
        std::size_t out = 0, pw = 1;
        for (std::size_t i = 0; i < v.level_size(working_level); ++i) {
            out += f[g.apply_from(working_level, working_level, i)] * pw;
            pw *= k;
        }
        return out;
    };
    return ConcretePresheaf{count, restrict_along};
}

/// Condensification of a presented quotient S/R at the working level: maps
/// into the level quotient of S by the (closed) pair list.
inline ConcretePresheaf condensify_quotient(const Tower& s,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& closed_pairs,
                                            std::size_t working_level) {
    LevelQuotient q = level_quotient(s.level_size(working_level), closed_pairs);
    return condensify_discrete(q.class_count, working_level);
}

// ---------------------------------------------------------------------------
// qc / qs.
// ---------------------------------------------------------------------------

/// Quasicompactness over the site: some object T and section x in X(T) such
/// that restrictions of x along all tower homs U -> T exhaust X(U) for every
/// site object U (a levelwise surjection from a representable).
inline bool qc_check(const FiniteSite& site, const ConcretePresheaf& x,
                     std::size_t* witness_object = nullptr, std::size_t* witness_section = nullptr) {
    for (std::size_t t = 0; t < site.objects().size(); ++t) {
        const Tower& tt = site.objects()[t];
        const std::size_t xt = x.count(tt);
        for (std::size_t sec = 0; sec < xt; ++sec) {
            bool all = true;
            for (std::size_t u = 0; u < site.objects().size() && all; ++u) {
                const Tower& uu = site.objects()[u];
                std::vector<bool> hit(x.count(uu), false);
                for (const auto& h : enumerate_tower_homs(uu, tt))
                    hit[x.restrict_along(uu, tt, tower_hom_as_promap(uu, tt, h), sec)] = true;
                for (bool b : hit)
                    if (!b) { all = false; break; }
            }
            if (all) {
                if (witness_object) *witness_object = t;
                if (witness_section) *witness_section = sec;
                return true;
            }
        }
    }
    return false;
}

/// Quasiseparatedness for a presented quotient: the levelwise fiber product
/// of two maps into the quotient, checked to be stable under transitions
/// (the finite-level shadow of being a closed subset).
struct QsReport {
    bool passed = true;
    std::string witness;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> fiber; // per level
};

inline QsReport qs_check_presented(
    const Tower& t1, const Tower& t2, const Tower& s,
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& rel_pairs, // closed, per level of s
    const std::vector<std::vector<std::size_t>>& f, // per level: T1_k -> S_k
    const std::vector<std::vector<std::size_t>>& g) // per level: T2_k -> S_k
{
    if (t1.depth() != s.depth() || t2.depth() != s.depth())
        throw std::invalid_argument("qs_check_presented: depth mismatch");
    if (f.size() != s.depth() + 1 || g.size() != s.depth() + 1 || rel_pairs.size() != s.depth() + 1)
        throw std::invalid_argument("qs_check_presented: need data at every level");
    QsReport rep;
    std::vector<LevelQuotient> q;
    for (std::size_t n = 0; n <= s.depth(); ++n) q.push_back(level_quotient(s.level_size(n), rel_pairs[n]));
    rep.fiber.resize(s.depth() + 1);
    for (std::size_t n = 0; n <= s.depth(); ++n)
        for (std::size_t a = 0; a < t1.level_size(n); ++a)
            for (std::size_t b = 0; b < t2.level_size(n); ++b)
                if (q[n].class_of[f[n].at(a)] == q[n].class_of[g[n].at(b)]) rep.fiber[n].push_back({a, b});
    for (std::size_t n = 1; n <= s.depth(); ++n)
        for (auto [a, b] : rep.fiber[n]) {
            std::size_t ta = t1.transition(n - 1, a), tb = t2.transition(n - 1, b);
            bool found = false;
            for (auto pr : rep.fiber[n - 1])
                if (pr == std::make_pair(ta, tb)) { found = true; break; }
            if (!found) {
                rep.passed = false;
                rep.witness = "pair (" + std::to_string(a) + "," + std::to_string(b) + ") at level " +
                              std::to_string(n) + " transitions outside the fiber";
                return rep;
            }
        }
    return rep;
}

/// Objectwise coequalizer comparison at one object: maps U -> S modulo the
/// relation-induced identifications, against maps U -> S/R. The generated
/// equivalence is computed independently by union-find over all maps into
/// the pair set; agreement with the pointwise-class criterion is the check.
struct CoeqReport {
    bool passed = true;
    std::string witness;
    std::size_t coeq_classes = 0;
    std::size_t quotient_maps = 0;
};

inline CoeqReport coequalizer_check(std::size_t u_size, std::size_t s_size,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& closed_pairs) {
    CoeqReport rep;
    LevelQuotient q = level_quotient(s_size, closed_pairs);
    std::size_t total = 1;
    for (std::size_t i = 0; i < u_size; ++i) {
        if (total > 2000000 / s_size) throw std::invalid_argument("coequalizer_check: map space too large");
        total *= s_size;
    }
    auto encode = [&](const std::vector<std::size_t>& m) {
        std::size_t c = 0, pw = 1;
        for (auto v : m) {
            c += v * pw;
            pw *= s_size;
        }
        return c;
    };
    // union-find generators: for every map h: U -> R (pair list), identify
    // r1 . h with r2 . h
    UnionFind uf(total);
    std::size_t hcount = 1;
    for (std::size_t i = 0; i < u_size; ++i) {
        if (hcount > 2000000 / closed_pairs.size())
            throw std::invalid_argument("coequalizer_check: relation map space too large");
        hcount *= closed_pairs.size();
    }
    for (std::size_t code = 0; code < hcount; ++code) {
        std::size_t cc = code;
        std::vector<std::size_t> m1(u_size), m2(u_size);
        for (std::size_t i = 0; i < u_size; ++i) {
            auto [a, b] = closed_pairs[cc % closed_pairs.size()];
            cc /= closed_pairs.size();
            m1[i] = a;
            m2[i] = b;
        }
        uf.unite(encode(m1), encode(m2));
    }
    rep.coeq_classes = uf.count();
    rep.quotient_maps = 1;
    for (std::size_t i = 0; i < u_size; ++i) rep.quotient_maps *= q.class_count;
    if (rep.coeq_classes != rep.quotient_maps) {
        rep.passed = false;
        rep.witness = "coequalizer has " + std::to_string(rep.coeq_classes) + " classes, quotient maps " +
                      std::to_string(rep.quotient_maps);
        return rep;
    }
    // the canonical map (postcompose with S -> S/R) must separate exactly
    // the coequalizer classes
    std::vector<std::size_t> m(u_size, 0);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t cc = code;
        for (std::size_t i = 0; i < u_size; ++i) {
            m[i] = cc % s_size;
            cc /= s_size;
        }
        for (std::size_t code2 = 0; code2 < code; ++code2) {
            std::size_t c2 = code2;
            std::vector<std::size_t> m2(u_size);
            for (std::size_t i = 0; i < u_size; ++i) {
                m2[i] = c2 % s_size;
                c2 /= s_size;
            }
            bool same_class = true;
            for (std::size_t i = 0; i < u_size; ++i)
                if (q.class_of[m[i]] != q.class_of[m2[i]]) { same_class = false; break; }
            if (same_class != uf.same(code, code2)) {
                rep.passed = false;
                rep.witness = "map codes " + std::to_string(code2) + " and " + std::to_string(code) +
                              " disagree between coequalizer and quotient";
                return rep;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// psi pushforward and the Betti comparison.
// ---------------------------------------------------------------------------

/// Evaluates a presheaf at the dual finite set of a Stone-type delta-ring
/// (as a constant tower at the site depth): the pushforward along
/// A |-> points of Spec(A/p).
struct PsiPushforward {
    Tower dual_tower;
    std::size_t value_count;
};

inline PsiPushforward psi_pushforward(const ConcretePresheaf& x, const StoneDeltaApprox& a,
                                      std::size_t depth) {
    PsiResult points = psi_functor(a);
    Tower dual = Tower::discrete(points.dual.points.size(), depth);
    std::size_t v = x.count(dual);
    return PsiPushforward{std::move(dual), v};
}

/// The Betti comparison at finite level: maps from the dual set of A into
/// K_n correspond bijectively to delta-ring maps Cont(K_n, Z/p^m) -> A
/// (both lifts are the identity, so delta-maps are just ring maps, and ring
/// maps of such function rings are exactly duals of set maps).
struct BettiReport {
    bool passed = true;
    std::size_t lhs_count = 0; // maps dual(A) -> K_n
    std::size_t rhs_count = 0; // validated ring maps Cont(K_n, Z/p^m) -> A
    std::string witness;
};

inline BettiReport betti_delta_check(const Tower& k, std::size_t n, const StoneDeltaApprox& a,
                                     std::size_t hom_pair_cap = 256) {
    BettiReport rep;
    const std::size_t kn = k.level_size(n);
    const std::size_t s = a.set_size();
    const Prime p = a.prime();
    FunctionRing src(kn, ZmodRing(p, a.precision()));
    const FunctionRing& tgt = a.ring();

    std::size_t lhs = 1;
    for (std::size_t i = 0; i < s; ++i) lhs *= kn;
    rep.lhs_count = lhs;

    // each set map dual(A) -> K_n induces a candidate ring map by
    // precomposition; validate it really is one
    for (std::size_t code = 0; code < lhs; ++code) {
        std::size_t cc = code;
        FunctionRingMap m;
        m.source_size = kn;
        m.target_size = s;
        for (std::size_t i = 0; i < s; ++i) {
            m.dual.push_back(cc % kn);
            cc /= kn;
        }
        auto apply = [&](const FunctionRing::Elem& v) { return m.apply(src, tgt, v); };
        if (!tgt.eq(apply(src.one()), tgt.one())) {
            rep.witness = "unit fails for dual map code " + std::to_string(code);
            rep.passed = false;
            return rep;
        }
        const std::size_t total = src.size();
        const std::size_t stride = total <= hom_pair_cap ? 1 : (total / hom_pair_cap ? total / hom_pair_cap : 1);
        for (std::size_t i = 0; i < total; i += stride)
            for (std::size_t j = 0; j < total; j += stride) {
                auto xi = src.element(i), xj = src.element(j);
                if (!tgt.eq(apply(src.add(xi, xj)), tgt.add(apply(xi), apply(xj))) ||
                    !tgt.eq(apply(src.mul(xi, xj)), tgt.mul(apply(xi), apply(xj)))) {
                    rep.witness = "homomorphism fails for dual map code " + std::to_string(code);
                    rep.passed = false;
                    return rep;
                }
            }
        ++rep.rhs_count;
    }
    // distinctness: different duals act differently on indicator functions
    // (the indicator of a point of K_n pulls back to the indicator of its
    // preimage), so rhs_count counts distinct maps
    if (rep.lhs_count != rep.rhs_count) {
        rep.passed = false;
        rep.witness = "counts differ";
    }
    return rep;
}

} // namespace wittstone
