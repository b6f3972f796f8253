#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittstone/function_ring.hpp"
#include "wittstone/union_find.hpp"

namespace wittstone {

/// A light profinite set truncated at depth N: finite levels S_0..S_N with
/// total transition maps t_n: S_{n+1} -> S_n. Every statement about "the"
/// profinite set is a statement about this truncation.
class Tower {
public:
    Tower(std::vector<std::vector<std::string>> levels,
          std::vector<std::vector<std::size_t>> transitions)
        : levels_(std::move(levels)), transitions_(std::move(transitions)) {
        if (levels_.empty()) throw std::invalid_argument("Tower: need at least one level");
        if (transitions_.size() + 1 != levels_.size())
            throw std::invalid_argument("Tower: transition count must be depth");
        for (std::size_t n = 0; n < transitions_.size(); ++n) {
            if (transitions_[n].size() != levels_[n + 1].size())
                throw std::invalid_argument("Tower: transition arity mismatch");
            for (auto t : transitions_[n])
                if (t >= levels_[n].size())
                    throw std::invalid_argument("Tower: transition target out of range");
            // totality forces: an empty level admits no points above it
            if (levels_[n].empty() && !levels_[n + 1].empty())
                throw std::invalid_argument("Tower: nonempty level above an empty one");
        }
    }

    std::size_t depth() const { return levels_.size() - 1; }
    std::size_t level_size(std::size_t n) const { return levels_.at(n).size(); }
    const std::vector<std::string>& level_labels(std::size_t n) const { return levels_.at(n); }
    const std::vector<std::vector<std::size_t>>& transitions() const { return transitions_; }

    /// t_n applied to an index of S_{n+1}.
    std::size_t transition(std::size_t n, std::size_t i) const { return transitions_.at(n).at(i); }

    /// Composite transition S_a -> S_b for b <= a.
    std::size_t project(std::size_t a, std::size_t b, std::size_t i) const {
        if (b > a) throw std::invalid_argument("Tower::project: b > a");
        for (std::size_t n = a; n > b; --n) i = transition(n - 1, i);
        return i;
    }

    bool is_empty() const { return levels_[0].empty(); }

    /// All-transitions-surjective flag.
    bool transitions_surjective() const {
        for (std::size_t n = 0; n < transitions_.size(); ++n) {
            std::vector<bool> hit(levels_[n].size(), false);
            for (auto t : transitions_[n]) hit[t] = true;
            for (bool h : hit)
                if (!h) return false;
        }
        return true;
    }

    /// The constant one-point tower at the given depth.
    static Tower point(std::size_t depth) {
        std::vector<std::vector<std::string>> levels(depth + 1, {"*"});
        std::vector<std::vector<std::size_t>> trans(depth, {0});
        return Tower(levels, trans);
    }

    /// The constant discrete tower on k points (identity transitions).
    static Tower discrete(std::size_t k, std::size_t depth) {
        std::vector<std::string> lvl;
        for (std::size_t i = 0; i < k; ++i) lvl.push_back(std::to_string(i));
        std::vector<std::size_t> id(k);
        for (std::size_t i = 0; i < k; ++i) id[i] = i;
        return Tower(std::vector<std::vector<std::string>>(depth + 1, lvl),
                     std::vector<std::vector<std::size_t>>(depth, id));
    }

private:
    std::vector<std::vector<std::string>> levels_;
    std::vector<std::vector<std::size_t>> transitions_;
};

/// Stable points of the truncation at level n: the image of the deepest
/// level. A depth-N compatible family is exactly a point of S_N, so this is
/// project(N, n, -) applied to all of S_N.
inline std::vector<std::size_t> tower_limit_elements(const Tower& t, std::size_t n) {
    std::vector<bool> hit(t.level_size(n), false);
    for (std::size_t i = 0; i < t.level_size(t.depth()); ++i) hit[t.project(t.depth(), n, i)] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < hit.size(); ++i)
        if (hit[i]) out.push_back(i);
    return out;
}

/// Lifting witness: for a point at level n, a compatible chain up to depth N.
struct LiftWitness {
    std::size_t level;
    std::size_t point;
    std::vector<std::size_t> chain; // indices at levels n..N
};

/// True iff every transition is surjective. When true, every level point is
/// hit by a depth-N compatible family; the witnesses are constructed
/// level-by-level and returned.
inline bool check_sequential_surjectivity(const Tower& t, std::vector<LiftWitness>* witnesses = nullptr) {
    if (!t.transitions_surjective()) return false;
    if (witnesses) {
        for (std::size_t n = 0; n <= t.depth(); ++n) {
            for (std::size_t i = 0; i < t.level_size(n); ++i) {
                LiftWitness w{n, i, {i}};
                std::size_t cur = i;
                for (std::size_t lv = n; lv < t.depth(); ++lv) {
                    // first preimage, deterministic
                    std::size_t next = SIZE_MAX;
                    for (std::size_t j = 0; j < t.level_size(lv + 1); ++j)
                        if (t.transition(lv, j) == cur) { next = j; break; }
                    if (next == SIZE_MAX) return false; // unreachable: transitions are onto
                    w.chain.push_back(next);
                    cur = next;
                }
                witnesses->push_back(std::move(w));
            }
        }
    }
    return true;
}

/// A strict map of truncated pro-objects: a strictly increasing reindexing
/// g and level maps f_n : A_{g(n)} -> B_n commuting with transitions.
class ProMap {
public:
    ProMap(Tower source, Tower target, std::vector<std::size_t> reindex,
           std::vector<std::vector<std::size_t>> level_maps)
        : source_(std::move(source)), target_(std::move(target)),
          reindex_(std::move(reindex)), maps_(std::move(level_maps)) {
        if (reindex_.size() != target_.depth() + 1 || maps_.size() != target_.depth() + 1)
            throw std::invalid_argument("ProMap: need one level map per target level");
        for (std::size_t n = 0; n < reindex_.size(); ++n) {
            if (reindex_[n] > source_.depth())
                throw std::invalid_argument("ProMap: reindex exceeds source depth");
            if (n > 0 && reindex_[n] <= reindex_[n - 1])
                throw std::invalid_argument("ProMap: reindexing must be strictly increasing");
            if (maps_[n].size() != source_.level_size(reindex_[n]))
                throw std::invalid_argument("ProMap: level map arity mismatch");
            for (auto v : maps_[n])
                if (v >= target_.level_size(n))
                    throw std::invalid_argument("ProMap: level map value out of range");
        }
        for (std::size_t n = 0; n + 1 <= target_.depth(); ++n) {
            for (std::size_t i = 0; i < source_.level_size(reindex_[n + 1]); ++i) {
                std::size_t via_target = target_.transition(n, maps_[n + 1][i]);
                std::size_t via_source = maps_[n][source_.project(reindex_[n + 1], reindex_[n], i)];
                if (via_target != via_source)
                    throw std::invalid_argument("ProMap: level maps do not commute with transitions");
            }
        }
    }

    const Tower& source() const { return source_; }
    const Tower& target() const { return target_; }
    const std::vector<std::size_t>& reindex() const { return reindex_; }

    /// f_n applied to an index of A_{g(n)}.
    std::size_t apply(std::size_t n, std::size_t i) const { return maps_.at(n).at(i); }

    /// The induced map A_m -> B_n for any source level m >= g(n).
    std::size_t apply_from(std::size_t n, std::size_t source_level, std::size_t i) const {
        return maps_.at(n).at(source_.project(source_level, reindex_[n], i));
    }

    static ProMap identity(const Tower& t) {
        std::vector<std::size_t> re(t.depth() + 1);
        std::vector<std::vector<std::size_t>> maps(t.depth() + 1);
        for (std::size_t n = 0; n <= t.depth(); ++n) {
            re[n] = n;
            maps[n].resize(t.level_size(n));
            for (std::size_t i = 0; i < t.level_size(n); ++i) maps[n][i] = i;
        }
        return ProMap(t, t, re, maps);
    }

    /// Levelwise map at matching levels (reindex n -> n).
    static ProMap levelwise(const Tower& a, const Tower& b, std::vector<std::vector<std::size_t>> maps) {
        if (a.depth() < b.depth())
            throw std::invalid_argument("ProMap::levelwise: source depth too small");
        std::vector<std::size_t> re(b.depth() + 1);
        for (std::size_t n = 0; n <= b.depth(); ++n) re[n] = n;
        return ProMap(a, b, re, std::move(maps));
    }

    friend ProMap compose(const ProMap& g, const ProMap& f) { // g after f
        std::vector<std::size_t> re(g.target_.depth() + 1);
        std::vector<std::vector<std::size_t>> maps(g.target_.depth() + 1);
        for (std::size_t n = 0; n <= g.target_.depth(); ++n) {
            re[n] = f.reindex_[g.reindex_[n]];
            maps[n].resize(f.source_.level_size(re[n]));
            for (std::size_t i = 0; i < maps[n].size(); ++i)
                maps[n][i] = g.maps_[n][f.maps_[g.reindex_[n]][i]];
        }
        return ProMap(f.source_, g.target_, re, maps);
    }

    /// Equality after reindexing to a common cofinal truncation.
    friend bool promap_equal(const ProMap& a, const ProMap& b) {
        if (a.target_.depth() != b.target_.depth()) return false;
        for (std::size_t n = 0; n <= a.target_.depth(); ++n) {
            std::size_t m = std::max(a.reindex_[n], b.reindex_[n]);
            if (m > a.source_.depth() || m > b.source_.depth()) return false;
            if (a.source_.level_size(m) != b.source_.level_size(m)) return false;
            for (std::size_t i = 0; i < a.source_.level_size(m); ++i)
                if (a.apply_from(n, m, i) != b.apply_from(n, m, i)) return false;
        }
        return true;
    }

private:
    Tower source_, target_;
    std::vector<std::size_t> reindex_;
    std::vector<std::vector<std::size_t>> maps_;
};

/// Levelwise product tower, with the two projections.
struct TowerProduct {
    Tower product;
    ProMap to_first;
    ProMap to_second;
};

inline TowerProduct tower_product(const Tower& a, const Tower& b) {
    std::size_t depth = std::min(a.depth(), b.depth());
    std::vector<std::vector<std::string>> levels(depth + 1);
    std::vector<std::vector<std::size_t>> trans(depth);
    std::vector<std::vector<std::size_t>> p1(depth + 1), p2(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t i = 0; i < a.level_size(n); ++i)
            for (std::size_t j = 0; j < b.level_size(n); ++j) {
                levels[n].push_back("(" + a.level_labels(n)[i] + "|" + b.level_labels(n)[j] + ")");
                p1[n].push_back(i);
                p2[n].push_back(j);
                if (n > 0) {
                    std::size_t ti = a.transition(n - 1, i), tj = b.transition(n - 1, j);
                    trans[n - 1].push_back(ti * b.level_size(n - 1) + tj);
                }
            }
    }
    Tower prod(levels, trans);
    std::vector<std::size_t> re(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) re[n] = n;
    // projections valid only up to the common depth
    auto trunc = [&](const Tower& t) {
        std::vector<std::vector<std::string>> lv;
        std::vector<std::vector<std::size_t>> tr;
        for (std::size_t n = 0; n <= depth; ++n) lv.push_back(t.level_labels(n));
        for (std::size_t n = 0; n < depth; ++n) tr.push_back(t.transitions()[n]);
        return Tower(lv, tr);
    };
    return TowerProduct{prod, ProMap(prod, trunc(a), re, p1), ProMap(prod, trunc(b), re, p2)};
}

/// Levelwise fiber product of f: A -> C and g: B -> C, with projections.
/// Levels are the pairs agreeing in C after reindexing both sides to the
/// level max(g_f(n), g_g(n)) of their sources.
struct TowerFiberProduct {
    Tower product;
    ProMap to_first;
    ProMap to_second;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs; // per level
};

inline TowerFiberProduct tower_fiber_product(const ProMap& f, const ProMap& g) {
    if (f.target().depth() != g.target().depth())
        throw std::invalid_argument("tower_fiber_product: mismatched target depths");
    const Tower& a = f.source();
    const Tower& b = g.source();
    std::size_t depth = f.target().depth();
    std::vector<std::vector<std::string>> levels(depth + 1);
    std::vector<std::vector<std::size_t>> trans(depth);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(depth + 1);
    std::vector<std::vector<std::size_t>> p1(depth + 1), p2(depth + 1);
    // pairs at level n live where the level maps are defined
    const std::vector<std::size_t>& la = f.reindex();
    const std::vector<std::size_t>& lb = g.reindex();
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t i = 0; i < a.level_size(la[n]); ++i)
            for (std::size_t j = 0; j < b.level_size(lb[n]); ++j) {
                if (f.apply(n, i) != g.apply(n, j)) continue;
                levels[n].push_back("(" + a.level_labels(la[n])[i] + "|" + b.level_labels(lb[n])[j] + ")");
                pairs[n].push_back({i, j});
                p1[n].push_back(i);
                p2[n].push_back(j);
            }
        if (n > 0) {
            for (auto [i, j] : pairs[n]) {
                std::size_t ti = a.project(la[n], la[n - 1], i);
                std::size_t tj = b.project(lb[n], lb[n - 1], j);
                std::size_t idx = SIZE_MAX;
                for (std::size_t k = 0; k < pairs[n - 1].size(); ++k)
                    if (pairs[n - 1][k] == std::make_pair(ti, tj)) { idx = k; break; }
                if (idx == SIZE_MAX)
                    throw std::logic_error("tower_fiber_product: pair transition escaped the fiber product");
                trans[n - 1].push_back(idx);
            }
        }
    }
    Tower prod(levels, trans);
    return TowerFiberProduct{prod, ProMap(prod, a, la, p1), ProMap(prod, b, lb, p2), pairs};
}

/// The convergent-sequence tower: level n is {1,..,n,inf}; the transition
/// sends i to i for i <= n and everything else to inf.
inline Tower canonical_ntilde(std::size_t depth) {
    std::vector<std::vector<std::string>> levels(depth + 1);
    std::vector<std::vector<std::size_t>> trans(depth);
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t i = 1; i <= n; ++i) levels[n].push_back(std::to_string(i));
        levels[n].push_back("inf");
        if (n > 0) {
            // level n has indices 0..n-1 for 1..n and n for inf
            for (std::size_t i = 0; i < n; ++i) trans[n - 1].push_back(i < n - 1 ? i : n - 1);
            trans[n - 1].push_back(n - 1); // inf -> inf
        }
    }
    return Tower(levels, trans);
}

/// The Cantor tower: level n is {0,1}^n, transitions forget the last bit.
inline Tower canonical_cantor(std::size_t depth) {
    std::vector<std::vector<std::string>> levels(depth + 1);
    std::vector<std::vector<std::size_t>> trans(depth);
    levels[0].push_back("");
    for (std::size_t n = 1; n <= depth; ++n) {
        for (std::size_t i = 0; i < (std::size_t(1) << n); ++i) {
            std::string s;
            for (std::size_t b = 0; b < n; ++b) s += ((i >> b) & 1) ? '1' : '0';
            levels[n].push_back(s); // bit b is the (b+1)-st coordinate
            trans[n - 1].push_back(i & ((std::size_t(1) << (n - 1)) - 1));
        }
    }
    return Tower(levels, trans);
}

/// A quotient presentation: a tower S with a relation tower R and two
/// pro-maps r1, r2 : R -> S whose image at each level must be an
/// equivalence relation.
struct EquivRelPresentation {
    Tower base;
    Tower relation;
    ProMap r1;
    ProMap r2;
};

/// The identified pairs at a level: the image of (r1, r2) in S_n x S_n.
inline std::vector<std::pair<std::size_t, std::size_t>> relation_pairs(const EquivRelPresentation& p,
                                                                       std::size_t n) {
    std::size_t m = std::max(p.r1.reindex()[n], p.r2.reindex()[n]);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < p.relation.level_size(m); ++i)
        out.push_back({p.r1.apply_from(n, m, i), p.r2.apply_from(n, m, i)});
    return out;
}

/// Whether a pair list on a set of size s is reflexive, symmetric and
/// transitive as a relation.
inline bool pairs_are_equivalence(std::size_t s,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::vector<bool>> rel(s, std::vector<bool>(s, false));
    for (auto [x, y] : pairs) rel[x][y] = true;
    for (std::size_t i = 0; i < s; ++i)
        if (!rel[i][i]) return false;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (rel[i][j] != rel[j][i]) return false;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t k = 0; k < s; ++k)
                if (rel[i][j] && rel[j][k] && !rel[i][k]) return false;
    return true;
}

/// Closes listed pairs under reflexivity and symmetry. Fixture pair lists
/// are shipped minimal; the diagonal and the flips are implied.
inline std::vector<std::pair<std::size_t, std::size_t>> close_pairs(
    std::size_t s, const std::vector<std::pair<std::size_t, std::size_t>>& listed) {
    std::vector<std::vector<bool>> rel(s, std::vector<bool>(s, false));
    for (std::size_t i = 0; i < s; ++i) rel[i][i] = true;
    for (auto [x, y] : listed) rel[x][y] = rel[y][x] = true;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (rel[i][j]) out.push_back({i, j});
    return out;
}

/// Level-n quotient S_n / R_n: canonical class ids (numbered by smallest
/// member) and the quotient surjection.
struct LevelQuotient {
    std::size_t class_count;
    std::vector<std::size_t> class_of; // index in S_n -> class id
};

inline LevelQuotient level_quotient(std::size_t s,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    if (!pairs_are_equivalence(s, pairs))
        throw std::invalid_argument("level_quotient: relation is not an equivalence at this level");
    UnionFind uf(s);
    for (auto [x, y] : pairs) uf.unite(x, y);
    LevelQuotient q;
    q.class_of = uf.canonical_classes();
    q.class_count = uf.count();
    return q;
}

inline LevelQuotient quotient_presentation(const EquivRelPresentation& p, std::size_t n) {
    return level_quotient(p.base.level_size(n), relation_pairs(p, n));
}

/// Induced transition between quotient levels, when well-defined.
inline std::optional<std::vector<std::size_t>> quotient_transition(const Tower& base,
                                                                   const LevelQuotient& lo,
                                                                   const LevelQuotient& hi,
                                                                   std::size_t n) {
    std::vector<std::size_t> t(hi.class_count, SIZE_MAX);
    for (std::size_t i = 0; i < base.level_size(n + 1); ++i) {
        std::size_t c = hi.class_of[i];
        std::size_t img = lo.class_of[base.transition(n, i)];
        if (t[c] == SIZE_MAX) t[c] = img;
        else if (t[c] != img) return std::nullopt;
    }
    return t;
}

inline std::optional<std::vector<std::size_t>> quotient_transition(const EquivRelPresentation& p,
                                                                   std::size_t n) {
    return quotient_transition(p.base, quotient_presentation(p, n), quotient_presentation(p, n + 1), n);
}

/// Ring of functions S_n -> Z/p^m; the level-n stage of Cont(S, Z_p)
/// at finite precision.
inline FunctionRing cont_functions(const Tower& t, std::size_t n, Prime p, std::uint32_t m) {
    return FunctionRing(t.level_size(n), ZmodRing(p, m));
}

/// Inflation Cont(S_n, -) -> Cont(S_{n+1}, -): precompose with the
/// transition. Injective whenever the transition is surjective.
inline FunctionRing::Elem inflate(const Tower& t, std::size_t n, const FunctionRing::Elem& f) {
    FunctionRing::Elem g(t.level_size(n + 1));
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = f[t.transition(n, i)];
    return g;
}

/// The dyadic-interval presentation on the Cantor tower: level-n identified
/// pairs u01^k ~ u10^k (k >= 1), shipped as explicit pair lists. The level-n
/// quotient has 2^n - (2^{n-1} - 1) points for n >= 1.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> dyadic_interval_pairs(std::size_t depth) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(depth + 1);
    for (std::size_t n = 1; n <= depth; ++n) {
        // strings are encoded with bit b = coordinate b+1 (see canonical_cantor)
        for (std::size_t ulen = 0; ulen + 2 <= n; ++ulen) {
            std::size_t k = n - ulen - 1; // k >= 1
            for (std::size_t u = 0; u < (std::size_t(1) << ulen); ++u) {
                // u 0 1^k : bits of u, then 0 at position ulen, then ones
                std::size_t left = u;
                for (std::size_t b = 0; b < k; ++b) left |= std::size_t(1) << (ulen + 1 + b);
                // u 1 0^k
                std::size_t right = u | (std::size_t(1) << ulen);
                out[n].push_back({left, right});
            }
        }
    }
    return out;
}

/// Wraps explicit per-level pair lists (plus the diagonal and symmetry) as a
/// relation tower with its two projection pro-maps.
inline EquivRelPresentation presentation_from_pairs(
    const Tower& s, const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& extra_pairs) {
    std::vector<std::vector<std::string>> levels(s.depth() + 1);
    std::vector<std::vector<std::size_t>> trans(s.depth());
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(s.depth() + 1);
    for (std::size_t n = 0; n <= s.depth(); ++n) {
        // symmetric-reflexive closure of the listed pairs
        std::vector<std::vector<bool>> rel(s.level_size(n), std::vector<bool>(s.level_size(n), false));
        for (std::size_t i = 0; i < s.level_size(n); ++i) rel[i][i] = true;
        if (n < extra_pairs.size())
            for (auto [a, b] : extra_pairs[n]) rel[a][b] = rel[b][a] = true;
        for (std::size_t i = 0; i < s.level_size(n); ++i)
            for (std::size_t j = 0; j < s.level_size(n); ++j)
                if (rel[i][j]) {
                    pairs[n].push_back({i, j});
                    levels[n].push_back("(" + s.level_labels(n)[i] + "~" + s.level_labels(n)[j] + ")");
                }
    }
    for (std::size_t n = 0; n < s.depth(); ++n) {
        for (auto [a, b] : pairs[n + 1]) {
            std::size_t ta = s.transition(n, a), tb = s.transition(n, b);
            std::size_t idx = SIZE_MAX;
            for (std::size_t k = 0; k < pairs[n].size(); ++k)
                if (pairs[n][k] == std::make_pair(ta, tb)) { idx = k; break; }
            if (idx == SIZE_MAX)
                throw std::invalid_argument("presentation_from_pairs: pairs not closed under transitions");
            trans[n].push_back(idx);
        }
    }
    Tower r(levels, trans);
    std::vector<std::size_t> re(s.depth() + 1);
    std::vector<std::vector<std::size_t>> m1(s.depth() + 1), m2(s.depth() + 1);
    for (std::size_t n = 0; n <= s.depth(); ++n) {
        re[n] = n;
        for (auto [a, b] : pairs[n]) {
            m1[n].push_back(a);
            m2[n].push_back(b);
        }
    }
    return EquivRelPresentation{s, r, ProMap(r, s, re, m1), ProMap(r, s, re, m2)};
}

} // namespace wittstone
