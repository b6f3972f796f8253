#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittstone/boolean_stone.hpp"
#include "wittstone/function_ring.hpp"
#include "wittstone/ring_views.hpp"
#include "wittstone/tower.hpp"
#include "wittstone/witt.hpp"

namespace wittstone {

// ---------------------------------------------------------------------------
// Stone-type truncated delta-rings: Cont(S, Z/p^m) with the identity lift.
// ---------------------------------------------------------------------------

/// Cont(S, Z/p^m) for a finite set S, carried with its identity Frobenius
/// lift. delta(f) = (f - f^p)/p is everywhere defined because f^p = f mod p
/// holds pointwise in Z/p^m.
class StoneDeltaApprox {
public:
    StoneDeltaApprox(std::size_t set_size, Prime p, std::uint32_t m,
                     std::vector<std::string> point_labels = {})
        : carrier_(set_size, p, m), labels_(std::move(point_labels)) {
        if (!labels_.empty() && labels_.size() != set_size)
            throw std::invalid_argument("StoneDeltaApprox: label count mismatch");
    }

    const FunctionCarrier& carrier() const { return carrier_; }
    const FunctionRing& ring() const { return carrier_.ring(); }
    Prime prime() const { return carrier_.prime(); }
    std::uint32_t precision() const { return carrier_.precision(); }
    std::size_t set_size() const { return ring().domain_size(); }
    const std::vector<std::string>& point_labels() const { return labels_; }

    FunctionRing::Elem phi(const FunctionRing::Elem& f) const { return f; }

    /// (f - f^p)/p, one precision lower.
    FunctionRing::Elem delta(const FunctionRing::Elem& f) const {
        std::function<FunctionRing::Elem(const FunctionRing::Elem&)> id =
            [](const FunctionRing::Elem& x) { return x; };
        return delta_from_lift(carrier_, id, f);
    }

private:
    FunctionCarrier carrier_;
    std::vector<std::string> labels_;
};

/// Finite set -> Stone-type delta-ring: Cont(S_n, Z/p^m) at a tower level.
inline StoneDeltaApprox phi_functor(const Tower& t, std::size_t level, Prime p, std::uint32_t m) {
    return StoneDeltaApprox(t.level_size(level), p, m, t.level_labels(level));
}

/// Point recovery: characters of the mod-p reduction of Cont(S, Z/p^m).
/// Each character is evaluation at exactly one point; the bijection is part
/// of the result and is checked during construction.
struct PsiResult {
    FiniteStoneDual dual;
    std::vector<std::size_t> point_of_char; // char index -> point of S
};

inline PsiResult psi_functor(const StoneDeltaApprox& a) {
    const std::size_t s = a.set_size();
    // mod-p reduction of (Z/p^m)^S is the diagonal algebra F_p^S
    FiniteFpAlgebra red = algebras::fp_power(a.prime(), s);
    PsiResult r;
    r.dual = spec_chars(red);
    if (r.dual.points.size() != s)
        throw std::logic_error("psi_functor: character count differs from point count");
    std::vector<bool> hit(s, false);
    for (const auto& chi : r.dual.points) {
        std::size_t pt = SIZE_MAX;
        for (std::size_t i = 0; i < s; ++i)
            if (chi[i] % a.prime().value() == 1) {
                if (pt != SIZE_MAX) throw std::logic_error("psi_functor: character hits two indicators");
                pt = i;
            }
        if (pt == SIZE_MAX || hit[pt])
            throw std::logic_error("psi_functor: characters do not biject with points");
        hit[pt] = true;
        r.point_of_char.push_back(pt);
    }
    return r;
}

// ---------------------------------------------------------------------------
// W_m(Cont(S, F_p)) ~= Cont(S, Z/p^m) via pointwise Teichmueller expansion.
// ---------------------------------------------------------------------------

/// Multiplicative (Teichmueller) lift of a in F_p into Z/p^m: the unique
/// root of x^p = x congruent to a; computed as a^(p^(m-1)) mod p^m.
inline std::uint64_t teichmuller_lift(std::uint64_t a, Prime p, std::uint32_t m) {
    const std::uint64_t mod = pow_u64(p.value(), m);
    a %= p.value();
    if (a == 0) return 0;
    std::uint64_t e = pow_u64(p.value(), m - 1), r = 1, b = a % mod;
    while (e > 0) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return r;
}

/// The comparison map W_m(Cont(S, F_p)) -> Cont(S, Z/p^m): a Witt vector of
/// F_p-valued functions (f_0, ..., f_{m-1}) goes to the function
/// s |-> sum_i [f_i(s)] p^i with Teichmueller digits.
class WittContIso {
public:
    WittContIso(Prime p, std::size_t set_size, std::uint32_t m)
        : source_(p, m, FunctionRing(set_size, ZmodRing(p, 1))),
          target_(set_size, ZmodRing(p, m)) {}

    const WittRingT<FunctionRing>& source() const { return source_; }
    const FunctionRing& target() const { return target_; }

    FunctionRing::Elem apply(const WittRingT<FunctionRing>::Elem& w) const {
        const Prime p = source_.prime();
        const std::uint32_t m = (std::uint32_t)source_.length();
        const std::size_t s = target_.domain_size();
        FunctionRing::Elem out(s, target_.codomain().zero());
        const std::uint64_t mod = pow_u64(p.value(), m);
        for (std::size_t pt = 0; pt < s; ++pt) {
            std::uint64_t acc = 0, pi = 1;
            for (std::uint32_t i = 0; i < m; ++i) {
                acc = (acc + teichmuller_lift(w[i][pt], p, m) * pi) % mod;
                pi = pi * p.value() % mod;
            }
            out[pt] = acc;
        }
        return out;
    }

private:
    WittRingT<FunctionRing> source_;
    FunctionRing target_;
};

struct IsoReport {
    bool bijective = false;
    bool additive = false;
    bool multiplicative = false;
    bool unital = false;
    std::string witness;
    bool passed() const { return bijective && additive && multiplicative && unital; }
};

/// Exhaustive bijectivity check plus homomorphism check: on all pairs when
/// the source has at most pair_cap elements, otherwise on a deterministic
/// stride sample of pairs.
inline IsoReport verify_witt_cont_iso(const WittContIso& iso, std::size_t pair_cap = 128) {
    IsoReport rep;
    const auto& w = iso.source();
    const auto& f = iso.target();
    const std::size_t n = w.size();
    if (n != f.size()) {
        rep.witness = "source and target have different sizes";
        return rep;
    }
    std::vector<bool> hit(n, false);
    rep.bijective = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = f.index_of(iso.apply(w.element(i)));
        if (hit[j]) {
            rep.bijective = false;
            rep.witness = "collision at source index " + std::to_string(i);
            return rep;
        }
        hit[j] = true;
    }
    rep.unital = f.eq(iso.apply(w.one()), f.one());
    if (!rep.unital) {
        rep.witness = "unit not preserved";
        return rep;
    }
    const std::size_t stride = n <= pair_cap ? 1 : (n / pair_cap > 0 ? n / pair_cap : 1);
    rep.additive = rep.multiplicative = true;
    for (std::size_t i = 0; i < n; i += stride)
        for (std::size_t j = 0; j < n; j += stride) {
            auto a = w.element(i), b = w.element(j);
            if (!f.eq(iso.apply(w.add(a, b)), f.add(iso.apply(a), iso.apply(b)))) {
                rep.additive = false;
                rep.witness = "addition fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return rep;
            }
            if (!f.eq(iso.apply(w.mul(a, b)), f.mul(iso.apply(a), iso.apply(b)))) {
                rep.multiplicative = false;
                rep.witness = "multiplication fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return rep;
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Invariants, coinvariants, (co)perfection for a finite ring with a lift.
// ---------------------------------------------------------------------------

template <typename R>
using Endo = std::function<typename R::Elem(const typename R::Elem&)>;

/// The fixed subring ker(phi - 1) = { x : phi(x) = x }.
template <typename R>
SubringView<R> delta_invariants(const R& ring, const Endo<R>& phi) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (ring.eq(phi(ring.element(i)), ring.element(i))) members.push_back(i);
    return SubringView<R>(ring, std::move(members));
}

/// The coinvariant quotient: R modulo the ideal generated by all
/// phi(x) - x. Universal among targets on which phi becomes the identity;
/// may be the zero ring.
template <typename R>
QuotientRingView<R> delta_coinvariants(const R& ring, const Endo<R>& phi) {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        auto x = ring.element(i);
        gens.push_back(ring.index_of(ring_sub(ring, phi(x), x)));
    }
    return QuotientRingView<R>(ring, ideal_closure(ring, gens));
}

/// The eventual image of phi, with the canonical maps in both directions.
/// As a colimit along phi ((co)perfection unit): x |-> phi^k(x) lands in the
/// core, where phi is bijective. As a limit along phi (perfection counit):
/// the core includes back into the ring.
template <typename R>
struct PerfectionResult {
    SubringView<R> core;
    std::size_t iterations;              // k with image(phi^k) stable
    std::vector<std::size_t> unit_map;   // ambient index -> core element (phi^k)
};

template <typename R>
PerfectionResult<R> delta_coperfection(const R& ring, const Endo<R>& phi) {
    std::vector<std::size_t> cur(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) cur[i] = i;
    std::size_t k = 0;
    auto image_of = [&](const std::vector<std::size_t>& xs) {
        std::set<std::size_t> img;
        for (auto i : xs) img.insert(ring.index_of(phi(ring.element(i))));
        return std::vector<std::size_t>(img.begin(), img.end());
    };
    while (true) {
        auto next = image_of(cur);
        ++k;
        if (next == cur) break;
        cur = std::move(next);
        if (k > ring.size())
            throw std::logic_error("delta_coperfection: image failed to stabilize");
    }
    SubringView<R> core(ring, cur);
    std::vector<std::size_t> unit(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
        auto x = ring.element(i);
        for (std::size_t t = 0; t < k; ++t) x = phi(x);
        unit[i] = core.from_ambient_index(ring.index_of(x));
    }
    return PerfectionResult<R>{std::move(core), k, std::move(unit)};
}

/// Perfection (the limit along phi) of a finite ring: every compatible
/// sequence lies in the eventual image, where phi is invertible, so the
/// limit is the same core with the inclusion as counit.
template <typename R>
PerfectionResult<R> delta_perfection(const R& ring, const Endo<R>& phi) {
    return delta_coperfection(ring, phi);
}

// ---------------------------------------------------------------------------
// Faithful flatness for maps of function rings.
// ---------------------------------------------------------------------------

/// A ring map Cont(S, Z/p^m) -> Cont(T, Z/p^m) presented by its dual set
/// map T -> S (every unital ring map between such function rings is a
/// precomposition, because indicator idempotents must map to indicator
/// idempotents).
struct FunctionRingMap {
    std::size_t source_size = 0; // |S|
    std::size_t target_size = 0; // |T|
    std::vector<std::size_t> dual; // length |T|, values in S

    FunctionRing::Elem apply(const FunctionRing& source, const FunctionRing& target,
                             const FunctionRing::Elem& v) const {
        FunctionRing::Elem out(target_size, target.codomain().zero());
        for (std::size_t t = 0; t < target_size; ++t) out[t] = v[dual[t]];
        return out;
    }
};

/// Recovers the dual set map from the images of the source indicator
/// idempotents; throws when those images are not a partition of unity by
/// indicators, i.e. when the data is not a ring map of function rings.
inline FunctionRingMap dual_of_indicator_images(const FunctionRing& source, const FunctionRing& target,
                                                const std::vector<FunctionRing::Elem>& images) {
    if (images.size() != source.domain_size())
        throw std::invalid_argument("dual_of_indicator_images: need one image per source point");
    FunctionRingMap m;
    m.source_size = source.domain_size();
    m.target_size = target.domain_size();
    m.dual.assign(m.target_size, SIZE_MAX);
    const auto& cod = target.codomain();
    for (std::size_t s = 0; s < images.size(); ++s) {
        if (images[s].size() != m.target_size)
            throw std::invalid_argument("dual_of_indicator_images: image arity mismatch");
        for (std::size_t t = 0; t < m.target_size; ++t) {
            if (cod.eq(images[s][t], cod.one())) {
                if (m.dual[t] != SIZE_MAX)
                    throw std::invalid_argument("dual_of_indicator_images: idempotents not orthogonal");
                m.dual[t] = s;
            } else if (!cod.eq(images[s][t], cod.zero())) {
                throw std::invalid_argument("dual_of_indicator_images: image is not an indicator");
            }
        }
    }
    for (auto d : m.dual)
        if (d == SIZE_MAX)
            throw std::invalid_argument("dual_of_indicator_images: idempotent images do not sum to 1");
    return m;
}

struct FFReport {
    bool faithfully_flat = false;
    bool injective = false;      // independent oracle: exhaustive collision test
    bool dual_surjective = false;
    std::string witness;
};

/// Faithful flatness of a map of mod-p function rings F_p^S -> F_p^T:
/// equivalent to surjectivity of the dual set map, cross-checked against an
/// exhaustive injectivity test of the ring map itself.
inline FFReport ff_check(Prime p, const FunctionRingMap& m) {
    FFReport rep;
    std::vector<bool> hit(m.source_size, false);
    for (auto d : m.dual) hit[d] = true;
    rep.dual_surjective = true;
    for (std::size_t s = 0; s < m.source_size; ++s)
        if (!hit[s]) {
            rep.dual_surjective = false;
            rep.witness = "source point " + std::to_string(s) + " not hit";
            break;
        }
    FunctionRing src(m.source_size, ZmodRing(p, 1));
    FunctionRing tgt(m.target_size, ZmodRing(p, 1));
    std::set<std::size_t> images;
    rep.injective = true;
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::size_t j = tgt.index_of(m.apply(src, tgt, src.element(i)));
        if (!images.insert(j).second) {
            rep.injective = false;
            if (rep.witness.empty()) rep.witness = "kernel element at source index " + std::to_string(i);
            break;
        }
    }
    if (rep.injective != rep.dual_surjective)
        throw std::logic_error("ff_check: injectivity and dual surjectivity disagree");
    rep.faithfully_flat = rep.dual_surjective;
    return rep;
}

struct PCompleteFFReport {
    FFReport mod_p;
    bool faithfully_flat = false;
};

/// p-complete faithful flatness for a map of Cont(-, Z/p^m) rings: both
/// sides are p-power torsion and finitely generated, so the condition is
/// faithful flatness of the mod-p reduction, which is the same dual set map.
inline PCompleteFFReport p_complete_ff_check(Prime p, const FunctionRingMap& m) {
    PCompleteFFReport rep;
    rep.mod_p = ff_check(p, m);
    rep.faithfully_flat = rep.mod_p.faithfully_flat;
    return rep;
}

// ---------------------------------------------------------------------------
// Covers of finite sets <-> faithfully flat families of function rings.
// ---------------------------------------------------------------------------

/// A finite family of maps T_i -> T of finite sets.
struct FiniteCover {
    std::size_t target_size = 0;
    std::vector<std::vector<std::size_t>> piece_maps; // piece_maps[i][x] in T
};

struct SiteTranslation {
    bool is_cover = false;             // joint surjectivity of the pieces
    FunctionRingMap combined;          // Cont(T, R) -> Cont(|_| T_i, R)
    FFReport ff;                       // of the combined map at precision 1
    bool round_trip_ok = false;        // set data -> algebra data -> set data
};

/// Translates a family of set maps into the induced single map of function
/// rings on the disjoint union, checks that joint surjectivity on points is
/// exactly faithful flatness on rings, and round-trips the dual map through
/// the indicator-image presentation.
inline SiteTranslation site_translate(Prime p, std::uint32_t m, const FiniteCover& cover) {
    SiteTranslation out;
    std::size_t total = 0;
    for (const auto& pm : cover.piece_maps) {
        for (auto y : pm)
            if (y >= cover.target_size) throw std::invalid_argument("site_translate: piece map out of range");
        total += pm.size();
    }
    if (total == 0) throw std::invalid_argument("site_translate: empty family (zero ring excluded)");
    out.combined.source_size = cover.target_size;
    out.combined.target_size = total;
    for (const auto& pm : cover.piece_maps)
        for (auto y : pm) out.combined.dual.push_back(y);

    std::vector<bool> hit(cover.target_size, false);
    for (auto y : out.combined.dual) hit[y] = true;
    out.is_cover = true;
    for (std::size_t t = 0; t < cover.target_size; ++t)
        if (!hit[t]) out.is_cover = false;

    out.ff = ff_check(p, out.combined);
    if (out.is_cover != out.ff.faithfully_flat)
        throw std::logic_error("site_translate: cover condition and faithful flatness disagree");

    // round trip: present the map by indicator images at precision m, then
    // recover the dual set map
    FunctionRing src(cover.target_size, ZmodRing(p, m));
    FunctionRing tgt(total, ZmodRing(p, m));
    std::vector<FunctionRing::Elem> images;
    for (std::size_t s = 0; s < cover.target_size; ++s) {
        FunctionRing::Elem ind(cover.target_size, src.codomain().zero());
        ind[s] = src.codomain().one();
        images.push_back(out.combined.apply(src, tgt, ind));
    }
    FunctionRingMap back = dual_of_indicator_images(src, tgt, images);
    out.round_trip_ok = (back.dual == out.combined.dual);
    return out;
}

// ---------------------------------------------------------------------------
// Stone characterization: phi = id <=> the coinvariants map is p-completely
// faithfully flat.
// ---------------------------------------------------------------------------

template <typename R>
struct StoneCharReport {
    bool delta_well_defined = false; // p | phi(x) - x^p for all x
    bool phi_is_identity = false;
    bool coinv_map_pc_ff = false;    // mod-p reduction of R -> R_coinv injective
    bool equivalent = false;         // the two sides agree
    std::string witness;
};

/// Decides both sides of the characterization on a concrete finite carrier.
/// The coinvariants map is surjective, so its mod-p reduction is faithfully
/// flat exactly when it is injective (a flat surjection of rings is an
/// isomorphism); that is what is tested.
template <typename R>
StoneCharReport<R> stone_characterization_check(const R& ring, const Endo<R>& phi, Prime p) {
    StoneCharReport<R> rep;
    // delta well-defined: phi(x) - x^p lies in pR for every x
    std::set<std::size_t> p_multiples;
    auto pe = ring.from_int(BigInt(p.value()));
    for (std::size_t i = 0; i < ring.size(); ++i)
        p_multiples.insert(ring.index_of(ring.mul(pe, ring.element(i))));
    rep.delta_well_defined = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        auto x = ring.element(i);
        auto d = ring_sub(ring, phi(x), ring_pow(ring, x, p.value()));
        if (!p_multiples.count(ring.index_of(d))) {
            rep.delta_well_defined = false;
            rep.witness = "phi(x) - x^p not divisible by p at index " + std::to_string(i);
            return rep;
        }
    }

    rep.phi_is_identity = true;
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (!ring.eq(phi(ring.element(i)), ring.element(i))) {
            rep.phi_is_identity = false;
            break;
        }

    QuotientRingView<R> q = delta_coinvariants(ring, phi);
    auto ap = mod_p_reduction(ring, p.value());
    auto qp = mod_p_reduction(q, p.value());
    // induced map A/p -> Q/p: class of x |-> class of [x]
    std::vector<std::size_t> seen(qp.size(), SIZE_MAX);
    rep.coinv_map_pc_ff = true;
    for (std::size_t c = 0; c < ap.size(); ++c) {
        std::size_t img = qp.project(q.project(ap.representative(c)));
        if (seen[img] != SIZE_MAX) {
            rep.coinv_map_pc_ff = false;
            rep.witness = "mod-p reduction of the coinvariants map identifies classes " +
                          std::to_string(seen[img]) + " and " + std::to_string(c);
            break;
        }
        seen[img] = c;
    }
    rep.equivalent = (rep.phi_is_identity == rep.coinv_map_pc_ff);
    return rep;
}

// ---------------------------------------------------------------------------
// Digitwise lift on Witt vectors of any F_p-algebra base (the functorial
// image of the base Frobenius). Over a perfect base this agrees with
// witt_frobenius; over a non-perfect base it is still a Frobenius lift but
// need not be bijective.
// ---------------------------------------------------------------------------

template <typename R>
typename WittRingT<R>::Elem witt_digitwise_frobenius(const WittRingT<R>& w,
                                                     const typename WittRingT<R>::Elem& a) {
    typename WittRingT<R>::Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring_pow(w.base(), a[i], w.prime().value());
    return r;
}

} // namespace wittstone
