#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittstone/ring.hpp"

namespace wittstone {

/// A unital subring of a finite ring, presented by the sorted list of the
/// ambient element indices it contains.
template <typename R>
class SubringView {
public:
    using Ambient = R;
    using Elem = std::size_t; // position in members_

    SubringView(R ambient, std::vector<std::size_t> members)
        : amb_(std::move(ambient)), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        pos_.assign(amb_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < members_.size(); ++i) pos_[members_[i]] = i;
        zero_ = require(amb_.index_of(amb_.zero()));
        one_ = require(amb_.index_of(amb_.one()));
        for (std::size_t i = 0; i < members_.size(); ++i)
            for (std::size_t j = 0; j < members_.size(); ++j) {
                require(amb_.index_of(amb_.add(ambient_elem(i), ambient_elem(j))));
                require(amb_.index_of(amb_.mul(ambient_elem(i), ambient_elem(j))));
            }
    }

    const R& ambient() const { return amb_; }
    typename R::Elem ambient_elem(Elem e) const { return amb_.element(members_[e]); }
    std::size_t ambient_index(Elem e) const { return members_[e]; }
    Elem from_ambient_index(std::size_t idx) const { return require(idx); }
    bool contains_ambient(std::size_t idx) const { return pos_[idx] != SIZE_MAX; }

    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    Elem add(Elem a, Elem b) const { return require(amb_.index_of(amb_.add(ambient_elem(a), ambient_elem(b)))); }
    Elem mul(Elem a, Elem b) const { return require(amb_.index_of(amb_.mul(ambient_elem(a), ambient_elem(b)))); }
    Elem neg(Elem a) const { return require(amb_.index_of(amb_.neg(ambient_elem(a)))); }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::size_t size() const { return members_.size(); }
    Elem element(std::size_t i) const { return i; }
    std::size_t index_of(Elem a) const { return a; }

    Elem from_int(const BigInt& n) const { return require(amb_.index_of(amb_.from_int(n))); }

    std::string elem_str(Elem a) const { return amb_.elem_str(ambient_elem(a)); }

private:
    Elem require(std::size_t ambient_idx) const {
        if (pos_[ambient_idx] == SIZE_MAX)
            throw std::invalid_argument("SubringView: member set is not a unital subring");
        return pos_[ambient_idx];
    }

    R amb_;
    std::vector<std::size_t> members_;
    std::vector<std::size_t> pos_;
    Elem zero_, one_;
};

/// Additive-and-multiplicative closure of a generating set into an ideal:
/// the smallest subset containing the generators, closed under addition,
/// negation, and multiplication by arbitrary ring elements.
template <typename R>
std::vector<std::size_t> ideal_closure(const R& ring, const std::vector<std::size_t>& gen_indices) {
    std::set<std::size_t> members;
    members.insert(ring.index_of(ring.zero()));
    std::vector<std::size_t> frontier;
    auto push = [&](std::size_t idx) {
        if (members.insert(idx).second) frontier.push_back(idx);
    };
    for (auto g : gen_indices) push(g);
    while (!frontier.empty()) {
        std::size_t idx = frontier.back();
        frontier.pop_back();
        auto x = ring.element(idx);
        push(ring.index_of(ring.neg(x)));
        for (auto m : std::vector<std::size_t>(members.begin(), members.end()))
            push(ring.index_of(ring.add(x, ring.element(m))));
        for (std::size_t i = 0; i < ring.size(); ++i)
            push(ring.index_of(ring.mul(x, ring.element(i))));
    }
    return std::vector<std::size_t>(members.begin(), members.end());
}

/// Quotient of a finite ring by an ideal, with canonical class
/// representatives (smallest ambient index in each coset). Can be the zero
/// ring (size 1, one == zero).
template <typename R>
class QuotientRingView {
public:
    using Ambient = R;
    using Elem = std::size_t; // class id

    QuotientRingView(R ambient, const std::vector<std::size_t>& ideal_members)
        : amb_(std::move(ambient)) {
        std::vector<bool> in_ideal(amb_.size(), false);
        for (auto i : ideal_members) in_ideal[i] = true;
        class_of_.assign(amb_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < amb_.size(); ++i) {
            if (class_of_[i] != SIZE_MAX) continue;
            std::size_t cid = reps_.size();
            reps_.push_back(i);
            auto x = amb_.element(i);
            for (auto j : ideal_members) {
                std::size_t k = amb_.index_of(amb_.add(x, amb_.element(j)));
                if (class_of_[k] != SIZE_MAX && class_of_[k] != cid)
                    throw std::logic_error("QuotientRingView: cosets not disjoint (not an ideal)");
                class_of_[k] = cid;
            }
        }
    }

    const R& ambient() const { return amb_; }
    Elem project(const typename R::Elem& x) const { return class_of_[amb_.index_of(x)]; }
    typename R::Elem representative(Elem c) const { return amb_.element(reps_[c]); }
    bool is_zero_ring() const { return reps_.size() == 1; }

    Elem zero() const { return class_of_[amb_.index_of(amb_.zero())]; }
    Elem one() const { return class_of_[amb_.index_of(amb_.one())]; }
    Elem add(Elem a, Elem b) const {
        return class_of_[amb_.index_of(amb_.add(representative(a), representative(b)))];
    }
    Elem mul(Elem a, Elem b) const {
        return class_of_[amb_.index_of(amb_.mul(representative(a), representative(b)))];
    }
    Elem neg(Elem a) const { return class_of_[amb_.index_of(amb_.neg(representative(a)))]; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::size_t size() const { return reps_.size(); }
    Elem element(std::size_t i) const { return i; }
    std::size_t index_of(Elem a) const { return a; }

    Elem from_int(const BigInt& n) const { return class_of_[amb_.index_of(amb_.from_int(n))]; }

    std::string elem_str(Elem a) const { return "[" + amb_.elem_str(representative(a)) + "]"; }

private:
    R amb_;
    std::vector<std::size_t> class_of_;
    std::vector<std::size_t> reps_;
};

/// Quotient by the ideal p*R: the mod-p reduction of a finite ring.
template <typename R>
QuotientRingView<R> mod_p_reduction(const R& ring, std::uint64_t p) {
    auto p_elem = ring.from_int(BigInt(p));
    std::vector<std::size_t> gens = {ring.index_of(p_elem)};
    return QuotientRingView<R>(ring, ideal_closure(ring, gens));
}

/// A minimal generating set of a finite ring: greedily extend {0, 1} until
/// the generated subring is everything.
template <typename R>
std::vector<std::size_t> ring_generators(const R& ring) {
    auto generated = [&](const std::vector<std::size_t>& gens) {
        std::set<std::size_t> s;
        s.insert(ring.index_of(ring.zero()));
        s.insert(ring.index_of(ring.one()));
        std::vector<std::size_t> frontier(s.begin(), s.end());
        for (auto g : gens)
            if (s.insert(g).second) frontier.push_back(g);
        while (!frontier.empty()) {
            std::size_t idx = frontier.back();
            frontier.pop_back();
            auto x = ring.element(idx);
            auto push = [&](std::size_t k) {
                if (s.insert(k).second) frontier.push_back(k);
            };
            push(ring.index_of(ring.neg(x)));
            for (auto m : std::vector<std::size_t>(s.begin(), s.end())) {
                push(ring.index_of(ring.add(x, ring.element(m))));
                push(ring.index_of(ring.mul(x, ring.element(m))));
            }
        }
        return s;
    };
    std::vector<std::size_t> gens;
    auto cur = generated(gens);
    while (cur.size() < ring.size()) {
        for (std::size_t i = 0; i < ring.size(); ++i)
            if (!cur.count(i)) {
                gens.push_back(i);
                break;
            }
        cur = generated(gens);
    }
    return gens;
}

/// All unital ring homomorphisms B -> A between finite rings, returned as
/// full index tables (index in B -> index in A). Enumerates generator
/// assignments and extends each by closure, rejecting on conflict; the
/// closure is then verified to be a homomorphism on all pairs.
template <typename RB, typename RA>
std::vector<std::vector<std::size_t>> enumerate_ring_maps(const RB& b, const RA& a) {
    const std::vector<std::size_t> gens = ring_generators(b);
    std::vector<std::vector<std::size_t>> maps;

    std::vector<std::size_t> assignment(gens.size(), 0);
    const std::size_t na = a.size(), nb = b.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (total > 1000000 / na) throw std::invalid_argument("enumerate_ring_maps: search space too large");
        total *= na;
    }

    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        std::vector<std::size_t> img(nb, SIZE_MAX);
        img[b.index_of(b.zero())] = a.index_of(a.zero());
        img[b.index_of(b.one())] = a.index_of(a.one());
        bool ok = true;
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
            std::size_t v = c % na;
            c /= na;
            if (img[gens[i]] != SIZE_MAX && img[gens[i]] != v) ok = false;
            img[gens[i]] = v;
        }
        if (!ok) continue;
        // closure: propagate additivity and multiplicativity to a fixed point
        bool progress = true;
        while (progress && ok) {
            progress = false;
            for (std::size_t i = 0; i < nb && ok; ++i) {
                if (img[i] == SIZE_MAX) continue;
                auto xi = b.element(i);
                auto yi = a.element(img[i]);
                std::size_t ni = b.index_of(b.neg(xi));
                std::size_t nv = a.index_of(a.neg(yi));
                if (img[ni] == SIZE_MAX) { img[ni] = nv; progress = true; }
                else if (img[ni] != nv) ok = false;
                for (std::size_t j = 0; j < nb && ok; ++j) {
                    if (img[j] == SIZE_MAX) continue;
                    auto xj = b.element(j);
                    auto yj = a.element(img[j]);
                    std::size_t sidx = b.index_of(b.add(xi, xj));
                    std::size_t sval = a.index_of(a.add(yi, yj));
                    if (img[sidx] == SIZE_MAX) { img[sidx] = sval; progress = true; }
                    else if (img[sidx] != sval) ok = false;
                    std::size_t midx = b.index_of(b.mul(xi, xj));
                    std::size_t mval = a.index_of(a.mul(yi, yj));
                    if (img[midx] == SIZE_MAX) { img[midx] = mval; progress = true; }
                    else if (img[midx] != mval) ok = false;
                }
            }
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < nb; ++i)
            if (img[i] == SIZE_MAX) { ok = false; break; } // generators failed to generate: bug
        if (!ok) throw std::logic_error("enumerate_ring_maps: generators do not generate");
        maps.push_back(img);
    }
    // dedupe (different generator codes can close to the same map)
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    return maps;
}

/// Ring maps commuting with the given lifts on both sides.
template <typename RB, typename RA>
std::vector<std::vector<std::size_t>> enumerate_delta_maps(
    const RB& b, const std::function<typename RB::Elem(const typename RB::Elem&)>& phi_b,
    const RA& a, const std::function<typename RA::Elem(const typename RA::Elem&)>& phi_a) {
    auto maps = enumerate_ring_maps(b, a);
    std::vector<std::vector<std::size_t>> out;
    for (auto& m : maps) {
        bool ok = true;
        for (std::size_t i = 0; i < b.size() && ok; ++i) {
            std::size_t lhs = m[b.index_of(phi_b(b.element(i)))];
            std::size_t rhs = a.index_of(phi_a(a.element(m[i])));
            if (lhs != rhs) ok = false;
        }
        if (ok) out.push_back(std::move(m));
    }
    return out;
}

} // namespace wittstone
