#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittstone/residue.hpp"
#include "wittstone/ring.hpp"

namespace wittstone {

/// Pointwise function ring R^S for a finite domain of size s and any finite
/// codomain ring R. An element is a length-s vector of codomain values; it
/// is a unit iff every coordinate is.
template <typename R>
class FunctionRingT {
public:
    using Codomain = R;
    using Elem = std::vector<typename R::Elem>;

    FunctionRingT(std::size_t domain_size, R codomain)
        : s_(domain_size), cod_(std::move(codomain)) {
        if (s_ == 0) throw std::invalid_argument("FunctionRing: empty domain (zero ring excluded)");
    }

    std::size_t domain_size() const { return s_; }
    const R& codomain() const { return cod_; }

    Elem zero() const { return Elem(s_, cod_.zero()); }
    Elem one() const { return Elem(s_, cod_.one()); }

    Elem add(const Elem& a, const Elem& b) const { return zip(a, b, [&](auto x, auto y) { return cod_.add(x, y); }); }
    Elem mul(const Elem& a, const Elem& b) const { return zip(a, b, [&](auto x, auto y) { return cod_.mul(x, y); }); }
    Elem neg(const Elem& a) const {
        Elem r(s_);
        for (std::size_t i = 0; i < s_; ++i) r[i] = cod_.neg(a[i]);
        return r;
    }
    bool eq(const Elem& a, const Elem& b) const {
        for (std::size_t i = 0; i < s_; ++i)
            if (!cod_.eq(a[i], b[i])) return false;
        return true;
    }

    std::size_t size() const {
        std::size_t n = 1;
        for (std::size_t i = 0; i < s_; ++i) {
            if (n > SIZE_MAX / cod_.size()) throw std::overflow_error("FunctionRing: too large to enumerate");
            n *= cod_.size();
        }
        return n;
    }

    Elem element(std::size_t idx) const {
        Elem v(s_);
        for (std::size_t i = 0; i < s_; ++i) {
            v[i] = cod_.element(idx % cod_.size());
            idx /= cod_.size();
        }
        return v;
    }

    std::size_t index_of(const Elem& a) const {
        std::size_t idx = 0;
        for (std::size_t i = s_; i-- > 0;) idx = idx * cod_.size() + cod_.index_of(a[i]);
        return idx;
    }

    Elem from_int(const BigInt& n) const { return Elem(s_, cod_.from_int(n)); }

    bool is_unit(const Elem& a) const {
        for (std::size_t i = 0; i < s_; ++i)
            if (!ring_is_unit(cod_, a[i])) return false;
        return true;
    }

    std::string elem_str(const Elem& a) const {
        std::string s = "(";
        for (std::size_t i = 0; i < s_; ++i) {
            if (i) s += ",";
            s += cod_.elem_str(a[i]);
        }
        return s + ")";
    }

private:
    template <typename F>
    Elem zip(const Elem& a, const Elem& b, F op) const {
        if (a.size() != s_ || b.size() != s_)
            throw std::invalid_argument("FunctionRing: element arity mismatch");
        Elem r(s_);
        for (std::size_t i = 0; i < s_; ++i) r[i] = op(a[i], b[i]);
        return r;
    }

    std::size_t s_;
    R cod_;
};

/// The concrete function ring used throughout: functions from a finite set
/// into Z/p^m.
using FunctionRing = FunctionRingT<ZmodRing>;

static_assert(FiniteRing<FunctionRing>);

} // namespace wittstone
