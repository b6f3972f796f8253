#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

#include "wittstone/polynomial.hpp"

namespace wittstone {

/// The finite ring contract every carrier in this library satisfies.
///
/// Elements are values; rings are immutable descriptors. Enumeration
/// (size / element / index_of) is what makes the exhaustive checks and
/// map enumerations possible.
template <typename R>
concept FiniteRing = requires(const R r, typename R::Elem a, typename R::Elem b, std::size_t i, BigInt n) {
    { r.zero() } -> std::same_as<typename R::Elem>;
    { r.one() } -> std::same_as<typename R::Elem>;
    { r.add(a, b) } -> std::same_as<typename R::Elem>;
    { r.mul(a, b) } -> std::same_as<typename R::Elem>;
    { r.neg(a) } -> std::same_as<typename R::Elem>;
    { r.eq(a, b) } -> std::same_as<bool>;
    { r.size() } -> std::same_as<std::size_t>;
    { r.element(i) } -> std::same_as<typename R::Elem>;
    { r.index_of(a) } -> std::same_as<std::size_t>;
    { r.from_int(n) } -> std::same_as<typename R::Elem>;
};

template <typename R>
typename R::Elem ring_sub(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
    return r.add(a, r.neg(b));
}

template <typename R>
typename R::Elem ring_pow(const R& r, typename R::Elem a, std::uint64_t n) {
    typename R::Elem acc = r.one();
    while (n > 0) {
        if (n & 1) acc = r.mul(acc, a);
        n >>= 1;
        if (n) a = r.mul(a, a);
    }
    return acc;
}

template <typename R>
std::vector<typename R::Elem> ring_elements(const R& r) {
    std::vector<typename R::Elem> v;
    v.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v.push_back(r.element(i));
    return v;
}

template <typename R>
bool ring_is_unit(const R& r, const typename R::Elem& a) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.eq(r.mul(a, r.element(i)), r.one())) return true;
    return false;
}

} // namespace wittstone
