#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wittstone/prime.hpp"
#include "wittstone/ring.hpp"

namespace wittstone {

/// An integer carried with its modulus p^m. Arithmetic is exact mod p^m and
/// only defined between operands with equal (p, m); precision is never
/// silently widened or narrowed.
class ResidueInt {
public:
    ResidueInt(Prime p, std::uint32_t m, std::uint64_t value)
        : p_(p), m_(m), modulus_(pow_u64(p.value(), m)) {
        if (m == 0) throw std::invalid_argument("ResidueInt: precision m must be positive (no zero ring)");
        value_ = value % modulus_;
    }

    Prime prime() const { return p_; }
    std::uint32_t precision() const { return m_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t value() const { return value_; }

    ResidueInt operator+(const ResidueInt& o) const {
        check_compat(o);
        return with_value((value_ + o.value_) % modulus_);
    }
    ResidueInt operator-(const ResidueInt& o) const {
        check_compat(o);
        return with_value((value_ + modulus_ - o.value_) % modulus_);
    }
    ResidueInt operator*(const ResidueInt& o) const {
        check_compat(o);
        // p^m <= 2^32 is enforced nowhere, but desk-scale moduli stay tiny;
        // 128-bit product guards the multiply regardless.
        unsigned __int128 prod = (unsigned __int128)value_ * o.value_;
        return with_value((std::uint64_t)(prod % modulus_));
    }
    ResidueInt operator-() const { return with_value((modulus_ - value_) % modulus_); }

    bool operator==(const ResidueInt& o) const {
        check_compat(o);
        return value_ == o.value_;
    }

    /// Drop precision from m to a smaller m2 by reducing mod p^m2.
    ResidueInt truncate(std::uint32_t m2) const {
        if (m2 > m_) throw std::invalid_argument("ResidueInt::truncate: cannot raise precision");
        return ResidueInt(p_, m2, value_ % pow_u64(p_.value(), m2));
    }

    /// Exact division by p; result precision drops by one. A non-divisible
    /// value means an integrality theorem failed upstream, so abort.
    ResidueInt exact_div_p() const {
        if (m_ < 2) throw std::domain_error("ResidueInt::exact_div_p: precision too low");
        if (value_ % p_.value() != 0)
            throw std::domain_error("ResidueInt::exact_div_p: value not divisible by p");
        return ResidueInt(p_, m_ - 1, value_ / p_.value());
    }

    std::string to_string() const {
        return std::to_string(value_) + " mod " + std::to_string(p_.value()) + "^" + std::to_string(m_);
    }

private:
    ResidueInt with_value(std::uint64_t v) const { return ResidueInt(p_, m_, v); }
    void check_compat(const ResidueInt& o) const {
        if (p_ != o.p_ || m_ != o.m_)
            throw std::invalid_argument("ResidueInt: modulus mismatch");
    }

    Prime p_;
    std::uint32_t m_;
    std::uint64_t modulus_;
    std::uint64_t value_;
};

/// The ring Z/p^m with elements as canonical representatives.
class ZmodRing {
public:
    using Elem = std::uint64_t;

    ZmodRing(Prime p, std::uint32_t m) : p_(p), m_(m), modulus_(pow_u64(p.value(), m)) {
        if (m == 0) throw std::invalid_argument("ZmodRing: precision m must be positive");
    }

    Prime prime() const { return p_; }
    std::uint32_t precision() const { return m_; }
    std::uint64_t modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % modulus_; }
    Elem add(Elem a, Elem b) const { return (a + b) % modulus_; }
    Elem neg(Elem a) const { return (modulus_ - a % modulus_) % modulus_; }
    Elem mul(Elem a, Elem b) const {
        return (Elem)(((unsigned __int128)a * b) % modulus_);
    }
    bool eq(Elem a, Elem b) const { return a % modulus_ == b % modulus_; }

    std::size_t size() const { return (std::size_t)modulus_; }
    Elem element(std::size_t i) const { return (Elem)i; }
    std::size_t index_of(Elem a) const { return (std::size_t)(a % modulus_); }

    Elem from_int(const BigInt& n) const {
        BigInt r = n % (long long)modulus_;
        if (r < 0) r += (long long)modulus_;
        return (Elem)r.convert_to<std::uint64_t>();
    }

    std::string elem_str(Elem a) const { return std::to_string(a % modulus_); }

    friend bool operator==(const ZmodRing& a, const ZmodRing& b) {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }

private:
    Prime p_;
    std::uint32_t m_;
    std::uint64_t modulus_;
};

static_assert(FiniteRing<ZmodRing>);

} // namespace wittstone
