#pragma once

#include <cstdint>
#include <stdexcept>

namespace wittstone {

/// A validated prime. Everything in the library is parameterized by one.
class Prime {
public:
    explicit Prime(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("Prime: not a prime number");
    }

    std::uint64_t value() const { return p_; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
};

/// p^m as a 64-bit integer, throwing on overflow. Desk-scale moduli only.
inline std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw std::overflow_error("pow_u64: overflow");
        r *= base;
    }
    return r;
}

} // namespace wittstone
