#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittstone/function_ring.hpp"
#include "wittstone/polynomial.hpp"
#include "wittstone/prime.hpp"
#include "wittstone/residue.hpp"
#include "wittstone/ring.hpp"

namespace wittstone {

/// Universal p-typical Witt polynomials at length n: sum polynomials S_i,
/// product polynomials P_i and negation polynomials N_i in the variables
/// X0..X_{n-1}, Y0..Y_{n-1}, solved level by level from the ghost identities
///   w_i(S) = w_i(X) + w_i(Y),   w_i(P) = w_i(X) * w_i(Y),
/// where w_i(Z) = sum_{j<=i} p^j Z_j^{p^{i-j}}. Every division by p^i is
/// exact; a failed division is an internal fault, never rounded.
class WittPolySet {
public:
    static const WittPolySet& get(Prime p, std::size_t n);

    Prime prime() const { return p_; }
    std::size_t length() const { return n_; }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<IntPolynomial>& sums() const { return sums_; }
    const std::vector<IntPolynomial>& products() const { return products_; }
    const std::vector<IntPolynomial>& negations() const { return negations_; }

    /// Ghost polynomial w_i over the X block (offset 0) or Y block (offset n).
    IntPolynomial ghost(std::size_t i, std::size_t offset) const {
        IntPolynomial w = IntPolynomial::constant(vars_, 0);
        BigInt pj = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            w = w + IntPolynomial::variable(vars_, offset + j).pow(pow_u64(p_.value(), i - j)) * pj;
            pj *= p_.value();
        }
        return w;
    }

private:
    WittPolySet(Prime p, std::size_t n) : p_(p), n_(n) {
        if (n == 0) throw std::invalid_argument("WittPolySet: length must be >= 1");
        for (std::size_t i = 0; i < n; ++i) vars_.push_back("X" + std::to_string(i));
        for (std::size_t i = 0; i < n; ++i) vars_.push_back("Y" + std::to_string(i));
        compute();
    }

    void compute() {
        const std::uint64_t p = p_.value();
        for (std::size_t i = 0; i < n_; ++i) {
            IntPolynomial wx = ghost(i, 0), wy = ghost(i, n_);
            IntPolynomial s = wx + wy;
            IntPolynomial pr = wx * wy;
            IntPolynomial ng = -wx;
            BigInt pj = 1;
            for (std::size_t j = 0; j < i; ++j) {
                std::uint64_t e = pow_u64(p, i - j);
                s = s - sums_[j].pow(e) * pj;
                pr = pr - products_[j].pow(e) * pj;
                ng = ng - negations_[j].pow(e) * pj;
                pj *= p;
            }
            sums_.push_back(s.exact_div(pj));
            products_.push_back(pr.exact_div(pj));
            negations_.push_back(ng.exact_div(pj));
        }
    }

    Prime p_;
    std::size_t n_;
    std::vector<std::string> vars_;
    std::vector<IntPolynomial> sums_, products_, negations_;
};

// Memoized by (p, n). The fill is idempotent: a losing racer's computation
// is discarded and the first inserted set is returned to everyone.
inline const WittPolySet& WittPolySet::get(Prime p, std::size_t n) {
    static std::map<std::pair<std::uint64_t, std::size_t>, std::unique_ptr<WittPolySet>> memo;
    static std::mutex mtx;
    const auto key = std::make_pair(p.value(), n);
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return *it->second;
    }
    auto fresh = std::unique_ptr<WittPolySet>(new WittPolySet(p, n));
    std::lock_guard<std::mutex> lk(mtx);
    auto [it, inserted] = memo.emplace(key, std::move(fresh));
    return *it->second;
}

/// Truncated Witt vectors W_n(R) over a finite base ring R, as a finite ring.
/// Arithmetic is componentwise evaluation of the universal polynomials.
template <typename R>
class WittRingT {
public:
    using Base = R;
    using Elem = std::vector<typename R::Elem>;

    WittRingT(Prime p, std::size_t n, R base) : p_(p), n_(n), base_(std::move(base)) {
        if (n == 0) throw std::invalid_argument("WittRing: length must be >= 1");
    }

    Prime prime() const { return p_; }
    std::size_t length() const { return n_; }
    const R& base() const { return base_; }
    const WittPolySet& polys() const { return WittPolySet::get(p_, n_); }

    Elem zero() const { return Elem(n_, base_.zero()); }
    Elem one() const {
        Elem e(n_, base_.zero());
        e[0] = base_.one();
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const { return eval_family(polys().sums(), a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return eval_family(polys().products(), a, b); }
    Elem neg(const Elem& a) const { return eval_family(polys().negations(), a, a); }

    bool eq(const Elem& a, const Elem& b) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!base_.eq(a[i], b[i])) return false;
        return true;
    }

    std::size_t size() const {
        std::size_t n = 1;
        for (std::size_t i = 0; i < n_; ++i) n *= base_.size();
        return n;
    }

    Elem element(std::size_t idx) const {
        Elem v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            v[i] = base_.element(idx % base_.size());
            idx /= base_.size();
        }
        return v;
    }

    std::size_t index_of(const Elem& a) const {
        std::size_t idx = 0;
        for (std::size_t i = n_; i-- > 0;) idx = idx * base_.size() + base_.index_of(a[i]);
        return idx;
    }

    Elem from_int(const BigInt& n) const {
        BigInt charac = 1;
        for (std::size_t i = 0; i < n_; ++i) charac *= p_.value();
        BigInt k = n % charac;
        if (k < 0) k += charac;
        Elem acc = zero(), b = one();
        std::uint64_t kk = k.convert_to<std::uint64_t>();
        while (kk > 0) {
            if (kk & 1) acc = add(acc, b);
            kk >>= 1;
            if (kk) b = add(b, b);
        }
        return acc;
    }

    std::string elem_str(const Elem& a) const {
        std::string s = "(";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += base_.elem_str(a[i]);
        }
        return s + ")";
    }

    /// Ghost components w_i(a) = sum_{j<=i} p^j a_j^{p^{i-j}} in the base.
    std::vector<typename R::Elem> ghost(const Elem& a) const {
        std::vector<typename R::Elem> w(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            typename R::Elem acc = base_.zero();
            BigInt pj = 1;
            for (std::size_t j = 0; j <= i; ++j) {
                typename R::Elem t = ring_pow(base_, a[j], pow_u64(p_.value(), i - j));
                acc = base_.add(acc, base_.mul(base_.from_int(pj), t));
                pj *= p_.value();
            }
            w[i] = acc;
        }
        return w;
    }

    /// Teichmueller lift (a, 0, ..., 0).
    Elem teichmuller(const typename R::Elem& a) const {
        Elem v(n_, base_.zero());
        v[0] = a;
        return v;
    }

private:
    Elem eval_family(const std::vector<IntPolynomial>& fam, const Elem& a, const Elem& b) const {
        std::vector<typename R::Elem> values;
        values.reserve(2 * n_);
        for (const auto& x : a) values.push_back(x);
        for (const auto& y : b) values.push_back(y);
        Elem r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = fam[i].eval(base_, values);
        return r;
    }

    Prime p_;
    std::size_t n_;
    R base_;
};

/// Whether the base is an F_p-algebra with bijective Frobenius, decided by
/// enumeration. Witt Frobenius is only offered over such bases.
template <typename R>
bool is_perfect_base(const R& base, Prime p) {
    // characteristic p
    typename R::Elem psum = base.zero();
    for (std::uint64_t i = 0; i < p.value(); ++i) psum = base.add(psum, base.one());
    if (!base.eq(psum, base.zero())) return false;
    std::vector<bool> hit(base.size(), false);
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::size_t j = base.index_of(ring_pow(base, base.element(i), p.value()));
        if (hit[j]) return false;
        hit[j] = true;
    }
    return true;
}

/// Table of the inverse Frobenius of a perfect base.
template <typename R>
std::vector<std::size_t> inverse_frobenius_table(const R& base, Prime p) {
    if (!is_perfect_base(base, p))
        throw std::domain_error("inverse_frobenius_table: base is not a perfect F_p-algebra");
    std::vector<std::size_t> inv(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        inv[base.index_of(ring_pow(base, base.element(i), p.value()))] = i;
    return inv;
}

/// Frobenius lift on W_n of a perfect base: digitwise p-th power.
template <typename R>
typename WittRingT<R>::Elem witt_frobenius(const WittRingT<R>& w, const typename WittRingT<R>::Elem& a) {
    if (!is_perfect_base(w.base(), w.prime()))
        throw std::domain_error("witt_frobenius: base is not a perfect F_p-algebra");
    typename WittRingT<R>::Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring_pow(w.base(), a[i], w.prime().value());
    return r;
}

/// Multiplication by p over a char-p base is the digit shift (0, a0^p, a1^p, ...).
/// Exact division by p inverts it, dropping one digit of precision; the input
/// must have first digit 0 and p-th-power digits above it.
template <typename R>
typename WittRingT<R>::Elem witt_div_p(const WittRingT<R>& w, const WittRingT<R>& lower,
                                       const typename WittRingT<R>::Elem& a) {
    if (lower.length() + 1 != w.length())
        throw std::invalid_argument("witt_div_p: lower ring must have length n-1");
    const auto inv = inverse_frobenius_table(w.base(), w.prime());
    if (!w.base().eq(a[0], w.base().zero()))
        throw std::domain_error("witt_div_p: element not divisible by p");
    typename WittRingT<R>::Elem r(w.length() - 1);
    for (std::size_t i = 1; i < w.length(); ++i)
        r[i - 1] = w.base().element(inv[w.base().index_of(a[i])]);
    return r;
}

// ---------------------------------------------------------------------------
// p-adically truncated carriers with a Frobenius lift.
//
// A carrier packages a finite ring at a stated precision m together with the
// precision-(m-1) ring below it, a truncation map, and exact division by p.
// delta derived from a lift always lands one precision lower: the quotient
// (phi(x) - x^p)/p is only determined mod p^{m-1}.
// ---------------------------------------------------------------------------

/// Carrier for Z/p^m.
class ZmodCarrier {
public:
    using Ring = ZmodRing;

    ZmodCarrier(Prime p, std::uint32_t m) : ring_(p, m) {}

    const Ring& ring() const { return ring_; }
    Prime prime() const { return ring_.prime(); }
    std::uint32_t precision() const { return ring_.precision(); }

    ZmodCarrier lower() const {
        if (precision() < 2) throw std::domain_error("ZmodCarrier::lower: precision too low");
        return ZmodCarrier(prime(), precision() - 1);
    }
    Ring::Elem project(Ring::Elem a) const { return a % (ring_.modulus() / prime().value()); }
    Ring::Elem div_p(Ring::Elem a) const {
        a %= ring_.modulus();
        if (a % prime().value() != 0)
            throw std::domain_error("ZmodCarrier::div_p: not divisible by p (lift is not a Frobenius lift)");
        return a / prime().value();
    }

private:
    Ring ring_;
};

/// Carrier for a function ring (Z/p^m)^S, pointwise.
class FunctionCarrier {
public:
    using Ring = FunctionRingT<ZmodRing>;

    FunctionCarrier(std::size_t domain_size, Prime p, std::uint32_t m)
        : ring_(domain_size, ZmodRing(p, m)), inner_(p, m) {}

    const Ring& ring() const { return ring_; }
    Prime prime() const { return inner_.prime(); }
    std::uint32_t precision() const { return inner_.precision(); }

    FunctionCarrier lower() const { return FunctionCarrier(ring_.domain_size(), prime(), precision() - 1); }
    Ring::Elem project(const Ring::Elem& a) const {
        Ring::Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = inner_.project(a[i]);
        return r;
    }
    Ring::Elem div_p(const Ring::Elem& a) const {
        Ring::Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = inner_.div_p(a[i]);
        return r;
    }

private:
    Ring ring_;
    ZmodCarrier inner_;
};

/// Carrier for W_n over a perfect base; precision is the Witt length.
template <typename R>
class WittCarrier {
public:
    using Ring = WittRingT<R>;
    using Elem = typename Ring::Elem;

    WittCarrier(Prime p, std::size_t n, R base) : ring_(p, n, std::move(base)) {
        if (!is_perfect_base(ring_.base(), p))
            throw std::domain_error("WittCarrier: base is not a perfect F_p-algebra");
    }

    const Ring& ring() const { return ring_; }
    Prime prime() const { return ring_.prime(); }
    std::uint32_t precision() const { return (std::uint32_t)ring_.length(); }

    WittCarrier lower() const {
        if (precision() < 2) throw std::domain_error("WittCarrier::lower: precision too low");
        return WittCarrier(prime(), ring_.length() - 1, ring_.base());
    }
    Elem project(const Elem& a) const { return Elem(a.begin(), a.end() - 1); }
    Elem div_p(const Elem& a) const { return witt_div_p(ring_, lower().ring(), a); }

private:
    Ring ring_;
};

/// delta(x) = (phi(x) - x^p)/p at precision m-1. Divisibility failure means
/// phi is not a Frobenius lift; that is an error, not a value.
template <typename C>
typename C::Ring::Elem delta_from_lift(const C& carrier,
                                       const std::function<typename C::Ring::Elem(const typename C::Ring::Elem&)>& phi,
                                       const typename C::Ring::Elem& x) {
    const auto& ring = carrier.ring();
    auto diff = ring_sub(ring, phi(x), ring_pow(ring, x, carrier.prime().value()));
    return carrier.div_p(diff);
}

/// Verification report for the three delta-ring axioms.
struct DeltaAxiomReport {
    bool passed = true;
    std::string witness; // first counterexample, empty when passed
};

/// Checks delta(1)=0, the product rule and the sum rule at precision m-1
/// over the given sample pairs (or all pairs when samples is empty).
template <typename C>
DeltaAxiomReport check_delta_axioms(
    const C& carrier,
    const std::function<typename C::Ring::Elem(const typename C::Ring::Elem&)>& delta,
    const std::vector<std::pair<std::size_t, std::size_t>>& sample_pairs = {}) {
    using Elem = typename C::Ring::Elem;
    const auto& ring = carrier.ring();
    const C low = carrier.lower();
    const auto& lring = low.ring();
    const std::uint64_t p = carrier.prime().value();
    DeltaAxiomReport rep;

    if (!lring.eq(delta(ring.one()), lring.zero())) {
        rep.passed = false;
        rep.witness = "delta(1) != 0";
        return rep;
    }

    auto run_pair = [&](const Elem& x, const Elem& y) -> bool {
        Elem dx = delta(x), dy = delta(y);
        Elem xl = carrier.project(x), yl = carrier.project(y);
        Elem xp = ring_pow(lring, xl, p), yp = ring_pow(lring, yl, p);
        // product rule
        Elem lhs = delta(ring.mul(x, y));
        Elem rhs = lring.add(lring.add(lring.mul(xp, dy), lring.mul(dx, yp)),
                             lring.mul(lring.from_int(BigInt(p)), lring.mul(dx, dy)));
        if (!lring.eq(lhs, rhs)) {
            rep.witness = "product rule fails at x=" + ring.elem_str(x) + " y=" + ring.elem_str(y);
            return false;
        }
        // sum rule; the binomial term is an exact division inside the carrier
        Elem sum_l = delta(ring.add(x, y));
        Elem binom = carrier.div_p(ring_sub(
            ring, ring.add(ring_pow(ring, x, p), ring_pow(ring, y, p)), ring_pow(ring, ring.add(x, y), p)));
        Elem sum_r = lring.add(lring.add(dx, dy), binom);
        if (!lring.eq(sum_l, sum_r)) {
            rep.witness = "sum rule fails at x=" + ring.elem_str(x) + " y=" + ring.elem_str(y);
            return false;
        }
        return true;
    };

    if (sample_pairs.empty()) {
        for (std::size_t i = 0; i < ring.size() && rep.passed; ++i)
            for (std::size_t j = 0; j < ring.size(); ++j)
                if (!run_pair(ring.element(i), ring.element(j))) {
                    rep.passed = false;
                    break;
                }
    } else {
        for (const auto& [i, j] : sample_pairs)
            if (!run_pair(ring.element(i % ring.size()), ring.element(j % ring.size()))) {
                rep.passed = false;
                break;
            }
    }
    return rep;
}

/// True iff phi is a bijection of the (finite) carrier set.
template <typename R>
bool is_perfect_delta(const R& ring, const std::function<typename R::Elem(const typename R::Elem&)>& phi) {
    std::vector<bool> hit(ring.size(), false);
    for (std::size_t i = 0; i < ring.size(); ++i) {
        std::size_t j = ring.index_of(phi(ring.element(i)));
        if (hit[j]) return false;
        hit[j] = true;
    }
    return true;
}

} // namespace wittstone
