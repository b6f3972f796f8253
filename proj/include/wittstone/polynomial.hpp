#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittstone/prime.hpp"

namespace wittstone {

using BigInt = boost::multiprecision::cpp_int;

/// Multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are keyed by exponent multi-indices over a fixed, ordered variable
/// list. No zero coefficients are ever stored, and the term map is ordered,
/// so equal polynomials have identical representations.
class IntPolynomial {
public:
    using Exponents = std::vector<unsigned>;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static IntPolynomial constant(std::vector<std::string> vars, BigInt c) {
        IntPolynomial r(std::move(vars));
        if (c != 0) r.terms_[Exponents(r.vars_.size(), 0)] = std::move(c);
        return r;
    }

    static IntPolynomial variable(std::vector<std::string> vars, std::size_t index) {
        IntPolynomial r(std::move(vars));
        if (index >= r.vars_.size()) throw std::out_of_range("IntPolynomial: variable index");
        Exponents e(r.vars_.size(), 0);
        e[index] = 1;
        r.terms_[e] = 1;
        return r;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const BigInt& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("IntPolynomial: exponent arity");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        a.check_same_vars(b);
        IntPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        a.check_same_vars(b);
        IntPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        IntPolynomial r(a.vars_);
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        a.check_same_vars(b);
        IntPolynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const BigInt& k) {
        IntPolynomial r(a.vars_);
        if (k == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = c * k;
        return r;
    }

    IntPolynomial pow(std::uint64_t n) const {
        IntPolynomial r = constant(vars_, 1);
        IntPolynomial base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    /// Exact division by an integer. Every coefficient must be divisible;
    /// a remainder signals a violated integrality theorem and aborts.
    IntPolynomial exact_div(const BigInt& k) const {
        if (k == 0) throw std::invalid_argument("IntPolynomial: division by zero");
        IntPolynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            if (c % k != 0)
                throw std::domain_error("IntPolynomial: exact division failed (coefficient not divisible)");
            r.terms_[e] = c / k;
        }
        return r;
    }

    /// Evaluate over any ring R through ring.from_int and the assignment
    /// values[i] for variable i.
    template <typename R>
    typename R::Elem eval(const R& ring, const std::vector<typename R::Elem>& values) const {
        if (values.size() != vars_.size())
            throw std::invalid_argument("IntPolynomial::eval: arity mismatch");
        typename R::Elem acc = ring.zero();
        for (const auto& [e, c] : terms_) {
            typename R::Elem t = ring.from_int(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = ring.mul(t, values[i]);
            acc = ring.add(acc, t);
        }
        return acc;
    }

    /// Evaluate with integer values, exactly.
    BigInt eval_int(const std::vector<BigInt>& values) const {
        if (values.size() != vars_.size())
            throw std::invalid_argument("IntPolynomial::eval_int: arity mismatch");
        BigInt acc = 0;
        for (const auto& [e, c] : terms_) {
            BigInt t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= values[i];
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            BigInt cc = c;
            std::string sign = (cc < 0) ? "-" : (first ? "" : "+");
            if (cc < 0) cc = -cc;
            std::string coef = (cc == 1 && !mono.empty()) ? "" : cc.str();
            s += sign + coef;
            if (!coef.empty() && !mono.empty()) s += "*";
            s += mono;
            first = false;
        }
        return s;
    }

private:
    void check_same_vars(const IntPolynomial& other) const {
        if (vars_ != other.vars_)
            throw std::invalid_argument("IntPolynomial: mismatched variable lists");
    }

    std::vector<std::string> vars_;
    std::map<Exponents, BigInt> terms_;
};

} // namespace wittstone
