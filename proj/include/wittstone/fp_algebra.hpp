#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittstone/linalg_fp.hpp"
#include "wittstone/prime.hpp"
#include "wittstone/ring.hpp"

namespace wittstone {

/// Finite-dimensional commutative F_p-algebra given by a basis and structure
/// constants: e_i * e_j = sum_k sc[i][j][k] e_k. Construction validates
/// commutativity, associativity on basis triples, and the unit law.
class FiniteFpAlgebra {
public:
    FiniteFpAlgebra(Prime p, std::size_t dim, std::vector<std::string> labels,
                    std::vector<std::vector<std::vector<std::uint64_t>>> sc,
                    fplin::Vec unit)
        : p_(p), dim_(dim), labels_(std::move(labels)), sc_(std::move(sc)), unit_(std::move(unit)) {
        if (dim_ == 0) throw std::invalid_argument("FiniteFpAlgebra: dim must be positive (no zero ring)");
        if (labels_.empty()) {
            for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
        }
        if (labels_.size() != dim_ || sc_.size() != dim_ || unit_.size() != dim_)
            throw std::invalid_argument("FiniteFpAlgebra: shape mismatch");
        const std::uint64_t q = p_.value();
        for (auto& row : sc_) {
            if (row.size() != dim_) throw std::invalid_argument("FiniteFpAlgebra: shape mismatch");
            for (auto& cell : row) {
                if (cell.size() != dim_) throw std::invalid_argument("FiniteFpAlgebra: shape mismatch");
                for (auto& v : cell) v %= q;
            }
        }
        for (auto& v : unit_) v %= q;
        validate();
    }

    Prime prime() const { return p_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const fplin::Vec& unit() const { return unit_; }
    const std::vector<std::vector<std::vector<std::uint64_t>>>& structure_constants() const { return sc_; }

    fplin::Vec add(const fplin::Vec& a, const fplin::Vec& b) const {
        fplin::Vec r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) r[i] = (a[i] + b[i]) % p_.value();
        return r;
    }

    fplin::Vec neg(const fplin::Vec& a) const {
        fplin::Vec r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) r[i] = (p_.value() - a[i] % p_.value()) % p_.value();
        return r;
    }

    fplin::Vec mul(const fplin::Vec& a, const fplin::Vec& b) const {
        const std::uint64_t q = p_.value();
        fplin::Vec r(dim_, 0);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i] % q == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j] % q == 0) continue;
                std::uint64_t c = a[i] * b[j] % q;
                for (std::size_t k = 0; k < dim_; ++k)
                    r[k] = (r[k] + c * sc_[i][j][k]) % q;
            }
        }
        return r;
    }

    fplin::Vec pow(fplin::Vec a, std::uint64_t n) const {
        fplin::Vec r = unit_;
        while (n > 0) {
            if (n & 1) r = mul(r, a);
            n >>= 1;
            if (n) a = mul(a, a);
        }
        return r;
    }

    fplin::Vec zero() const { return fplin::Vec(dim_, 0); }

    std::size_t element_count() const { return (std::size_t)pow_u64(p_.value(), dim_); }

    /// Enumerate all p^dim elements in mixed-radix order.
    fplin::Vec element(std::size_t idx) const {
        fplin::Vec v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            v[i] = idx % p_.value();
            idx /= p_.value();
        }
        return v;
    }

    std::size_t element_index(const fplin::Vec& v) const {
        std::size_t idx = 0;
        for (std::size_t i = dim_; i-- > 0;) idx = idx * p_.value() + v[i] % p_.value();
        return idx;
    }

    bool is_zero(const fplin::Vec& v) const {
        for (auto x : v)
            if (x % p_.value() != 0) return false;
        return true;
    }

    std::string elem_str(const fplin::Vec& v) const {
        std::string s;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (v[i] % p_.value() == 0) continue;
            if (!s.empty()) s += "+";
            if (v[i] % p_.value() != 1) s += std::to_string(v[i] % p_.value()) + "*";
            s += labels_[i];
        }
        return s.empty() ? "0" : s;
    }

private:
    void validate() const {
        const std::uint64_t q = p_.value();
        // commutativity of the table
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (sc_[i][j][k] % q != sc_[j][i][k] % q)
                        throw std::invalid_argument("FiniteFpAlgebra: structure constants not commutative");
        // unit law on basis elements
        for (std::size_t i = 0; i < dim_; ++i) {
            fplin::Vec e(dim_, 0);
            e[i] = 1;
            if (mul(unit_, e) != e)
                throw std::invalid_argument("FiniteFpAlgebra: unit does not act as identity");
        }
        // associativity on all basis triples
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    fplin::Vec ei(dim_, 0), ej(dim_, 0), ek(dim_, 0);
                    ei[i] = 1; ej[j] = 1; ek[k] = 1;
                    if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek)))
                        throw std::invalid_argument("FiniteFpAlgebra: structure constants not associative");
                }
    }

    Prime p_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<std::uint64_t>>> sc_;
    fplin::Vec unit_;
};

/// The dim x dim matrix of Frobenius x -> x^p in the given basis. Frobenius
/// is additive in characteristic p and fixes scalars, hence F_p-linear;
/// column i is e_i^p.
inline fplin::Mat frobenius_matrix(const FiniteFpAlgebra& a) {
    fplin::Mat m(a.dim(), fplin::Vec(a.dim(), 0));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        fplin::Vec e(a.dim(), 0);
        e[i] = 1;
        fplin::Vec img = a.pow(e, a.prime().value());
        for (std::size_t k = 0; k < a.dim(); ++k) m[k][i] = img[k];
    }
    return m;
}

/// FiniteRing adapter for FiniteFpAlgebra elements.
class FpAlgebraRing {
public:
    using Elem = fplin::Vec;

    explicit FpAlgebraRing(FiniteFpAlgebra alg) : alg_(std::move(alg)) {}

    const FiniteFpAlgebra& algebra() const { return alg_; }
    Prime prime() const { return alg_.prime(); }

    Elem zero() const { return alg_.zero(); }
    Elem one() const { return alg_.unit(); }
    Elem add(const Elem& a, const Elem& b) const { return alg_.add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return alg_.mul(a, b); }
    Elem neg(const Elem& a) const { return alg_.neg(a); }
    bool eq(const Elem& a, const Elem& b) const { return alg_.element_index(a) == alg_.element_index(b); }

    std::size_t size() const { return alg_.element_count(); }
    Elem element(std::size_t i) const { return alg_.element(i); }
    std::size_t index_of(const Elem& a) const { return alg_.element_index(a); }

    Elem from_int(const BigInt& n) const {
        BigInt r = n % (long long)alg_.prime().value();
        if (r < 0) r += (long long)alg_.prime().value();
        std::uint64_t c = r.convert_to<std::uint64_t>();
        Elem v = alg_.zero();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = alg_.unit()[i] * c % alg_.prime().value();
        return v;
    }

    std::string elem_str(const Elem& a) const { return alg_.elem_str(a); }

private:
    FiniteFpAlgebra alg_;
};

static_assert(FiniteRing<FpAlgebraRing>);

/// Standard small algebras used throughout the tests and the corpus.
namespace algebras {

/// F_p itself.
inline FiniteFpAlgebra fp(Prime p) {
    return FiniteFpAlgebra(p, 1, {"1"}, {{{1}}}, {1});
}

/// The diagonal function algebra F_p^n in the indicator basis.
inline FiniteFpAlgebra fp_power(Prime p, std::size_t n) {
    std::vector<std::vector<std::vector<std::uint64_t>>> sc(
        n, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n, 0)));
    for (std::size_t i = 0; i < n; ++i) sc[i][i][i] = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return FiniteFpAlgebra(p, n, labels, sc, fplin::Vec(n, 1));
}

/// F_4 = F_2[w]/(w^2+w+1) over F_2, basis {1, w}.
inline FiniteFpAlgebra f4() {
    Prime two(2);
    std::vector<std::vector<std::vector<std::uint64_t>>> sc = {
        {{1, 0}, {0, 1}},
        {{0, 1}, {1, 1}}, // w*w = 1 + w
    };
    return FiniteFpAlgebra(two, 2, {"1", "w"}, sc, {1, 0});
}

/// F_p[x]/(x^2), basis {1, x}.
inline FiniteFpAlgebra dual_numbers(Prime p) {
    std::vector<std::vector<std::vector<std::uint64_t>>> sc = {
        {{1, 0}, {0, 1}},
        {{0, 1}, {0, 0}}, // x*x = 0
    };
    return FiniteFpAlgebra(p, 2, {"1", "x"}, sc, {1, 0});
}

/// F_9 = F_3[w]/(w^2+1) over F_3, basis {1, w}.
inline FiniteFpAlgebra f9() {
    Prime three(3);
    std::vector<std::vector<std::vector<std::uint64_t>>> sc = {
        {{1, 0}, {0, 1}},
        {{0, 1}, {2, 0}}, // w*w = -1 = 2
    };
    return FiniteFpAlgebra(three, 2, {"1", "w"}, sc, {1, 0});
}

} // namespace algebras
} // namespace wittstone
