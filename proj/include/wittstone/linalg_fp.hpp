#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wittstone/prime.hpp"

namespace wittstone {

/// Dense linear algebra over F_p, small and deterministic. Vectors are rows
/// of canonical representatives in [0, p). Pivot choice is always the
/// leftmost nonzero column, scanning rows top to bottom, so reduced forms
/// and the bases derived from them are reproducible.
namespace fplin {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>; // row-major

inline std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    a %= p;
    for (std::uint64_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::domain_error("inv_mod_p: not invertible");
}

inline Mat identity(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// In-place row reduction to RREF; returns pivot column indices.
inline std::vector<std::size_t> rref(Mat& m, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        std::uint64_t inv = inv_mod_p(m[r][c], p);
        for (auto& x : m[r]) x = x * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t f = m[i][c] % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r, Vec(cols, 0)); // drop zero rows
    return pivots;
}

inline std::size_t rank(Mat m, std::uint64_t p) {
    return rref(m, p).size();
}

inline Vec mat_vec(const Mat& m, const Vec& v, std::uint64_t p) {
    Vec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j] % p;
        r[i] = acc % p;
    }
    return r;
}

inline Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

/// Basis of ker(M) (as vectors x with M x = 0), in RREF-derived canonical
/// form: one basis vector per free column, ordered by free column index.
inline Mat kernel_basis(Mat m, std::uint64_t p) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::vector<std::size_t> pivots = rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Mat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p - m[r][free] % p) % p;
        basis.push_back(v);
    }
    return basis;
}

/// RREF basis of the row span.
inline Mat row_space_basis(Mat m, std::uint64_t p) {
    rref(m, p);
    return m;
}

/// Structure for a quotient F_p^n / U given a spanning set of U:
/// a canonical basis (the standard vectors at non-pivot coordinates of the
/// RREF of U) and a projection writing any vector in those coordinates.
struct Quotient {
    Mat u_rref;                      // RREF basis of the subspace
    std::vector<std::size_t> pivots; // pivot columns of u_rref
    std::vector<std::size_t> coords; // non-pivot coordinates, the quotient basis
    std::uint64_t p;
    std::size_t ambient;

    std::size_t dim() const { return coords.size(); }

    /// Coordinates of v + U in the canonical quotient basis.
    Vec project(Vec v) const {
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::uint64_t f = v[pivots[r]] % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < ambient; ++j)
                v[j] = (v[j] + (p - f) * u_rref[r][j]) % p;
        }
        Vec out(coords.size(), 0);
        for (std::size_t k = 0; k < coords.size(); ++k) out[k] = v[coords[k]] % p;
        return out;
    }

    /// Canonical lift of quotient coordinates back to the ambient space.
    Vec lift(const Vec& q) const {
        Vec v(ambient, 0);
        for (std::size_t k = 0; k < coords.size(); ++k) v[coords[k]] = q[k] % p;
        return v;
    }
};

inline Quotient make_quotient(Mat spanning, std::uint64_t p, std::size_t ambient) {
    Quotient q;
    q.p = p;
    q.ambient = ambient;
    if (spanning.empty()) spanning.push_back(Vec(ambient, 0));
    q.pivots = rref(spanning, p);
    q.u_rref = spanning;
    std::vector<bool> is_pivot(ambient, false);
    for (auto c : q.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) q.coords.push_back(c);
    return q;
}

/// Kernel and cokernel bases of a square matrix, both canonical.
/// The cokernel is returned as the canonical quotient of the ambient column
/// space by im(M).
struct KerCoker {
    Mat kernel;      // basis vectors x with Mx = 0
    Quotient coker;  // ambient / column-space(M)
};

inline KerCoker linear_ker_coker(const Mat& m, std::uint64_t p) {
    if (m.empty() || m.size() != m[0].size())
        throw std::invalid_argument("linear_ker_coker: square matrix required");
    KerCoker r;
    r.kernel = kernel_basis(m, p);
    r.coker = make_quotient(transpose(m), p, m.size()); // columns span the image
    return r;
}

} // namespace fplin
} // namespace wittstone
