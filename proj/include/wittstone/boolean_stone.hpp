#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wittstone/fp_algebra.hpp"
#include "wittstone/linalg_fp.hpp"

namespace wittstone {

/// A finite-dimensional F_p-algebra in which a^p = a holds for every
/// element. Construction verifies the condition (via the Frobenius matrix,
/// which is equivalent by F_p-linearity of Frobenius).
class PBooleanAlgebra {
public:
    explicit PBooleanAlgebra(FiniteFpAlgebra a) : alg_(std::move(a)) {
        if (!is_p_boolean(alg_))
            throw std::invalid_argument("PBooleanAlgebra: a^p = a fails");
    }

    const FiniteFpAlgebra& algebra() const { return alg_; }

    static bool is_p_boolean(const FiniteFpAlgebra& a) {
        return frobenius_matrix(a) == fplin::identity(a.dim());
    }

private:
    FiniteFpAlgebra alg_;
};

/// The Stone dual of a p-Boolean algebra: its F_p-algebra characters,
/// each stored as the vector of values on the basis.
struct FiniteStoneDual {
    std::vector<fplin::Vec> points;
};

/// Whether a linear functional (given by basis values) is an algebra
/// character: unital and multiplicative.
inline bool is_character(const FiniteFpAlgebra& a, const fplin::Vec& chi) {
    const std::uint64_t p = a.prime().value();
    auto apply = [&](const fplin::Vec& v) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < a.dim(); ++k) acc += chi[k] * v[k] % p;
        return acc % p;
    };
    if (apply(a.unit()) != 1) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j) {
            fplin::Vec ei(a.dim(), 0), ej(a.dim(), 0);
            ei[i] = 1; ej[j] = 1;
            if (apply(a.mul(ei, ej)) != chi[i] * chi[j] % p) return false;
        }
    return true;
}

/// All F_p-algebra characters A -> F_p, by exhaustive search over linear
/// functionals. For a p-Boolean algebra there are exactly dim of them.
inline FiniteStoneDual spec_chars(const FiniteFpAlgebra& a) {
    FiniteStoneDual d;
    const std::size_t total = a.element_count(); // p^dim functionals
    for (std::size_t idx = 0; idx < total; ++idx) {
        fplin::Vec chi = a.element(idx);
        if (is_character(a, chi)) d.points.push_back(chi);
    }
    return d;
}

/// Cont(S, F_p) for a finite set: the diagonal function algebra in the
/// indicator basis.
inline PBooleanAlgebra stone_dual_of_set(std::size_t set_size, Prime p) {
    if (set_size == 0)
        throw std::invalid_argument("stone_dual_of_set: empty set (zero ring excluded)");
    return PBooleanAlgebra(algebras::fp_power(p, set_size));
}

/// A subalgebra presented inside an ambient algebra: its own structure
/// constants plus the inclusion (rows = basis vectors in ambient coords).
struct PresentedSubalgebra {
    FiniteFpAlgebra algebra;
    fplin::Mat basis; // dim x ambient_dim
};

/// Builds the subalgebra spanned by the given vectors. The span must
/// contain the unit and be closed under multiplication.
inline PresentedSubalgebra subalgebra_from_span(const FiniteFpAlgebra& amb, fplin::Mat span) {
    const std::uint64_t p = amb.prime().value();
    fplin::Mat basis = fplin::row_space_basis(std::move(span), p);
    if (basis.empty())
        throw std::invalid_argument("subalgebra_from_span: zero span");
    std::vector<std::size_t> pivots;
    {
        fplin::Mat copy = basis;
        pivots = fplin::rref(copy, p);
    }
    // Coordinates w.r.t. an RREF basis are read off at the pivot columns;
    // a nonzero remainder means the vector is outside the span.
    auto coords_of = [&](fplin::Vec v) -> fplin::Vec {
        fplin::Vec c(basis.size(), 0);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            std::uint64_t f = v[pivots[r]] % p;
            c[r] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = (v[j] + (p - f) * basis[r][j]) % p;
        }
        for (auto x : v)
            if (x % p != 0) throw std::invalid_argument("subalgebra_from_span: span not closed");
        return c;
    };
    const std::size_t d = basis.size();
    std::vector<std::vector<std::vector<std::uint64_t>>> sc(
        d, std::vector<std::vector<std::uint64_t>>(d, std::vector<std::uint64_t>(d, 0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            fplin::Vec prod = amb.mul(basis[i], basis[j]);
            sc[i][j] = coords_of(prod);
        }
    fplin::Vec unit = coords_of(amb.unit());
    return PresentedSubalgebra{FiniteFpAlgebra(amb.prime(), d, {}, sc, unit), basis};
}

/// A quotient algebra together with the projection (quotient coordinates of
/// any ambient element). Empty when the ideal is the whole ring.
struct PresentedQuotient {
    std::optional<FiniteFpAlgebra> algebra; // nullopt: zero ring
    fplin::Quotient proj;
};

/// Quotient of an algebra by the ideal spanned by the given generators
/// (closed up under multiplication by basis elements).
inline PresentedQuotient quotient_by_ideal(const FiniteFpAlgebra& amb, const fplin::Mat& gens) {
    const std::uint64_t p = amb.prime().value();
    fplin::Mat span;
    for (const auto& g : gens) {
        span.push_back(g);
        for (std::size_t i = 0; i < amb.dim(); ++i) {
            fplin::Vec e(amb.dim(), 0);
            e[i] = 1;
            span.push_back(amb.mul(e, g));
        }
    }
    // one pass of basis-multiplication suffices once the span is a subspace:
    // iterate to a fixed point to be safe
    std::size_t rank_before = 0, rank_after = fplin::rank(span, p);
    while (rank_after != rank_before) {
        rank_before = rank_after;
        fplin::Mat next = span;
        for (const auto& v : fplin::row_space_basis(span, p))
            for (std::size_t i = 0; i < amb.dim(); ++i) {
                fplin::Vec e(amb.dim(), 0);
                e[i] = 1;
                next.push_back(amb.mul(e, v));
            }
        span = std::move(next);
        rank_after = fplin::rank(span, p);
    }
    PresentedQuotient q;
    q.proj = fplin::make_quotient(span, p, amb.dim());
    if (q.proj.dim() == 0) return q; // zero ring
    const std::size_t d = q.proj.dim();
    std::vector<std::vector<std::vector<std::uint64_t>>> sc(
        d, std::vector<std::vector<std::uint64_t>>(d, std::vector<std::uint64_t>(d, 0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            fplin::Vec qi(d, 0), qj(d, 0);
            qi[i] = 1; qj[j] = 1;
            sc[i][j] = q.proj.project(amb.mul(q.proj.lift(qi), q.proj.lift(qj)));
        }
    fplin::Vec unit = q.proj.project(amb.unit());
    q.algebra = FiniteFpAlgebra(amb.prime(), d, {}, sc, unit);
    return q;
}

/// ker(Frob - 1) as a p-Boolean subalgebra; the right adjoint to the
/// inclusion of p-Boolean algebras into F_p-algebras.
inline PresentedSubalgebra frobenius_invariants(const FiniteFpAlgebra& a) {
    fplin::Mat m = frobenius_matrix(a);
    const std::uint64_t p = a.prime().value();
    for (std::size_t i = 0; i < a.dim(); ++i) m[i][i] = (m[i][i] + p - 1) % p;
    fplin::Mat ker = fplin::kernel_basis(m, p);
    ker.push_back(a.unit()); // 1^p = 1, always invariant
    return subalgebra_from_span(a, ker);
}

/// The coinvariant quotient: A modulo the ideal generated by all a^p - a.
/// This is the universal p-Boolean quotient (the left adjoint); it can be
/// the zero ring, reported as nullopt.
inline PresentedQuotient frobenius_coinvariants(const FiniteFpAlgebra& a) {
    fplin::Mat gens;
    for (std::size_t idx = 0; idx < a.element_count(); ++idx) {
        fplin::Vec v = a.element(idx);
        gens.push_back(a.add(a.pow(v, a.prime().value()), a.neg(v)));
    }
    PresentedQuotient q = quotient_by_ideal(a, gens);
    if (q.algebra && !PBooleanAlgebra::is_p_boolean(*q.algebra))
        throw std::logic_error("frobenius_coinvariants: quotient not p-Boolean");
    return q;
}

/// Coperfection: the eventual image E = Frob^k(A) (k = dim suffices), on
/// which Frobenius is bijective, together with the unit map A -> E given by
/// Frob^k expressed in the subalgebra basis.
struct Coperfection {
    PresentedSubalgebra image;           // E as a presented subalgebra
    std::vector<fplin::Vec> unit_map;    // image of each ambient basis vector, in E coords
};

inline Coperfection coperfection(const FiniteFpAlgebra& a) {
    const std::uint64_t p = a.prime().value();
    const std::size_t k = a.dim();
    fplin::Mat span;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        fplin::Vec e(a.dim(), 0);
        e[i] = 1;
        for (std::size_t t = 0; t < k; ++t) e = a.pow(e, p);
        span.push_back(e);
    }
    PresentedSubalgebra sub = subalgebra_from_span(a, span);
    // express Frob^k(e_i) in the subalgebra basis
    Coperfection c{std::move(sub), {}};
    std::vector<std::size_t> pivots;
    {
        fplin::Mat copy = c.image.basis;
        pivots = fplin::rref(copy, p);
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        fplin::Vec e(a.dim(), 0);
        e[i] = 1;
        for (std::size_t t = 0; t < k; ++t) e = a.pow(e, p);
        fplin::Vec coords(c.image.basis.size(), 0);
        for (std::size_t r = 0; r < c.image.basis.size(); ++r) {
            std::uint64_t f = e[pivots[r]] % p;
            coords[r] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] = (e[j] + (p - f) * c.image.basis[r][j]) % p;
        }
        c.unit_map.push_back(coords);
    }
    return c;
}

/// Perfection: the limit of ... -> A -> A along Frobenius. For a finite
/// algebra every compatible sequence lives in the eventual image E, where
/// Frobenius is invertible, so the limit is E with counit the inclusion.
inline PresentedSubalgebra perfection(const FiniteFpAlgebra& a) {
    return coperfection(a).image;
}

inline bool is_perfect_algebra(const FiniteFpAlgebra& a) {
    return fplin::rank(frobenius_matrix(a), a.prime().value()) == a.dim();
}

/// reduced / Frobenius-injective / semiperfect diagnostics. For a
/// finite-dimensional algebra injectivity and surjectivity of the linear
/// Frobenius coincide; reduced <=> Frobenius injective is asserted.
struct CharPDiagnostics {
    bool reduced;
    bool frob_injective;
    bool semiperfect;
};

inline CharPDiagnostics char_p_diagnostics(const FiniteFpAlgebra& a) {
    CharPDiagnostics d{};
    const std::size_t rk = fplin::rank(frobenius_matrix(a), a.prime().value());
    d.frob_injective = (rk == a.dim());
    d.semiperfect = (rk == a.dim());
    d.reduced = true;
    for (std::size_t idx = 1; idx < a.element_count(); ++idx) {
        fplin::Vec v = a.element(idx);
        fplin::Vec pw = v;
        for (std::size_t e = 1; e < a.dim(); ++e) pw = a.mul(pw, v);
        if (a.is_zero(pw)) { // nilpotency index bounded by dim
            d.reduced = false;
            break;
        }
    }
    if (d.reduced != d.frob_injective)
        throw std::logic_error("char_p_diagnostics: reduced <=> Frobenius injective violated");
    return d;
}

/// All F_p-algebra maps A -> B, each as the list of images of A's basis
/// vectors. Brute force over linear maps, filtered by unitality and
/// multiplicativity; the search space p^(dimA*dimB) is bounded.
inline std::vector<std::vector<fplin::Vec>> enumerate_algebra_maps(const FiniteFpAlgebra& a,
                                                                   const FiniteFpAlgebra& b) {
    if (a.prime() != b.prime())
        throw std::invalid_argument("enumerate_algebra_maps: different primes");
    const std::uint64_t p = a.prime().value();
    const std::size_t cells = a.dim() * b.dim();
    if (pow_u64(p, cells) > (1u << 16))
        throw std::invalid_argument("enumerate_algebra_maps: search space too large");
    const std::size_t total = (std::size_t)pow_u64(p, cells);
    std::vector<std::vector<fplin::Vec>> maps;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        std::vector<fplin::Vec> images(a.dim(), fplin::Vec(b.dim(), 0));
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) {
                images[i][j] = c % p;
                c /= p;
            }
        auto apply = [&](const fplin::Vec& v) {
            fplin::Vec r(b.dim(), 0);
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (std::size_t j = 0; j < b.dim(); ++j)
                    r[j] = (r[j] + v[i] * images[i][j]) % p;
            return r;
        };
        if (apply(a.unit()) != b.unit()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < a.dim() && ok; ++i)
            for (std::size_t j = 0; j < a.dim() && ok; ++j) {
                fplin::Vec ei(a.dim(), 0), ej(a.dim(), 0);
                ei[i] = 1; ej[j] = 1;
                if (apply(a.mul(ei, ej)) != b.mul(images[i], images[j])) ok = false;
            }
        if (ok) maps.push_back(std::move(images));
    }
    return maps;
}

} // namespace wittstone
