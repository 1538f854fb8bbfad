#pragma once

/**
 * @file potency.hpp
 * @brief Classification of special elements of A_t over Z_p.
 *
 * An element x != 0 is k-potent when k >= 2 is the smallest exponent with
 * x^k = x, nilpotent when some power vanishes (the index is then always 2),
 * and of (m, k)-type when m > k >= 1 are the smallest exponents with
 * x^m = x^k. Two classifiers are provided: a structured one that reads the
 * answer off the trace, the norm and a two-term scalar recurrence, and a
 * brute-force iterative one used as the oracle in tests and censuses. They
 * must agree everywhere; the census of a whole algebra is exact.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cdzp/algebra.hpp"
#include "cdzp/errors.hpp"
#include "cdzp/modp.hpp"

namespace cdzp {

enum class PotencyClass { Zero, Nilpotent, KPotent, MKType, Unclassified };

/// Which branch of the structured classifier produced the answer.
enum class Route {
    None,               // the zero element
    ScalarOrder,        // z in Z_p^*: k = ord(z) + 1
    TraceOrder,         // n = 0, t != 0: k = ord(t) + 1
    NilpotentSquare,    // n = 0, t = 0: z^2 = 0
    UnitPlusNilpotent,  // z = eta + w, w^2 = 0: k = p ord(eta) + 1
    ScanPureImaginary,  // first C_m = 0: z^m lands in Z_p w
    ScanScalar,         // first D_m = 0: z^m lands in Z_p
    Iterative,          // answered by successive multiplication
    Unresolved,         // loud fallback; never expected
};

inline const char* to_string(PotencyClass c) {
    switch (c) {
        case PotencyClass::Zero: return "zero";
        case PotencyClass::Nilpotent: return "nilpotent";
        case PotencyClass::KPotent: return "k-potent";
        case PotencyClass::MKType: return "mk-type";
        case PotencyClass::Unclassified: return "unclassified";
    }
    return "?";
}

inline const char* to_string(Route r) {
    switch (r) {
        case Route::None: return "zero";
        case Route::ScalarOrder: return "scalar-order";
        case Route::TraceOrder: return "trace-order";
        case Route::NilpotentSquare: return "nilpotent-square";
        case Route::UnitPlusNilpotent: return "unit-plus-nilpotent";
        case Route::ScanPureImaginary: return "scan-pure-imaginary";
        case Route::ScanScalar: return "scan-scalar";
        case Route::Iterative: return "iterative";
        case Route::Unresolved: return "unresolved";
    }
    return "?";
}

/// Orders and indices uncovered along the structured route.
struct Witnesses {
    std::optional<std::uint64_t> m;        // first vanishing index of the scan
    std::optional<std::uint64_t> M;        // order of the scalar z^(2m)
    std::optional<std::uint64_t> theta;    // order of the scalar part
    std::optional<std::uint64_t> tau;      // order of w^2 (recorded, unused)
    std::optional<std::uint64_t> upsilon;  // order of the scalar C_m
};

struct PotencyReport {
    PotencyClass cls = PotencyClass::Unclassified;
    std::optional<std::uint64_t> k;  // potency index, k >= 2
    std::optional<std::uint64_t> s;  // z^s = 1 when z is invertible
    std::optional<std::pair<std::uint64_t, std::uint64_t>> mk;  // (m, k) type
    Route route = Route::Unresolved;
    Witnesses witnesses;
    std::uint32_t trace = 0;
    std::uint32_t norm = 0;
};

/// Nilpotency index: 2 exactly when x != 0, n(x) = 0 and t(x) = 0 (then
/// x^2 = t x - n = 0); no other index occurs. Empty otherwise.
inline std::optional<int> nilpotency_index(const Element& x) {
    if (x.is_zero()) return std::nullopt;
    if (x.norm().value() == 0 && x.trace().value() == 0) return 2;
    return std::nullopt;
}

namespace detail {

// Successive-multiplication scan on raw coefficients; y walks x^2, x^3, ...
inline std::optional<std::uint64_t> iterative_potency_span(
    const BasisTable& table, std::span<const std::uint32_t> x,
    std::uint64_t bound, std::vector<std::uint32_t>& y,
    std::vector<std::uint32_t>& scratch) {
    y.assign(x.begin(), x.end());
    scratch.resize(x.size());
    for (std::uint64_t k = 2; k <= bound; ++k) {
        table.mul_into(y, x, scratch);
        y.swap(scratch);
        if (std::equal(y.begin(), y.end(), x.begin(), x.end())) return k;
    }
    return std::nullopt;
}

inline std::uint64_t default_bound(const Algebra& alg) {
    return std::uint64_t(alg.p()) * alg.p() + 1;
}

}  // namespace detail

/**
 * Smallest 2 <= k <= bound with x^k = x, by successive multiplication.
 * The default bound p^2 + 1 covers every element: invertible elements have
 * order dividing the unit group of the two-dimensional Z_p[x].
 */
inline std::optional<std::uint64_t> potency_index_iterative(
    const Element& x, std::optional<std::uint64_t> bound = {}) {
    BasisTable table(x.algebra());
    std::vector<std::uint32_t> y, scratch;
    return detail::iterative_potency_span(
        table, x.coeffs(), bound.value_or(detail::default_bound(x.algebra())),
        y, scratch);
}

/// k = ord(t(x)) + 1 for x != 0 with n(x) = 0 and t(x) != 0. The result never
/// exceeds p. Throws PreconditionViolated outside that domain.
inline std::uint64_t potency_via_trace(const Element& x) {
    if (x.is_zero()) throw PreconditionViolated("x must be nonzero");
    if (x.norm().value() != 0)
        throw PreconditionViolated("x must have zero norm");
    std::uint32_t t = x.trace().value();
    if (t == 0) throw PreconditionViolated("x must have nonzero trace");
    return std::uint64_t(mul_order(Residue(t, x.algebra().prime()))) + 1;
}

/// One step of z^r = C_r + D_r w written in the basis {1, w}.
struct ScalarPair {
    std::uint32_t C;
    std::uint32_t D;
    std::uint64_t r;
};

/**
 * The scalar coordinates of z^r for z = a + w with w^2 = beta scalar:
 * C_0 = 1, D_0 = 0, C_{r+1} = a C_r + beta D_r, D_{r+1} = C_r + a D_r.
 * Returns r_max + 1 entries.
 */
inline std::vector<ScalarPair> scalar_sequence(Residue a, Residue beta,
                                               std::uint64_t r_max) {
    if (!(a.modulus() == beta.modulus())) throw ContextMismatch();
    const std::uint32_t p = a.modulus().value();
    std::vector<ScalarPair> seq;
    seq.reserve(std::size_t(r_max) + 1);
    std::uint32_t C = 1, D = 0;
    seq.push_back({C, D, 0});
    for (std::uint64_t r = 1; r <= r_max; ++r) {
        std::uint32_t nc = add_mod(mul_mod(a.value(), C, p),
                                   mul_mod(beta.value(), D, p), p);
        std::uint32_t nd = add_mod(C, mul_mod(a.value(), D, p), p);
        C = nc;
        D = nd;
        seq.push_back({C, D, r});
    }
    return seq;
}

/**
 * Structured classification. Decision order:
 *   z = 0                    -> Zero
 *   n = 0, t != 0            -> KPotent, k = ord(t) + 1
 *   n = 0, t = 0             -> Nilpotent (index 2)
 *   z scalar                 -> KPotent, k = ord(z) + 1
 *   w^2 = 0 (w = imag part)  -> KPotent, k = p ord(scalar part) + 1
 *   otherwise                -> scan C_r/D_r from r = 2 up to p^2 for the
 *                               first vanishing coordinate; a C-hit gives
 *                               s = 2 m ord(z^{2m}), a D-hit s = m ord(C_m),
 *                               and k = s + 1.
 * The scan starts at r = 2: D_1 = 1 never vanishes, and for pure-imaginary z
 * the r = 1 C-hit reappears as the D_2 = 0 hit with the same resulting s.
 */
inline PotencyReport classify_structured(const Element& z) {
    const Algebra& alg = z.algebra();
    const std::uint32_t p = alg.p();
    const Prime prime = alg.prime();

    PotencyReport rep;
    rep.trace = z.trace().value();
    rep.norm = z.norm().value();

    if (z.is_zero()) {
        rep.cls = PotencyClass::Zero;
        rep.route = Route::None;
        return rep;
    }

    if (rep.norm == 0) {
        if (rep.trace != 0) {
            std::uint64_t theta = mul_order(Residue(rep.trace, prime));
            rep.cls = PotencyClass::KPotent;
            rep.k = theta + 1;
            rep.route = Route::TraceOrder;
            rep.witnesses.theta = theta;
        } else {
            rep.cls = PotencyClass::Nilpotent;
            rep.route = Route::NilpotentSquare;
        }
        return rep;
    }

    const std::uint32_t a = z.scalar_part();

    if (z.is_scalar()) {
        std::uint64_t theta = mul_order(Residue(a, prime));
        rep.cls = PotencyClass::KPotent;
        rep.s = theta;
        rep.k = theta + 1;
        rep.route = Route::ScalarOrder;
        rep.witnesses.theta = theta;
        return rep;
    }

    // z = a + w with w != 0; w^2 = -n(w) is a scalar.
    const std::uint32_t norm_w = z.imaginary_part().norm().value();
    const std::uint32_t beta = neg_mod(norm_w, p);

    if (beta == 0) {
        // w is nilpotent and a != 0 (n(z) = a^2 + n(w) != 0).
        std::uint64_t theta = mul_order(Residue(a, prime));
        rep.cls = PotencyClass::KPotent;
        rep.s = std::uint64_t(p) * theta;
        rep.k = *rep.s + 1;
        rep.route = Route::UnitPlusNilpotent;
        rep.witnesses.theta = theta;
        return rep;
    }

    rep.witnesses.tau = mul_order(Residue(beta, prime));

    std::uint32_t C = a, D = 1;  // z^1
    const std::uint64_t scan_bound = std::uint64_t(p) * p;
    for (std::uint64_t r = 2; r <= scan_bound; ++r) {
        std::uint32_t nc = add_mod(mul_mod(a, C, p), mul_mod(beta, D, p), p);
        std::uint32_t nd = add_mod(C, mul_mod(a, D, p), p);
        C = nc;
        D = nd;
        if (C == 0) {
            // z^r = D w, so z^{2r} = D^2 beta is a scalar.
            std::uint32_t z2m = mul_mod(mul_mod(D, D, p), beta, p);
            std::uint64_t M = mul_order(Residue(z2m, prime));
            rep.cls = PotencyClass::KPotent;
            rep.s = 2 * r * M;
            rep.k = *rep.s + 1;
            rep.route = Route::ScanPureImaginary;
            rep.witnesses.m = r;
            rep.witnesses.M = M;
            return rep;
        }
        if (D == 0) {
            std::uint64_t upsilon = mul_order(Residue(C, prime));
            rep.cls = PotencyClass::KPotent;
            rep.s = upsilon * r;
            rep.k = *rep.s + 1;
            rep.route = Route::ScanScalar;
            rep.witnesses.m = r;
            rep.witnesses.upsilon = upsilon;
            return rep;
        }
    }

    rep.cls = PotencyClass::Unclassified;
    rep.route = Route::Unresolved;
    return rep;
}

/**
 * Roots of x^n = 1 of two constructed shapes: scalars eta with ord(eta) | n,
 * and eta + w for nilpotent w when p ord(eta) | n (then (eta + w)^n =
 * eta^n + n eta^{n-1} w = 1). Nilpotents are enumerated exhaustively when the
 * trace-zero slice is small and rejection-sampled deterministically
 * otherwise; sample_budget caps how many are used. Every element returned is
 * verified to satisfy pow(z, n) = 1.
 */
inline std::vector<Element> unit_root_solutions(const Algebra& alg,
                                                std::uint64_t n,
                                                std::size_t sample_budget = 64) {
    if (n == 0) throw PreconditionViolated("exponent must be positive");
    const std::uint32_t p = alg.p();
    const Prime prime = alg.prime();
    std::set<Element> found;

    for (std::uint32_t eta = 1; eta < p; ++eta)
        if (n % mul_order(Residue(eta, prime)) == 0)
            found.insert(Element::scalar(alg, eta));

    if (n % p == 0 && alg.level() >= 2) {
        std::vector<Element> nilpotents;
        const std::size_t imag = alg.dim() - 1;
        // p^imag trace-zero vectors; enumerate when that stays desk-sized.
        double space = 1;
        for (std::size_t i = 0; i < imag && space <= 2e5; ++i) space *= p;
        if (space <= 2e5) {
            std::vector<std::uint32_t> c(alg.dim(), 0);
            while (true) {
                Element w(alg, c);
                if (!w.is_zero() && w.norm().value() == 0) {
                    nilpotents.push_back(w);
                    if (nilpotents.size() >= sample_budget) break;
                }
                std::size_t i = c.size();
                while (i-- > 1) {
                    if (++c[i] < p) break;
                    c[i] = 0;
                }
                if (i == 0) break;
            }
        } else {
            std::mt19937_64 rng(0x5eedULL * p + 31 * alg.level() + n);
            std::set<Element> seen;
            for (std::size_t attempt = 0;
                 attempt < 4000 * sample_budget && seen.size() < sample_budget;
                 ++attempt) {
                std::vector<std::uint32_t> c(alg.dim(), 0);
                for (std::size_t i = 1; i < c.size(); ++i)
                    c[i] = std::uint32_t(rng() % p);
                Element w(alg, std::move(c));
                if (!w.is_zero() && w.norm().value() == 0) seen.insert(w);
            }
            nilpotents.assign(seen.begin(), seen.end());
        }
        for (std::uint32_t eta = 1; eta < p; ++eta) {
            std::uint64_t need =
                std::uint64_t(p) * mul_order(Residue(eta, prime));
            if (n % need != 0) continue;
            for (const Element& w : nilpotents)
                found.insert(Element::scalar(alg, eta) + w);
        }
    }

    std::vector<Element> out;
    out.reserve(found.size());
    for (const Element& z : found) {
        if (!(z.pow(n) == Element::one(alg)))
            throw Error("constructed root fails z^n = 1");
        out.push_back(z);
    }
    return out;
}

/**
 * The smallest (m, k) with m > k >= 1 and x^m = x^k, scanning k ascending
 * and then m. Every element of a finite algebra has such a pair; an
 * invertible s-order element yields (s + 1, 1) and a nilpotent yields (3, 2).
 */
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> mk_type(
    const Element& x, std::optional<std::uint64_t> bound = {}) {
    const std::uint64_t b =
        bound.value_or(detail::default_bound(x.algebra()) + 1);
    if (b < 3) throw PreconditionViolated("bound must be at least 3");
    std::vector<Element> powers;  // powers[i] = x^(i+1)
    powers.reserve(std::size_t(b));
    powers.push_back(x);
    for (std::uint64_t e = 2; e <= b; ++e)
        powers.push_back(powers.back() * x);
    for (std::uint64_t k = 1; k < b; ++k)
        for (std::uint64_t m = k + 1; m <= b; ++m)
            if (powers[std::size_t(m - 1)] == powers[std::size_t(k - 1)])
                return std::make_pair(m, k);
    return std::nullopt;
}

/// Exact census of one algebra, classified by the iterative oracle.
struct Census {
    std::uint32_t p = 0;
    std::uint32_t t = 0;
    std::uint64_t total = 0;
    std::uint64_t zero = 0;
    std::uint64_t nilpotent = 0;
    std::uint64_t unclassified = 0;
    std::map<std::uint64_t, std::uint64_t> k_potent;  // k -> count

    std::uint64_t k_potent_total() const {
        std::uint64_t s = 0;
        for (auto& [k, c] : k_potent) s += c;
        return s;
    }
    std::uint64_t count_for_k(std::uint64_t k) const {
        auto it = k_potent.find(k);
        return it == k_potent.end() ? 0 : it->second;
    }
};

/**
 * Walks every element of the algebra in lexicographic coefficient order and
 * classifies it by nilpotency_index / potency_index_iterative. Throws
 * TooLarge when p^(2^t) exceeds limit.
 */
inline Census enumerate_classify(const Algebra& alg,
                                 std::uint64_t limit = 1'000'000,
                                 std::optional<std::uint64_t> bound = {}) {
    const std::uint32_t p = alg.p();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (space > limit / p + 1) throw TooLarge("element space exceeds the cap");
        space *= p;
        if (space > limit) throw TooLarge("element space exceeds the cap");
    }

    const std::uint64_t it_bound = bound.value_or(detail::default_bound(alg));
    BasisTable table(alg);
    Census census;
    census.p = p;
    census.t = alg.level();
    census.total = space;

    std::vector<std::uint32_t> c(alg.dim(), 0), y, scratch;
    while (true) {
        Element x(alg, c);
        if (x.is_zero()) {
            ++census.zero;
        } else if (nilpotency_index(x).has_value()) {
            ++census.nilpotent;
        } else if (auto k = detail::iterative_potency_span(table, c, it_bound,
                                                           y, scratch)) {
            ++census.k_potent[*k];
        } else {
            ++census.unclassified;
        }
        std::size_t i = c.size();
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
        if (i == std::size_t(-1)) break;
    }
    return census;
}

}  // namespace cdzp
