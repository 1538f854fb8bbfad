#pragma once

/**
 * @file algebra.hpp
 * @brief Cayley-Dickson algebras A_t over Z_p and their element arithmetic.
 *
 * A_t has dimension 2^t over Z_p and is built by t doublings, each governed
 * by a nonzero parameter delta_i (all -1 by default, giving the classical
 * complex/quaternion/octonion/sedenion ladder with ij = k at level 2).
 * An element is a coefficient vector against the canonical basis
 * f_0 = 1, f_1, ..., f_{2^t - 1}; the first half of the vector is the
 * lower-level component a1 and the second half is a2, so that
 * (a1, a2)(b1, b2) = (a1 b1 + delta conj(b2) a2, a2 conj(b1) + b2 a1).
 *
 * Two product paths exist: the recursive definition above (the reference)
 * and a precomputed structure-constant table (O(4^t) per product, used by
 * the enumeration code). The test-suite checks they agree.
 */

#include <cstddef>
#include <cstdint>
#include <charconv>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdzp/errors.hpp"
#include "cdzp/modp.hpp"

namespace cdzp {

/// Shared context: the prime p and the doubling parameters delta_1..delta_t.
class Algebra {
public:
    /// A_t over Z_p with every delta_i = -1.
    Algebra(Prime p, std::uint32_t level)
        : Algebra(p, std::vector<std::uint32_t>(level, p.value() - 1)) {}

    /// General doubling parameters; deltas[i] is delta_{i+1}, each nonzero.
    Algebra(Prime p, std::vector<std::uint32_t> deltas)
        : p_(p), deltas_(std::move(deltas)) {
        if (deltas_.size() > kMaxLevel)
            throw InvalidParameter("level exceeds the supported maximum");
        for (auto& d : deltas_) {
            d %= p_.value();
            if (d == 0)
                throw InvalidParameter("doubling parameters must be nonzero");
        }
    }

    Prime prime() const noexcept { return p_; }
    std::uint32_t p() const noexcept { return p_.value(); }
    std::uint32_t level() const noexcept {
        return std::uint32_t(deltas_.size());
    }
    std::size_t dim() const noexcept { return std::size_t(1) << level(); }
    std::span<const std::uint32_t> deltas() const noexcept { return deltas_; }

    friend bool operator==(const Algebra& a, const Algebra& b) noexcept {
        return a.p_ == b.p_ && a.deltas_ == b.deltas_;
    }

    static constexpr std::size_t kMaxLevel = 16;

private:
    Prime p_;
    std::vector<std::uint32_t> deltas_;
};

namespace detail {

// Conjugation of a sub-element: index 0 fixed, the rest negated.
inline void conj_span(std::span<std::uint32_t> v, std::uint32_t p) noexcept {
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = neg_mod(v[i], p);
}

// Reference product over the span of the first 2^level basis units.
inline void cd_mul(std::uint32_t p, std::span<const std::uint32_t> deltas,
                   std::uint32_t level, std::span<const std::uint32_t> a,
                   std::span<const std::uint32_t> b, std::span<std::uint32_t> out) {
    if (level == 0) {
        out[0] = mul_mod(a[0], b[0], p);
        return;
    }
    const std::size_t h = std::size_t(1) << (level - 1);
    const std::uint32_t delta = deltas[level - 1];
    auto a1 = a.first(h), a2 = a.subspan(h);
    auto b1 = b.first(h), b2 = b.subspan(h);

    std::vector<std::uint32_t> t1(h), t2(h), cb(h);

    // out1 = a1 b1 + delta * conj(b2) a2
    cd_mul(p, deltas, level - 1, a1, b1, t1);
    cb.assign(b2.begin(), b2.end());
    conj_span(cb, p);
    cd_mul(p, deltas, level - 1, cb, a2, t2);
    for (std::size_t i = 0; i < h; ++i)
        out[i] = add_mod(t1[i], mul_mod(delta, t2[i], p), p);

    // out2 = a2 conj(b1) + b2 a1
    cb.assign(b1.begin(), b1.end());
    conj_span(cb, p);
    cd_mul(p, deltas, level - 1, a2, cb, t1);
    cd_mul(p, deltas, level - 1, b2, a1, t2);
    for (std::size_t i = 0; i < h; ++i)
        out[h + i] = add_mod(t1[i], t2[i], p);
}

// n(a1, a2) = n(a1) - delta * n(a2); the base case is the square.
inline std::uint32_t norm_span(std::uint32_t p,
                               std::span<const std::uint32_t> deltas,
                               std::uint32_t level,
                               std::span<const std::uint32_t> a) noexcept {
    if (level == 0) return mul_mod(a[0], a[0], p);
    const std::size_t h = std::size_t(1) << (level - 1);
    std::uint32_t n1 = norm_span(p, deltas, level - 1, a.first(h));
    std::uint32_t n2 = norm_span(p, deltas, level - 1, a.subspan(h));
    return sub_mod(n1, mul_mod(deltas[level - 1], n2, p), p);
}

}  // namespace detail

/// One element of an Algebra: the context plus reduced coefficients.
class Element {
public:
    Element(Algebra alg, std::vector<std::uint32_t> coeffs)
        : alg_(std::move(alg)), c_(std::move(coeffs)) {
        if (c_.size() != alg_.dim())
            throw InvalidParameter("coefficient count must equal 2^t");
        for (auto& v : c_) v %= alg_.p();
    }

    static Element zero(const Algebra& alg) {
        return Element(alg, std::vector<std::uint32_t>(alg.dim(), 0));
    }
    static Element scalar(const Algebra& alg, std::uint32_t value) {
        std::vector<std::uint32_t> c(alg.dim(), 0);
        c[0] = value % alg.p();
        return Element(alg, std::move(c));
    }
    static Element one(const Algebra& alg) { return scalar(alg, 1); }
    /// Basis unit f_i (f_0 = 1).
    static Element unit(const Algebra& alg, std::size_t i) {
        if (i >= alg.dim()) throw InvalidParameter("basis index out of range");
        std::vector<std::uint32_t> c(alg.dim(), 0);
        c[i] = 1;
        return Element(alg, std::move(c));
    }

    const Algebra& algebra() const noexcept { return alg_; }
    std::span<const std::uint32_t> coeffs() const noexcept { return c_; }
    std::uint32_t coeff(std::size_t i) const { return c_.at(i); }
    std::uint32_t scalar_part() const noexcept { return c_[0]; }

    bool is_zero() const noexcept {
        for (auto v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_scalar() const noexcept {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Element& x, const Element& y) noexcept {
        return x.alg_ == y.alg_ && x.c_ == y.c_;
    }

    /// Coefficient-wise order; only meaningful within one algebra.
    friend bool operator<(const Element& x, const Element& y) noexcept {
        return x.c_ < y.c_;
    }

    friend Element operator+(const Element& x, const Element& y) {
        x.require_same(y);
        std::vector<std::uint32_t> c(x.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = add_mod(x.c_[i], y.c_[i], x.alg_.p());
        return Element(x.alg_, std::move(c));
    }
    friend Element operator-(const Element& x, const Element& y) {
        x.require_same(y);
        std::vector<std::uint32_t> c(x.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = sub_mod(x.c_[i], y.c_[i], x.alg_.p());
        return Element(x.alg_, std::move(c));
    }
    Element operator-() const {
        std::vector<std::uint32_t> c(c_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = neg_mod(c_[i], alg_.p());
        return Element(alg_, std::move(c));
    }

    /// The doubling product; this is the reference path.
    friend Element operator*(const Element& x, const Element& y) {
        x.require_same(y);
        std::vector<std::uint32_t> out(x.c_.size());
        detail::cd_mul(x.alg_.p(), x.alg_.deltas(), x.alg_.level(), x.c_, y.c_,
                       out);
        return Element(x.alg_, std::move(out));
    }

    /// Scale by a field element.
    Element times(std::uint32_t s) const {
        std::vector<std::uint32_t> c(c_.size());
        s %= alg_.p();
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = mul_mod(c_[i], s, alg_.p());
        return Element(alg_, std::move(c));
    }
    friend Element operator*(std::uint32_t s, const Element& x) {
        return x.times(s);
    }

    /// Conjugation: fixes f_0, negates every other coefficient.
    Element conj() const {
        std::vector<std::uint32_t> c(c_);
        detail::conj_span(c, alg_.p());
        return Element(alg_, std::move(c));
    }

    /// The component orthogonal to 1 (coefficient 0 dropped).
    Element imaginary_part() const {
        std::vector<std::uint32_t> c(c_);
        c[0] = 0;
        return Element(alg_, std::move(c));
    }

    /// t(x) = x + conj(x) = 2 c_0, reported as a field scalar.
    Residue trace() const {
        return Residue(add_mod(c_[0], c_[0], alg_.p()), alg_.prime());
    }

    /// n(x) = x conj(x); the recursive quadratic form of the algebra.
    Residue norm() const {
        return Residue(
            detail::norm_span(alg_.p(), alg_.deltas(), alg_.level(), c_),
            alg_.prime());
    }

    /// x^m by repeated squaring; x^0 = 1. Well defined: the algebra is
    /// power-associative.
    Element pow(std::uint64_t m) const {
        Element acc = one(alg_);
        Element base = *this;
        while (m != 0) {
            if (m & 1) acc = acc * base;
            base = base * base;
            m >>= 1;
        }
        return acc;
    }

    /// x^-1 = conj(x) / n(x). Throws NotInvertible when the norm vanishes.
    Element inverse() const {
        Residue n = norm();
        if (n.value() == 0) throw NotInvertible();
        return conj().times(mod_inverse(n).value());
    }

private:
    void require_same(const Element& other) const {
        if (!(alg_ == other.alg_)) throw ContextMismatch();
    }

    Algebra alg_;
    std::vector<std::uint32_t> c_;
};

/**
 * Structure constants of the basis: f_i f_j = scale * f_index, where the
 * diagonal lands on f_0 (squares of units are scalars). Built once from the
 * reference product and then usable as a fast O(4^t) multiplier.
 */
class BasisTable {
public:
    struct Entry {
        std::uint32_t scale;
        std::uint32_t index;
    };

    explicit BasisTable(const Algebra& alg) : alg_(alg) {
        const std::size_t n = alg_.dim();
        if (n > 1024) throw TooLarge("basis table capped at dimension 1024");
        entries_.resize(n * n);
        std::vector<std::uint32_t> a(n, 0), b(n, 0), out(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = 1;
            for (std::size_t j = 0; j < n; ++j) {
                b[j] = 1;
                detail::cd_mul(alg_.p(), alg_.deltas(), alg_.level(), a, b, out);
                Entry e{0, 0};
                std::size_t nonzero = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (out[k] != 0) {
                        ++nonzero;
                        e = Entry{out[k], std::uint32_t(k)};
                    }
                }
                if (nonzero != 1)
                    throw Error("basis product is not a single unit");
                entries_[i * n + j] = e;
                b[j] = 0;
            }
            a[i] = 0;
        }
    }

    const Algebra& algebra() const noexcept { return alg_; }

    const Entry& entry(std::size_t i, std::size_t j) const {
        return entries_.at(i * alg_.dim() + j);
    }

    /// out = a * b through the table. Aliasing between out and a/b is not
    /// allowed.
    void mul_into(std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out) const {
        const std::size_t n = alg_.dim();
        const std::uint32_t p = alg_.p();
        for (auto& v : out) v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            const Entry* row = entries_.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j] == 0) continue;
                std::uint32_t term =
                    mul_mod(mul_mod(a[i], b[j], p), row[j].scale, p);
                out[row[j].index] = add_mod(out[row[j].index], term, p);
            }
        }
    }

    Element mul(const Element& x, const Element& y) const {
        if (!(x.algebra() == alg_) || !(y.algebra() == alg_))
            throw ContextMismatch();
        std::vector<std::uint32_t> out(alg_.dim());
        mul_into(x.coeffs(), y.coeffs(), out);
        return Element(alg_, std::move(out));
    }

private:
    Algebra alg_;
    std::vector<Entry> entries_;
};

inline BasisTable basis_table(const Algebra& alg) { return BasisTable(alg); }

/// Name of basis unit f_i at the given level: i/j/k through level 2, f1..
/// beyond. f_0 has the empty name.
inline std::string unit_name(std::uint32_t level, std::size_t i) {
    if (i == 0) return "";
    if (level <= 2) {
        static const char* quat[] = {"", "i", "j", "k"};
        return quat[i];
    }
    return "f" + std::to_string(i);
}

/// "18,8,13,4" -> Element; entries may be any integers, reduced mod p.
inline Element parse_element(const Algebra& alg, std::string_view text) {
    std::vector<std::uint32_t> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(
            start, comma == std::string_view::npos ? text.size() - start
                                                   : comma - start);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
            throw FormatError("bad coefficient '" + std::string(tok) + "'");
        coeffs.push_back(Residue::from_int(v, alg.prime()).value());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (coeffs.size() != alg.dim())
        throw FormatError("expected " + std::to_string(alg.dim()) +
                          " coefficients, got " + std::to_string(coeffs.size()));
    return Element(alg, std::move(coeffs));
}

/// Canonical textual form: coefficients joined by commas.
inline std::string to_coeff_string(const Element& x) {
    std::string out;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(x.coeffs()[i]);
    }
    return out;
}

/// Display form: zero terms dropped, unit coefficients elided ("18+8i+13j+4k").
inline std::string to_display_string(const Element& x) {
    std::string out;
    const auto level = x.algebra().level();
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        std::uint32_t c = x.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += unit_name(level, i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace cdzp
