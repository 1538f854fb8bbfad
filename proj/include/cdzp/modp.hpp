#pragma once

/**
 * @file modp.hpp
 * @brief Exact arithmetic in the prime field Z_p, p an odd machine-word prime.
 *
 * Everything is brute-force honest: primality by trial division, orders by
 * walking the sorted divisors of p - 1, two-square decompositions by a double
 * loop. Correctness over cleverness; p is desk-scale (p < 2^31).
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "cdzp/errors.hpp"

namespace cdzp {

/// A validated odd prime modulus.
class Prime {
public:
    explicit Prime(std::uint32_t value) : value_(value) {
        if (value == 2) throw OddPrimeRequired();
        if (!is_prime(value)) throw NotPrime(value);
    }

    std::uint32_t value() const noexcept { return value_; }

    friend bool operator==(Prime a, Prime b) noexcept {
        return a.value_ == b.value_;
    }

    static bool is_prime(std::uint32_t n) noexcept {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t value_;
};

// Scalar helpers on raw words; inputs must already be reduced mod p.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b,
                             std::uint32_t p) noexcept {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b,
                             std::uint32_t p) noexcept {
    return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p) - b);
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) noexcept {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b,
                             std::uint32_t p) noexcept {
    return std::uint32_t(std::uint64_t(a) * b % p);
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e,
                             std::uint32_t p) noexcept {
    std::uint32_t acc = 1 % p;
    std::uint32_t base = a;
    while (e != 0) {
        if (e & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return acc;
}

/// A value of Z_p that remembers its modulus. Mixed-modulus arithmetic throws.
class Residue {
public:
    Residue(std::uint64_t value, Prime modulus)
        : value_(std::uint32_t(value % modulus.value())), p_(modulus) {}

    /// Accepts negative input and reduces it into [0, p).
    static Residue from_int(std::int64_t v, Prime modulus) {
        std::int64_t p = modulus.value();
        std::int64_t r = v % p;
        if (r < 0) r += p;
        return Residue(std::uint64_t(r), modulus);
    }

    std::uint32_t value() const noexcept { return value_; }
    Prime modulus() const noexcept { return p_; }

    friend bool operator==(Residue a, Residue b) noexcept {
        return a.p_ == b.p_ && a.value_ == b.value_;
    }

    friend Residue operator+(Residue a, Residue b) {
        a.require_same(b);
        return Residue(add_mod(a.value_, b.value_, a.p_.value()), a.p_);
    }
    friend Residue operator-(Residue a, Residue b) {
        a.require_same(b);
        return Residue(sub_mod(a.value_, b.value_, a.p_.value()), a.p_);
    }
    friend Residue operator*(Residue a, Residue b) {
        a.require_same(b);
        return Residue(mul_mod(a.value_, b.value_, a.p_.value()), a.p_);
    }
    Residue operator-() const { return Residue(neg_mod(value_, p_.value()), p_); }

private:
    void require_same(Residue other) const {
        if (!(p_ == other.p_)) throw ContextMismatch();
    }

    std::uint32_t value_;
    Prime p_;
};

/// All divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors_sorted(std::uint64_t n) {
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

/// a^-1 in Z_p. Throws ZeroInverse on a = 0.
inline Residue mod_inverse(Residue a) {
    if (a.value() == 0) throw ZeroInverse();
    std::uint32_t p = a.modulus().value();
    return Residue(pow_mod(a.value(), p - 2, p), a.modulus());
}

/// Multiplicative order of a in Z_p^*; walks divisors of p - 1 ascending.
inline std::uint32_t mul_order(Residue a) {
    if (a.value() == 0) throw ZeroOrder();
    std::uint32_t p = a.modulus().value();
    for (std::uint64_t d : divisors_sorted(p - 1))
        if (pow_mod(a.value(), d, p) == 1) return std::uint32_t(d);
    throw Error("order search exhausted the divisors of p - 1");
}

/**
 * The lexicographically smallest pair (s, t), s <= t, with s^2 + t^2 = a
 * in Z_p. Always exists: the two parabolas s^2 and a - t^2 each take
 * (p + 1) / 2 values, which cannot be disjoint.
 */
inline std::pair<Residue, Residue> sum_two_squares(Residue a) {
    std::uint32_t p = a.modulus().value();
    for (std::uint32_t s = 0; s < p; ++s) {
        std::uint32_t s2 = mul_mod(s, s, p);
        for (std::uint32_t t = s; t < p; ++t) {
            if (add_mod(s2, mul_mod(t, t, p), p) == a.value())
                return {Residue(s, a.modulus()), Residue(t, a.modulus())};
        }
    }
    throw Error("two-square decomposition not found");
}

}  // namespace cdzp
