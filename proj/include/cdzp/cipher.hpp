#pragma once

/**
 * @file cipher.hpp
 * @brief Block cipher on invertible algebra elements.
 *
 * Text is mapped to labels in [0, p) by an alphabet with exactly p symbols,
 * padded with label 0 to a whole number of 2^t-label blocks, and each block
 * v is replaced by w = q v for an invertible key element q; decryption
 * multiplies by q^-1 on the left. Keys are limited to t <= 3: one level
 * higher the algebra stops being alternative and q^-1(q v) = v fails.
 *
 * This is a classical classroom construction, not a secure cipher.
 */

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdzp/algebra.hpp"
#include "cdzp/errors.hpp"
#include "cdzp/modp.hpp"

namespace cdzp {

/// Ordered set of distinct symbols; position = label.
class Alphabet {
public:
    explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
        index_.fill(-1);
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(symbols_[i]);
            if (index_[c] != -1)
                throw InvalidParameter("alphabet symbols must be distinct");
            index_[c] = int(i);
        }
    }

    /// A..Z then '*' (blank), '.', ',': 29 symbols, one per residue mod 29.
    static Alphabet standard29() {
        return Alphabet("ABCDEFGHIJKLMNOPQRSTUVWXYZ*.,");
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(std::size_t label) const { return symbols_.at(label); }

    /// Text to labels. A plain space reads as the blank symbol '*' when the
    /// alphabet has one. Throws UnknownSymbol with the 0-based position.
    std::vector<std::uint32_t> encode(std::string_view text) const {
        std::vector<std::uint32_t> labels;
        labels.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            int idx = index_[static_cast<unsigned char>(c)];
            if (idx < 0 && c == ' ')
                idx = index_[static_cast<unsigned char>('*')];
            if (idx < 0) throw UnknownSymbol(c, i);
            labels.push_back(std::uint32_t(idx));
        }
        return labels;
    }

    /// Labels back to text; every label must be below size().
    std::string decode(std::span<const std::uint32_t> labels) const {
        std::string text;
        text.reserve(labels.size());
        for (std::uint32_t label : labels) text += symbol(label);
        return text;
    }

private:
    std::string symbols_;
    std::array<int, 256> index_;
};

/// Pads with label 0 until the length is a multiple of the block size.
inline std::vector<std::uint32_t> pad_labels(std::vector<std::uint32_t> labels,
                                             std::size_t block) {
    if (block == 0) throw InvalidParameter("block size must be positive");
    while (labels.size() % block != 0) labels.push_back(0);
    return labels;
}

/// An invertible key element in A_t, t <= 3.
class CipherKey {
public:
    explicit CipherKey(Element q) : q_(std::move(q)) {
        if (q_.algebra().level() > 3)
            throw UnsupportedLevel(q_.algebra().level());
        if (q_.norm().value() == 0) throw NotInvertible();
    }

    const Element& q() const noexcept { return q_; }
    const Algebra& algebra() const noexcept { return q_.algebra(); }
    std::size_t block() const noexcept { return q_.algebra().dim(); }

    /// "p,t:c0,c1,...,c_{2^t-1}"
    std::string serialize() const {
        return std::to_string(algebra().p()) + "," +
               std::to_string(algebra().level()) + ":" + to_coeff_string(q_);
    }

    static CipherKey parse(std::string_view text) {
        std::size_t colon = text.find(':');
        if (colon == std::string_view::npos)
            throw FormatError("key must look like p,t:c0,c1,...");
        std::string_view head = text.substr(0, colon);
        std::size_t comma = head.find(',');
        if (comma == std::string_view::npos)
            throw FormatError("key header must be p,t");
        auto parse_u32 = [](std::string_view tok) {
            std::uint32_t v = 0;
            auto [ptr, ec] =
                std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size() ||
                tok.empty())
                throw FormatError("bad number '" + std::string(tok) + "'");
            return v;
        };
        Prime p(parse_u32(head.substr(0, comma)));
        std::uint32_t t = parse_u32(head.substr(comma + 1));
        if (t > 3) throw UnsupportedLevel(t);
        Algebra alg(p, t);
        return CipherKey(parse_element(alg, text.substr(colon + 1)));
    }

private:
    Element q_;
};

namespace detail {

// Uniform draw from [0, n) that does not depend on library distribution
// internals, so a seed pins the key on every platform.
template <class URBG>
std::uint64_t uniform_below(URBG& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

}  // namespace detail

/// Deterministic key generation: uniform coefficients from a seeded
/// generator, rejecting zero-norm draws until an invertible element lands.
inline CipherKey keygen(const Algebra& alg, std::uint64_t seed) {
    if (alg.level() > 3) throw UnsupportedLevel(alg.level());
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<std::uint32_t> c(alg.dim());
        for (auto& v : c)
            v = std::uint32_t(detail::uniform_below(rng, alg.p()));
        Element q(alg, std::move(c));
        if (q.norm().value() != 0) return CipherKey(std::move(q));
    }
}

namespace detail {

inline void require_alphabet_matches(const CipherKey& key,
                                     const Alphabet& alphabet) {
    if (alphabet.size() != key.algebra().p())
        throw PreconditionViolated(
            "alphabet size " + std::to_string(alphabet.size()) +
            " must equal p = " + std::to_string(key.algebra().p()));
}

inline std::string apply_blockwise(std::string_view text, const CipherKey& key,
                                   const Alphabet& alphabet,
                                   const Element& factor, bool pad) {
    require_alphabet_matches(key, alphabet);
    const Algebra& alg = key.algebra();
    std::vector<std::uint32_t> labels = alphabet.encode(text);
    if (pad) {
        labels = pad_labels(std::move(labels), alg.dim());
    } else if (labels.size() % alg.dim() != 0) {
        throw BadLength(labels.size(), alg.dim());
    }
    std::vector<std::uint32_t> out;
    out.reserve(labels.size());
    for (std::size_t off = 0; off < labels.size(); off += alg.dim()) {
        Element v(alg, std::vector<std::uint32_t>(
                           labels.begin() + std::ptrdiff_t(off),
                           labels.begin() + std::ptrdiff_t(off + alg.dim())));
        Element w = factor * v;
        out.insert(out.end(), w.coeffs().begin(), w.coeffs().end());
    }
    return alphabet.decode(out);
}

}  // namespace detail

/// Pads, blocks, and maps each block v to q v.
inline std::string encrypt(std::string_view text, const CipherKey& key,
                           const Alphabet& alphabet = Alphabet::standard29()) {
    return detail::apply_blockwise(text, key, alphabet, key.q(), true);
}

/// Maps each block w back to q^-1 w. The length must already be whole
/// blocks; padding introduced by encrypt is kept in the output.
inline std::string decrypt(std::string_view text, const CipherKey& key,
                           const Alphabet& alphabet = Alphabet::standard29()) {
    return detail::apply_blockwise(text, key, alphabet, key.q().inverse(),
                                   false);
}

}  // namespace cdzp
