// Shared helpers for the test binaries: deterministic RNG and random
// element sampling, plus a brute-force multiplicative order.
#pragma once

#include <cstdint>
#include <random>

#include "cdzp/cdzp.hpp"

namespace testsupport {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline cdzp::Element random_element(const cdzp::Algebra& alg,
                                    std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, alg.p() - 1);
    std::vector<std::uint32_t> c(alg.dim());
    for (auto& v : c) v = dist(rng);
    return cdzp::Element(alg, c);
}

inline std::uint64_t brute_order(std::uint32_t a, std::uint32_t p) {
    std::uint64_t acc = a % p;
    for (std::uint64_t d = 1;; ++d) {
        if (acc == 1) return d;
        acc = acc * a % p;
    }
}

}  // namespace testsupport
