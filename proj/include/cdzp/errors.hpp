#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by all cdzp modules.
 *
 * Every throwing precondition in the library raises a subclass of
 * cdzp::Error, so callers can catch the whole family with one handler.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdzp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Modulus failed the primality check.
struct NotPrime : Error {
    explicit NotPrime(std::uint64_t n)
        : Error("not an odd prime: " + std::to_string(n)) {}
};

/// p = 2 is rejected everywhere: the constructions need 2 invertible.
struct OddPrimeRequired : Error {
    OddPrimeRequired() : Error("p = 2 is not supported; use an odd prime") {}
};

/// Inverse of 0 requested.
struct ZeroInverse : Error {
    ZeroInverse() : Error("0 has no multiplicative inverse") {}
};

/// Multiplicative order of 0 requested.
struct ZeroOrder : Error {
    ZeroOrder() : Error("0 has no multiplicative order") {}
};

/// Operands live in different algebras (p or doubling parameters differ).
struct ContextMismatch : Error {
    ContextMismatch() : Error("operands belong to different algebras") {}
};

/// Element has zero norm, hence no inverse.
struct NotInvertible : Error {
    NotInvertible() : Error("element has zero norm and is not invertible") {}
};

/// A stated precondition of an operation does not hold.
struct PreconditionViolated : Error {
    using Error::Error;
};

/// Invalid constructor argument (zero doubling parameter, oversized level...).
struct InvalidParameter : Error {
    using Error::Error;
};

/// Fibonacci quaternion index outside [0, pisano period).
struct IndexOutOfPeriod : Error {
    IndexOutOfPeriod(std::size_t n, std::uint32_t period)
        : Error("index " + std::to_string(n) + " outside the period " +
                std::to_string(period)) {}
};

/// A sum or product left the carrier set; indices name the witnesses.
struct NotClosed : Error {
    NotClosed(char op, std::size_t lhs, std::size_t rhs)
        : Error(std::string("carrier not closed under '") + op + "' at (" +
                std::to_string(lhs) + ", " + std::to_string(rhs) + ")"),
          operation(op), lhs_index(lhs), rhs_index(rhs) {}
    char operation;
    std::size_t lhs_index;
    std::size_t rhs_index;
};

/// Character without a label in the alphabet; position is 0-based.
struct UnknownSymbol : Error {
    UnknownSymbol(char c, std::size_t pos)
        : Error(std::string("symbol '") + c + "' at position " +
                std::to_string(pos) + " is not in the alphabet"),
          symbol(c), position(pos) {}
    char symbol;
    std::size_t position;
};

/// Ciphertext length is not a multiple of the block size.
struct BadLength : Error {
    BadLength(std::size_t length, std::size_t block)
        : Error("length " + std::to_string(length) +
                " is not a multiple of the block size " +
                std::to_string(block)) {}
};

/// Cipher keys are limited to levels whose algebras keep q^-1(qv) = v.
struct UnsupportedLevel : Error {
    explicit UnsupportedLevel(std::uint32_t t)
        : Error("level t = " + std::to_string(t) +
                " is not supported here (t <= 3 required)") {}
};

/// Requested enumeration or table exceeds the configured cap.
struct TooLarge : Error {
    using Error::Error;
};

/// Malformed textual input (element coefficients, serialized keys...).
struct FormatError : Error {
    using Error::Error;
};

}  // namespace cdzp
