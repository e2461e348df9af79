#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qrs {

using BigInt = mpz_class;
using Rational = mpq_class;
using u128 = unsigned __int128;

// Error hierarchy. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (exit code 2).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// A configured enumeration/memory cap would be exceeded (exit code 3).
class CapExceeded : public Error {
  public:
    using Error::Error;
};

/// Converts to uint64, throwing CapExceeded when the value does not fit.
std::uint64_t checked_u64(const BigInt& v, const char* what);

BigInt to_big(u128 v);
BigInt to_big(std::uint64_t v);
u128 to_u128(const BigInt& v);

/// "num/den" with den omitted when it is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& v);
std::string to_string(u128 v);

/// Parses "3", "-1.25", "7/4" into an exact rational.
Rational parse_rational(const std::string& text);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace qrs
