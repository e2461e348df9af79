#pragma once

// Factored-integer arithmetic: factorization, CRT, squarefree divisors,
// and the multiplicative quantities sigma(q) and F(q, t).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrspace/arith.hpp"

namespace qrs {

/// Deterministic Miller-Rabin with the first 20 prime bases.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

struct PrimePower {
    BigInt p;
    unsigned alpha = 1;

    BigInt value() const;
    std::uint64_t small_p() const { return checked_u64(p, "prime"); }
    std::uint64_t small_value() const { return checked_u64(value(), "prime power"); }

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.p == b.p && a.alpha == b.alpha;
    }
};

class FactoredModulus {
  public:
    FactoredModulus() = default;  // Q = 1

    /// Validates primality, ordering, and exponents; throws InvalidArgument.
    static FactoredModulus from_factors(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const { return factors_; }
    const BigInt& value() const { return value_; }
    const BigInt& rad() const { return rad_; }
    unsigned omega() const { return static_cast<unsigned>(factors_.size()); }
    bool is_squarefree() const;

    /// rad(Q) as a factored modulus.
    FactoredModulus radical() const;
    std::uint64_t small_value() const { return checked_u64(value_, "modulus"); }

    /// Exponent of p in Q (0 when p does not divide Q).
    unsigned exponent_of(std::uint64_t p) const;

    /// Canonical text form, e.g. "2^3*3*5^2"; "1" for the empty product.
    std::string to_string() const;

    friend bool operator==(const FactoredModulus& a, const FactoredModulus& b) {
        return a.factors_ == b.factors_;
    }

  private:
    std::vector<PrimePower> factors_;
    BigInt value_ = 1;
    BigInt rad_ = 1;
};

/// Trial division to 10^6, then Pollard-Brent with a fixed retry schedule.
FactoredModulus factor(const BigInt& n);
inline FactoredModulus factor(std::uint64_t n) { return factor(to_big(n)); }

struct CrtPart {
    BigInt residue;
    PrimePower modulus;
};

/// Unique x in [0, prod p^alpha) with x = residue_i mod p_i^alpha_i.
BigInt crt_combine(std::span<const CrtPart> parts);

/// prod_{p|q} (1 + 1/p); q must be squarefree.
Rational sigma(const FactoredModulus& q);

/// sum_{p|q} p^{-t}.
double big_f(const FactoredModulus& q, double t);

struct Divisor {
    BigInt value;
    unsigned omega = 0;
    std::vector<std::uint64_t> primes;
};

struct DivisorFilter {
    std::optional<BigInt> max_value;
    std::optional<unsigned> max_omega;
    std::optional<unsigned> min_omega;
};

/// Squarefree divisors of q passing the filter, in increasing numeric order.
/// Throws CapExceeded when more than max_count divisors would be produced.
std::vector<Divisor> divisors(const FactoredModulus& q, const DivisorFilter& filter = {},
                              std::size_t max_count = std::size_t{1} << 24);

/// The squarefree divisor as a factored modulus (exponent 1 on every prime).
FactoredModulus as_modulus(const Divisor& d);

}  // namespace qrs
