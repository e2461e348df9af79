#pragma once

// Squares modulo prime powers and modulo Q.

#include <cstdint>
#include <vector>

#include "qrspace/modulus.hpp"

namespace qrs {

/// Default cap on |X_Q| for explicit enumeration.
inline constexpr std::uint64_t kDefaultResidueCap = std::uint64_t{1} << 26;

class ResidueSet {
  public:
    ResidueSet(FactoredModulus modulus, std::vector<std::uint64_t> elements)
        : modulus_(std::move(modulus)), elements_(std::move(elements)) {}

    const FactoredModulus& modulus() const { return modulus_; }
    const std::vector<std::uint64_t>& elements() const { return elements_; }
    std::uint64_t count() const { return elements_.size(); }
    bool contains(std::uint64_t x) const;

  private:
    FactoredModulus modulus_;
    std::vector<std::uint64_t> elements_;
};

/// Valuation rule: x = u p^v is a square iff x = 0, or v even and u a square unit.
bool is_square_mod_pk(std::uint64_t x, const PrimePower& pk);

/// N_{p^k} via the even-valuation recursion.
BigInt count_squares_pk(const PrimePower& pk);

/// N_Q = prod N_{p^alpha}.
BigInt count_squares(const FactoredModulus& q);

/// Sorted squares mod p^alpha, by the valuation rule.
std::vector<std::uint64_t> squares_mod_pk(const PrimePower& pk);

/// X_Q as the CRT product of the per-prime-power square sets.
ResidueSet enumerate_squares(const FactoredModulus& q, std::uint64_t cap = kDefaultResidueCap);

/// X_Q by the direct sieve {x^2 mod Q}; reference path for Q <= 10^7.
ResidueSet enumerate_squares_sieve(const FactoredModulus& q);

/// s = Q / N_Q.
Rational mean_spacing(const FactoredModulus& q);

/// 2 N_{p^k} / (p^k sigma(p)): ratio of the count to its leading term.
Rational leading_term_ratio(const PrimePower& pk);

}  // namespace qrs
