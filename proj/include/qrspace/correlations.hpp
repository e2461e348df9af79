#pragma once

// N(h, p^k), N(h, Q) and the r-level correlation R_r(C, Q).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrspace/kernels.hpp"
#include "qrspace/modulus.hpp"
#include "qrspace/residues.hpp"

namespace qrs {

/// h = (h_1..h_{r-1}) with partial sums t_0 = 0, t_i = h_1 + ... + h_i.
struct OffsetVector {
    std::vector<std::int64_t> h;

    OffsetVector() = default;
    explicit OffsetVector(std::vector<std::int64_t> values) : h(std::move(values)) {}

    int r() const { return static_cast<int>(h.size()) + 1; }
    std::vector<std::int64_t> partial_sums() const;
    /// Partial sums reduced into [0, m).
    std::vector<std::uint64_t> partial_sums_mod(std::uint64_t m) const;
};

std::vector<std::uint64_t> partial_sums_mod(std::span<const std::int64_t> h, std::uint64_t m);

struct Interval {
    Rational lo;
    Rational hi;
};

/// Axis-aligned box with rational endpoints (no wall condition).
struct RationalBox {
    std::vector<Interval> intervals;

    std::size_t dim() const { return intervals.size(); }
    Rational volume() const;
    /// Integer points of s * box: h_i in [ceil(s a_i), floor(s b_i)].
    kernels::IntBox scaled_integer_points(const Rational& s) const;
};

/// Wall functional sum_{j=i}^{k} h_j (1-based indices) that vanishes somewhere on the box.
struct WallHit {
    std::size_t i = 0;
    std::size_t k = 0;
};

/// First wall functional that is not of constant nonzero sign over the closed box.
std::optional<WallHit> find_wall(const RationalBox& box);
bool wall_check(const RationalBox& box);

/// A wall-avoiding box in R^{r-1}.
class BoxRegion {
  public:
    /// Throws InvalidArgument naming the offending functional.
    static BoxRegion make(RationalBox box);

    const RationalBox& box() const { return box_; }
    int r() const { return static_cast<int>(box_.dim()) + 1; }
    Rational volume() const { return box_.volume(); }

  private:
    explicit BoxRegion(RationalBox box) : box_(std::move(box)) {}
    RationalBox box_;
};

/// #{x in Z/p^alpha : x + t_i is a square mod p^alpha for all i}.
std::uint64_t count_solutions_brute(const OffsetVector& h, const PrimePower& pk);
std::uint64_t count_solutions_brute(std::span<const std::int64_t> h, std::uint64_t m,
                                    const kernels::Bitset& squares);

/// N(h, Q) = prod_{p|Q} N(h mod p^alpha, p^alpha).
BigInt big_n(const OffsetVector& h, const FactoredModulus& q);

/// N(h, Q) with per-prime-power tables built once for a fixed r.
class SolutionCounter {
  public:
    static constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 22;

    SolutionCounter(const FactoredModulus& q, int r, std::uint64_t table_cap = kDefaultTableCap);

    int r() const { return r_; }
    u128 count(std::span<const std::int64_t> h) const;
    std::uint64_t count_factor(std::size_t factor, std::span<const std::int64_t> h) const;
    std::size_t factor_count() const { return factors_.size(); }

  private:
    struct FactorTable {
        std::uint64_t m = 1;
        kernels::Bitset squares;
        bool full = false;
        std::vector<std::uint32_t> table;  // row-major over (Z/m)^{r-1}
    };

    int r_;
    std::vector<FactorTable> factors_;
};

/// Full table N(h, m) over (Z/m)^{dims} for a prime power m, built fiber by fiber.
std::vector<std::uint32_t> solution_table(std::uint64_t m, const kernels::Bitset& squares, int dims);

enum class CorrelationMethod { sum, direct, both };

struct CorrelationOptions {
    std::uint64_t residue_cap = kDefaultResidueCap;
    std::uint64_t h_cap = std::uint64_t{1} << 28;
    bool per_h = false;
};

struct PerHEntry {
    std::vector<std::int64_t> h;
    BigInt count;
};

struct CorrelationResult {
    int r = 2;
    Rational s;
    Rational volume;
    std::uint64_t num_h = 0;
    BigInt n_q;
    std::optional<BigInt> sum_total;     // sum of N(h,Q) over sC
    std::optional<BigInt> direct_total;  // tuple count in X_Q^r
    Rational value;                      // R_r from the primary method
    bool methods_agree = true;
    std::vector<PerHEntry> per_h;
};

/// True when s*C lies inside the centered domain (-Q/2, Q/2]^{r-1}.
bool fits_centered_domain(const RationalBox& box, const Rational& s, const BigInt& q);

CorrelationResult r_correlation(const BoxRegion& c, const FactoredModulus& q,
                                CorrelationMethod method = CorrelationMethod::sum,
                                const CorrelationOptions& options = {});

}  // namespace qrs
