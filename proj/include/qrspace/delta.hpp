#pragma once

// Degeneracy factors Delta(h, p), residuals epsilon(h, p^k), the set-partition
// subspaces mod p with their Mobius coefficients, and composite lattices.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qrspace/correlations.hpp"
#include "qrspace/modulus.hpp"

namespace qrs {

/// A set partition of {0..r-1} as a restricted growth string: block[i] is the
/// block index of element i, first occurrences numbered 0, 1, 2, ...
class SetPartition {
  public:
    SetPartition() = default;
    explicit SetPartition(std::vector<std::uint8_t> blocks);  // validates RGS form

    static SetPartition singletons(int r);
    static SetPartition merged(int r);

    int size() const { return static_cast<int>(blocks_.size()); }
    int block_count() const { return block_count_; }
    int codim() const { return size() - block_count_; }
    const std::vector<std::uint8_t>& blocks() const { return blocks_; }
    bool is_singletons() const { return block_count_ == size(); }

    /// Every block of *this lies inside a block of other.
    bool refines(const SetPartition& other) const;

    /// h lies in the subspace: t_i = t_j mod p whenever i, j share a block.
    bool contains(std::span<const std::int64_t> h, std::uint64_t p) const;

    /// Blocks as "{0,2}{1}" for reports.
    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

  private:
    std::vector<std::uint8_t> blocks_;
    int block_count_ = 0;
};

/// All set partitions of {0..r-1}, finest first; ties in lexicographic RGS order.
std::vector<SetPartition> all_partitions(int r);

/// 2^{r - #distinct t_i mod p}.
std::uint64_t delta_prime(std::span<const std::int64_t> h, std::uint64_t p);
inline std::uint64_t delta_prime(const OffsetVector& h, std::uint64_t p) { return delta_prime(h.h, p); }

/// N(h,p^k) 2^r / (Delta(h,p) p^k) - 1, exactly.
Rational epsilon(const OffsetVector& h, const PrimePower& pk);
Rational epsilon_from_count(std::uint64_t count, std::uint64_t delta, int r, std::uint64_t pk);

/// prod_{p|c} Delta(h,p) for squarefree c.
BigInt delta_composite(const OffsetVector& h, const FactoredModulus& c);
/// prod_{p^a || C} epsilon(h, p^a).
Rational epsilon_composite(const OffsetVector& h, const FactoredModulus& c_tilde);

struct DecompositionEntry {
    SetPartition partition;
    std::int64_t lambda = 0;
};

struct DeltaDecomposition {
    int r = 2;
    std::vector<DecompositionEntry> entries;

    std::int64_t lambda_of(const SetPartition& p) const;
    /// sum_pi lambda(pi) [h in L_pi] mod p.
    std::int64_t evaluate(std::span<const std::int64_t> h, std::uint64_t p) const;
};

inline constexpr int kMaxPartitionR = 8;

/// lambda(M) = 2^{codim M} - sum over strictly finer partitions of lambda.
DeltaDecomposition mobius_coefficients(int r);

/// A lattice L = intersection over p | supp of L_p, each L_p a non-trivial partition subspace.
struct CompositeLattice {
    struct Component {
        std::uint64_t p;
        SetPartition partition;
        std::int64_t lambda;
    };
    int r = 2;
    std::vector<Component> components;  // increasing p
    std::uint64_t supp = 1;
    BigInt disc = 1;
    std::int64_t lambda = 1;

    bool contains(std::span<const std::int64_t> h) const;
};

struct LatticeFilter {
    std::optional<std::uint64_t> max_supp;
    std::optional<BigInt> max_disc;
    /// Restrict supp to exactly this value.
    std::optional<std::uint64_t> exact_supp;
};

/// Composite lattices with squarefree supp | q and lambda != 0, ordered by supp,
/// then by the per-prime partition order of mobius_coefficients.
std::vector<CompositeLattice> enumerate_composite_lattices(const FactoredModulus& q, int r,
                                                           const LatticeFilter& filter = {},
                                                           const DeltaDecomposition* table = nullptr);

CompositeLattice trivial_lattice(int r);

struct LatticeCount {
    std::uint64_t count = 0;
    Rational prediction;  // vol(sC) / disc(L)
    Rational residual;    // count - prediction
};

/// Integer points of s * box inside L, with the volume prediction.
LatticeCount count_lattice_points(const CompositeLattice& lattice, const RationalBox& box, const Rational& s);

struct DeltaSum {
    BigInt direct;       // sum over h in sC of Delta(h,q)
    BigInt via_lattices; // sum_L lambda(L) #(sC intersect L)
    double ratio_to_volume_scale = 0.0;  // direct / s^{r-1}
};

DeltaSum delta_sum_over_region(const FactoredModulus& q, const Rational& s, const BoxRegion& c);

struct HenselDefect {
    Rational value;  // max_h |N(h,p^b) - p^{b-a} N(h,p^a)| / p^{b-a}
    std::vector<std::int64_t> argmax;
};

HenselDefect hensel_defect(std::uint64_t p, unsigned a, unsigned b, int r,
                           std::uint64_t cap = std::uint64_t{1} << 24);

struct EmptyIntersectionEntry {
    CompositeLattice lattice;
    std::uint64_t count = 0;
};

struct EmptyIntersectionReport {
    double threshold = 0.0;  // s^{r(r-1)/2}
    std::vector<EmptyIntersectionEntry> entries;
    std::optional<std::uint64_t> smallest_nonempty_supp;
    std::optional<std::uint64_t> largest_nonempty_supp;
    /// Lattices with supp above the threshold that still meet sC.
    std::vector<std::uint64_t> above_threshold_nonempty;
};

EmptyIntersectionReport empty_intersection_check(const FactoredModulus& q, const Rational& s, const BoxRegion& c);

}  // namespace qrs
