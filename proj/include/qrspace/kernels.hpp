#pragma once

// Data-parallel inner loops. Every OpenMP kernel has a `_serial` twin that is
// kept as the reference implementation; tests assert they agree exactly and
// bench/ compares their throughput. All reductions are over exact integers,
// so results do not depend on the thread schedule.

#include <cstdint>
#include <span>
#include <vector>

#include "qrspace/arith.hpp"

namespace qrs::kernels {

void set_threads(int n);
int max_threads();

/// Indicator of a subset of Z/m, packed 64 residues per word.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::uint64_t size() const { return size_; }
    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    std::uint64_t count() const;
    std::span<const std::uint64_t> words() const { return words_; }

    Bitset operator&(const Bitset& other) const;

    /// this[x] becomes this[x] & other[(x + shift) mod m].
    void and_shifted(const Bitset& other, std::uint64_t shift);

  private:
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Squares mod m by the sieve {x^2 mod m}.
Bitset square_indicator(std::uint64_t m);

/// out[d] = #{x in Z/m : b[x] and a[(x + d) mod m]}, for every d in Z/m.
std::vector<std::uint64_t> cyclic_correlation(const Bitset& b, const Bitset& a);
std::vector<std::uint64_t> cyclic_correlation_serial(const Bitset& b, const Bitset& a);

/// Sorted list of x mod prod(moduli) with x mod moduli[i] in sets[i].
/// Moduli pairwise coprime, product below 2^63.
std::vector<std::uint64_t> crt_product(const std::vector<std::vector<std::uint64_t>>& sets,
                                       const std::vector<std::uint64_t>& moduli);
std::vector<std::uint64_t> crt_product_serial(const std::vector<std::vector<std::uint64_t>>& sets,
                                              const std::vector<std::uint64_t>& moduli);

/// Integer box [lo_i, hi_i] in Z^d (empty when any hi_i < lo_i).
struct IntBox {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;

    std::size_t dim() const { return lo.size(); }
    /// Number of integer points; 0 when empty. Throws CapExceeded above 2^62.
    std::uint64_t point_count() const;
    /// Point with row-major index `idx` (last coordinate fastest).
    void point_at(std::uint64_t idx, std::span<std::int64_t> out) const;
};

/// Visits every point of the box in parallel and sums `f(point)`.
/// `f` must be thread-safe and take std::span<const std::int64_t>.
template <class F>
u128 sum_over_box(const IntBox& box, F&& f);

template <class F>
u128 sum_over_box_serial(const IntBox& box, F&& f);

/// Number of r-tuples (x_1..x_r) of elements of the sorted set X with
/// (x_{i+1} - x_i) mod Q in the residues of [ranges_i.lo, ranges_i.hi].
/// Each range must span fewer than Q integers.
u128 count_difference_tuples(std::span<const std::uint64_t> sorted, std::uint64_t modulus, const IntBox& ranges);
u128 count_difference_tuples_serial(std::span<const std::uint64_t> sorted, std::uint64_t modulus,
                                    const IntBox& ranges);

struct Histogram {
    double bin_width = 0.0;
    std::vector<std::uint64_t> counts;
    std::uint64_t overflow = 0;  // samples > max
};

/// Bins [k*w, (k+1)*w) for k < bins-1; the last bin is closed at max.
Histogram histogram(std::span<const double> values, std::size_t bins, double max);
Histogram histogram_serial(std::span<const double> values, std::size_t bins, double max);

}  // namespace qrs::kernels

#include "qrspace/kernels_impl.hpp"
