#include "qrspace/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace qrs::kernels {
namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    // Extended Euclid in signed 128-bit.
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) {
        throw InvalidArgument("CRT moduli not coprime");
    }
    if (t < 0) {
        t += m;
    }
    return static_cast<std::uint64_t>(t);
}

std::uint64_t checked_product(const std::vector<std::uint64_t>& moduli) {
    u128 q = 1;
    for (auto m : moduli) {
        q *= m;
        if (q >= (u128{1} << 63)) {
            throw CapExceeded("CRT product modulus exceeds 2^63");
        }
    }
    return static_cast<std::uint64_t>(q);
}

// 64 bits of `bits` starting at bit position pos (bits beyond the end read 0).
inline std::uint64_t extract64(std::span<const std::uint64_t> bits, std::uint64_t pos) {
    std::uint64_t w = pos >> 6;
    unsigned off = static_cast<unsigned>(pos & 63);
    std::uint64_t lo = w < bits.size() ? bits[w] : 0;
    if (off == 0) {
        return lo;
    }
    std::uint64_t hi = w + 1 < bits.size() ? bits[w + 1] : 0;
    return (lo >> off) | (hi << (64 - off));
}

// a followed by a copy of itself: bit i of the result is a[i mod m], i < 2m.
std::vector<std::uint64_t> doubled(const Bitset& a) {
    const std::uint64_t m = a.size();
    std::vector<std::uint64_t> out((2 * m + 63) / 64 + 1, 0);
    auto words = a.words();
    for (std::uint64_t w = 0; w < words.size(); ++w) {
        out[w] = words[w];
    }
    for (std::uint64_t w = 0; w < words.size(); ++w) {
        std::uint64_t v = words[w];
        std::uint64_t pos = m + 64 * w;
        unsigned off = static_cast<unsigned>(pos & 63);
        out[pos >> 6] |= v << off;
        if (off != 0) {
            out[(pos >> 6) + 1] |= v >> (64 - off);
        }
    }
    // Clear anything beyond 2m (the last word of a is zero-padded, so nothing leaks).
    return out;
}

std::uint64_t count_range(std::span<const std::uint64_t> sorted, std::uint64_t lo, std::uint64_t hi) {
    auto a = std::lower_bound(sorted.begin(), sorted.end(), lo);
    auto b = std::upper_bound(a, sorted.end(), hi);
    return static_cast<std::uint64_t>(b - a);
}

// Count of elements in the arc of `len` residues starting at `start`.
std::uint64_t count_arc(std::span<const std::uint64_t> sorted, std::uint64_t q, std::uint64_t start,
                        std::uint64_t len) {
    if (len == 0) {
        return 0;
    }
    if (start + len <= q) {
        return count_range(sorted, start, start + len - 1);
    }
    return count_range(sorted, start, q - 1) + count_range(sorted, 0, start + len - 1 - q);
}

template <class Visit>
void for_each_in_arc(std::span<const std::uint64_t> sorted, std::uint64_t q, std::uint64_t start,
                     std::uint64_t len, Visit&& visit) {
    if (len == 0) {
        return;
    }
    auto walk = [&](std::uint64_t lo, std::uint64_t hi) {
        for (auto it = std::lower_bound(sorted.begin(), sorted.end(), lo); it != sorted.end() && *it <= hi; ++it) {
            visit(*it);
        }
    };
    if (start + len <= q) {
        walk(start, start + len - 1);
    } else {
        walk(start, q - 1);
        walk(0, start + len - 1 - q);
    }
}

std::uint64_t arc_start(std::uint64_t x, std::int64_t offset, std::uint64_t q) {
    __int128 v = (static_cast<__int128>(x) + offset) % static_cast<__int128>(q);
    if (v < 0) {
        v += q;
    }
    return static_cast<std::uint64_t>(v);
}

u128 tuples_from(std::span<const std::uint64_t> sorted, std::uint64_t q, const IntBox& ranges, std::size_t level,
                 std::uint64_t x) {
    const std::uint64_t start = arc_start(x, ranges.lo[level], q);
    const std::uint64_t len = static_cast<std::uint64_t>(ranges.hi[level] - ranges.lo[level] + 1);
    if (level + 1 == ranges.dim()) {
        return count_arc(sorted, q, start, len);
    }
    u128 total = 0;
    for_each_in_arc(sorted, q, start, len,
                    [&](std::uint64_t next) { total += tuples_from(sorted, q, ranges, level + 1, next); });
    return total;
}

void validate_ranges(const IntBox& ranges, std::uint64_t q) {
    for (std::size_t i = 0; i < ranges.dim(); ++i) {
        if (ranges.hi[i] >= ranges.lo[i] &&
            static_cast<u128>(ranges.hi[i] - ranges.lo[i] + 1) > static_cast<u128>(q)) {
            throw InvalidArgument("difference range spans a full period");
        }
    }
}

}  // namespace

void set_threads(int n) {
    if (n > 0) {
        omp_set_num_threads(n);
    }
}

int max_threads() { return omp_get_max_threads(); }

std::uint64_t Bitset::count() const {
    std::uint64_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::uint64_t>(std::popcount(w));
    }
    return c;
}

Bitset Bitset::operator&(const Bitset& other) const {
    Bitset out(size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        out.words_[w] = words_[w] & other.words_[w];
    }
    return out;
}

void Bitset::and_shifted(const Bitset& other, std::uint64_t shift) {
    shift %= size_;
    auto twice = doubled(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= extract64(twice, shift + 64 * w);
    }
    if (size_ & 63) {
        words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }
}

Bitset square_indicator(std::uint64_t m) {
    Bitset b(m);
    if (m == 0) {
        return b;
    }
    // x and m - x have equal squares.
    for (std::uint64_t x = 0; x <= m / 2; ++x) {
        b.set(mulmod(x, x, m));
    }
    return b;
}

std::vector<std::uint64_t> cyclic_correlation(const Bitset& b, const Bitset& a) {
    const std::uint64_t m = a.size();
    std::vector<std::uint64_t> out(m, 0);
    if (m == 0) {
        return out;
    }
    const auto twice = doubled(a);
    const auto bw = b.words();
    const std::int64_t n = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t d = 0; d < n; ++d) {
        std::uint64_t c = 0;
        for (std::uint64_t w = 0; w < bw.size(); ++w) {
            if (bw[w] != 0) {
                c += static_cast<std::uint64_t>(
                    std::popcount(bw[w] & extract64(twice, static_cast<std::uint64_t>(d) + 64 * w)));
            }
        }
        out[static_cast<std::uint64_t>(d)] = c;
    }
    return out;
}

std::vector<std::uint64_t> cyclic_correlation_serial(const Bitset& b, const Bitset& a) {
    const std::uint64_t m = a.size();
    std::vector<std::uint64_t> out(m, 0);
    for (std::uint64_t d = 0; d < m; ++d) {
        for (std::uint64_t x = 0; x < m; ++x) {
            if (b.test(x) && a.test((x + d) % m)) {
                ++out[d];
            }
        }
    }
    return out;
}

std::vector<std::uint64_t> crt_product(const std::vector<std::vector<std::uint64_t>>& sets,
                                       const std::vector<std::uint64_t>& moduli) {
    const std::uint64_t q = checked_product(moduli);
    std::vector<std::uint64_t> idempotent(moduli.size());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        std::uint64_t rest = q / moduli[i];
        idempotent[i] = mulmod(rest, inverse_mod(rest % moduli[i], moduli[i]), q);
        total *= sets[i].size();
        if (total > (std::uint64_t{1} << 40)) {
            throw CapExceeded("CRT product too large");
        }
    }
    // Per-factor contributions r * e_i mod q, precomputed.
    std::vector<std::vector<std::uint64_t>> contrib(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (auto r : sets[i]) {
            contrib[i].push_back(mulmod(r, idempotent[i], q));
        }
    }
    std::vector<std::uint64_t> out(total);
    const std::int64_t n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
        std::uint64_t rem = static_cast<std::uint64_t>(idx);
        std::uint64_t x = 0;
        for (std::size_t i = contrib.size(); i-- > 0;) {
            const auto& c = contrib[i];
            x += c[rem % c.size()];
            if (x >= q) {
                x -= q;
            }
            rem /= c.size();
        }
        out[static_cast<std::uint64_t>(idx)] = x;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> crt_product_serial(const std::vector<std::vector<std::uint64_t>>& sets,
                                              const std::vector<std::uint64_t>& moduli) {
    checked_product(moduli);
    // Incremental two-modulus combination.
    std::vector<std::uint64_t> acc{0};
    std::uint64_t mod = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const std::uint64_t m = moduli[i];
        const std::uint64_t inv = mod == 1 ? 0 : inverse_mod(mod % m, m);
        std::vector<std::uint64_t> next;
        next.reserve(acc.size() * sets[i].size());
        for (auto x : acc) {
            for (auto r : sets[i]) {
                std::uint64_t diff = (r + m - x % m) % m;
                std::uint64_t k = mod == 1 ? r : mulmod(diff, inv, m);
                next.push_back(x + mod * k);
            }
        }
        acc = std::move(next);
        mod *= m;
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

std::uint64_t IntBox::point_count() const {
    u128 total = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (hi[i] < lo[i]) {
            return 0;
        }
        total *= static_cast<u128>(hi[i] - lo[i] + 1);
        if (total > (u128{1} << 62)) {
            throw CapExceeded("box has too many integer points");
        }
    }
    return static_cast<std::uint64_t>(total);
}

void IntBox::point_at(std::uint64_t idx, std::span<std::int64_t> out) const {
    for (std::size_t i = dim(); i-- > 0;) {
        const auto width = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
        out[i] = lo[i] + static_cast<std::int64_t>(idx % width);
        idx /= width;
    }
}

u128 count_difference_tuples(std::span<const std::uint64_t> sorted, std::uint64_t modulus, const IntBox& ranges) {
    validate_ranges(ranges, modulus);
    if (ranges.point_count() == 0 || sorted.empty()) {
        return 0;
    }
    const std::int64_t n = static_cast<std::int64_t>(sorted.size());
    u128 total = 0;
#pragma omp parallel
    {
        u128 local = 0;
#pragma omp for schedule(dynamic, 1024)
        for (std::int64_t i = 0; i < n; ++i) {
            local += tuples_from(sorted, modulus, ranges, 0, sorted[static_cast<std::size_t>(i)]);
        }
#pragma omp critical(qrs_tuples)
        total += local;
    }
    return total;
}

u128 count_difference_tuples_serial(std::span<const std::uint64_t> sorted, std::uint64_t modulus,
                                    const IntBox& ranges) {
    validate_ranges(ranges, modulus);
    if (ranges.point_count() == 0) {
        return 0;
    }
    u128 total = 0;
    for (auto x : sorted) {
        total += tuples_from(sorted, modulus, ranges, 0, x);
    }
    return total;
}

namespace {
std::size_t bin_of(double v, double width, std::size_t bins) {
    auto k = static_cast<std::size_t>(v / width);
    return std::min(k, bins - 1);
}
}  // namespace

Histogram histogram(std::span<const double> values, std::size_t bins, double max) {
    if (bins == 0 || !(max > 0)) {
        throw InvalidArgument("histogram needs bins > 0 and max > 0");
    }
    Histogram h{max / static_cast<double>(bins), std::vector<std::uint64_t>(bins, 0), 0};
    const std::int64_t n = static_cast<std::int64_t>(values.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(bins, 0);
        std::uint64_t over = 0;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            double v = values[static_cast<std::size_t>(i)];
            if (v > max) {
                ++over;
            } else {
                ++local[bin_of(v, h.bin_width, bins)];
            }
        }
#pragma omp critical(qrs_histogram)
        {
            for (std::size_t k = 0; k < bins; ++k) {
                h.counts[k] += local[k];
            }
            h.overflow += over;
        }
    }
    return h;
}

Histogram histogram_serial(std::span<const double> values, std::size_t bins, double max) {
    if (bins == 0 || !(max > 0)) {
        throw InvalidArgument("histogram needs bins > 0 and max > 0");
    }
    Histogram h{max / static_cast<double>(bins), std::vector<std::uint64_t>(bins, 0), 0};
    for (double v : values) {
        if (v > max) {
            ++h.overflow;
        } else {
            ++h.counts[bin_of(v, h.bin_width, bins)];
        }
    }
    return h;
}

}  // namespace qrs::kernels
