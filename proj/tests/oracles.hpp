#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond plain integer types, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "qrspace/arith.hpp"

namespace oracle {

// Reduced n/d; mpq_class(n, d) does not reduce by itself.
inline qrs::Rational frac(long n, long d) {
    qrs::Rational r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::map<std::uint64_t, unsigned> factor(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) {
        ++out[n];
    }
    return out;
}

inline std::vector<std::uint64_t> squares(std::uint64_t n) {
    std::set<std::uint64_t> s;
    for (std::uint64_t x = 0; x < n; ++x) {
        s.insert(x * x % n);
    }
    return {s.begin(), s.end()};
}

inline std::vector<bool> square_mask(std::uint64_t n) {
    std::vector<bool> m(n, false);
    for (auto v : squares(n)) {
        m[v] = true;
    }
    return m;
}

/// #{x mod n : x + t_i is a square for every partial sum t_i of h}.
inline std::uint64_t solutions(const std::vector<std::int64_t>& h, std::uint64_t n) {
    const auto mask = square_mask(n);
    const auto nn = static_cast<std::int64_t>(n);
    std::uint64_t count = 0;
    for (std::int64_t x = 0; x < nn; ++x) {
        std::int64_t y = x;
        bool ok = mask[static_cast<std::size_t>(y)];
        for (std::size_t i = 0; i < h.size() && ok; ++i) {
            y = ((y + h[i]) % nn + nn) % nn;
            ok = mask[static_cast<std::size_t>(y)];
        }
        count += ok ? 1 : 0;
    }
    return count;
}

/// 2^{r - #distinct partial sums mod p}.
inline std::uint64_t delta(const std::vector<std::int64_t>& h, std::uint64_t p) {
    const auto pp = static_cast<std::int64_t>(p);
    std::set<std::int64_t> t{0};
    std::int64_t acc = 0;
    for (auto v : h) {
        acc = ((acc + v) % pp + pp) % pp;
        t.insert(acc);
    }
    return std::uint64_t{1} << (h.size() + 1 - t.size());
}

/// Set partitions of {0..r-1} as block-label vectors (restricted growth).
inline std::vector<std::vector<int>> partitions(int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == r) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            cur[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline int block_count(const std::vector<int>& p) { return *std::max_element(p.begin(), p.end()) + 1; }

inline bool finer_or_equal(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[i] == a[j] && b[i] != b[j]) {
                return false;
            }
        }
    }
    return true;
}

/// lambda(sigma) = sum over pi finer than sigma of mu(pi, sigma) 2^{codim pi}, with the
/// closed-form Mobius function of the partition lattice.
inline std::int64_t lambda(const std::vector<int>& sigma) {
    const int r = static_cast<int>(sigma.size());
    std::int64_t total = 0;
    for (const auto& pi : partitions(r)) {
        if (!finer_or_equal(pi, sigma)) {
            continue;
        }
        std::int64_t mu = 1;
        for (int b = 0; b < block_count(sigma); ++b) {
            std::set<int> merged;
            for (int i = 0; i < r; ++i) {
                if (sigma[static_cast<std::size_t>(i)] == b) {
                    merged.insert(pi[static_cast<std::size_t>(i)]);
                }
            }
            const auto k = static_cast<std::int64_t>(merged.size());
            std::int64_t f = 1;
            for (std::int64_t j = 2; j < k; ++j) {
                f *= j;
            }
            mu *= ((k - 1) % 2 ? -1 : 1) * f;
        }
        total += mu * (std::int64_t{1} << (r - block_count(pi)));
    }
    return total;
}

/// Ordered r-tuples of squares mod n whose consecutive centered differences lie in the ranges.
inline std::uint64_t tuples(std::uint64_t n, const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
    const auto x = squares(n);
    const auto nn = static_cast<std::int64_t>(n);
    auto centered = [nn](std::int64_t d) {
        d = ((d % nn) + nn) % nn;
        return 2 * d > nn ? d - nn : d;
    };
    std::uint64_t count = 0;
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == lo.size()) {
            ++count;
            return;
        }
        for (auto y : x) {
            const auto d = centered(static_cast<std::int64_t>(y) - static_cast<std::int64_t>(cur.back()));
            if (d >= lo[level] && d <= hi[level]) {
                cur.push_back(y);
                self(self, level + 1);
                cur.pop_back();
            }
        }
    };
    for (auto x1 : x) {
        cur = {x1};
        rec(rec, 0);
    }
    return count;
}

/// Circular gaps between consecutive sorted elements, wrap-around included.
inline std::vector<std::uint64_t> circular_gaps(const std::vector<std::uint64_t>& x, std::uint64_t n) {
    std::vector<std::uint64_t> g;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        g.push_back(x[i + 1] - x[i]);
    }
    g.push_back(x.front() + n - x.back());
    return g;
}

}  // namespace oracle
