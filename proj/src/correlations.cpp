#include "qrspace/correlations.hpp"

#include <algorithm>

namespace qrs {

std::vector<std::int64_t> OffsetVector::partial_sums() const {
    std::vector<std::int64_t> t{0};
    for (auto v : h) {
        t.push_back(t.back() + v);
    }
    return t;
}

std::vector<std::uint64_t> partial_sums_mod(std::span<const std::int64_t> h, std::uint64_t m) {
    std::vector<std::uint64_t> t{0};
    const auto mm = static_cast<std::int64_t>(m);
    for (auto v : h) {
        std::int64_t r = v % mm;
        if (r < 0) {
            r += mm;
        }
        std::uint64_t next = t.back() + static_cast<std::uint64_t>(r);
        if (next >= m) {
            next -= m;
        }
        t.push_back(next);
    }
    return t;
}

std::vector<std::uint64_t> OffsetVector::partial_sums_mod(std::uint64_t m) const {
    return qrs::partial_sums_mod(h, m);
}

Rational RationalBox::volume() const {
    Rational v = 1;
    for (const auto& iv : intervals) {
        v *= (iv.hi > iv.lo) ? Rational(iv.hi - iv.lo) : Rational(0);
    }
    v.canonicalize();
    return v;
}

kernels::IntBox RationalBox::scaled_integer_points(const Rational& s) const {
    kernels::IntBox out;
    for (const auto& iv : intervals) {
        Rational lo = s * iv.lo;
        Rational hi = s * iv.hi;
        BigInt a = ceil_of(lo);
        BigInt b = floor_of(hi);
        if (!a.fits_slong_p() || !b.fits_slong_p()) {
            throw CapExceeded("scaled box endpoints exceed 64-bit range");
        }
        out.lo.push_back(a.get_si());
        out.hi.push_back(b.get_si());
    }
    return out;
}

std::optional<WallHit> find_wall(const RationalBox& box) {
    const std::size_t d = box.dim();
    for (std::size_t i = 0; i < d; ++i) {
        Rational lo = 0;
        Rational hi = 0;
        for (std::size_t k = i; k < d; ++k) {
            lo += box.intervals[k].lo;
            hi += box.intervals[k].hi;
            // The functional ranges over [lo, hi] on the box.
            if (!(lo > 0 || hi < 0)) {
                return WallHit{i + 1, k + 1};
            }
        }
    }
    return std::nullopt;
}

bool wall_check(const RationalBox& box) { return !find_wall(box).has_value(); }

BoxRegion BoxRegion::make(RationalBox box) {
    if (box.dim() == 0) {
        throw InvalidArgument("box must have at least one interval (r >= 2)");
    }
    for (const auto& iv : box.intervals) {
        if (iv.hi < iv.lo) {
            throw InvalidArgument("interval with hi < lo");
        }
    }
    if (auto hit = find_wall(box)) {
        std::string f = hit->i == hit->k ? "h" + std::to_string(hit->i)
                                         : "h" + std::to_string(hit->i) + "+...+h" + std::to_string(hit->k);
        throw InvalidArgument("box intersects the wall " + f + "=0 (functional (" + std::to_string(hit->i) + "," +
                              std::to_string(hit->k) + "))");
    }
    return BoxRegion(std::move(box));
}

std::uint64_t count_solutions_brute(std::span<const std::int64_t> h, std::uint64_t m,
                                    const kernels::Bitset& squares) {
    const auto t = partial_sums_mod(h, m);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < m; ++x) {
        bool ok = true;
        for (auto ti : t) {
            std::uint64_t y = x + ti;
            if (y >= m) {
                y -= m;
            }
            if (!squares.test(y)) {
                ok = false;
                break;
            }
        }
        count += ok ? 1 : 0;
    }
    return count;
}

std::uint64_t count_solutions_brute(const OffsetVector& h, const PrimePower& pk) {
    const std::uint64_t m = pk.small_value();
    if (m > (std::uint64_t{1} << 32)) {
        throw CapExceeded("prime power too large for exhaustive count");
    }
    return count_solutions_brute(h.h, m, kernels::square_indicator(m));
}

BigInt big_n(const OffsetVector& h, const FactoredModulus& q) {
    BigInt n = 1;
    for (const auto& f : q.factors()) {
        n *= to_big(count_solutions_brute(h, f));
    }
    return n;
}

std::vector<std::uint32_t> solution_table(std::uint64_t m, const kernels::Bitset& squares, int dims) {
    if (dims < 1) {
        throw InvalidArgument("solution_table needs r >= 2");
    }
    std::uint64_t fibers = 1;
    for (int i = 1; i < dims; ++i) {
        fibers *= m;
    }
    std::vector<std::uint32_t> table(fibers * m);
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(dims - 1));
    for (std::uint64_t f = 0; f < fibers; ++f) {
        std::uint64_t rem = f;
        for (std::size_t i = prefix.size(); i-- > 0;) {
            prefix[i] = static_cast<std::int64_t>(rem % m);
            rem /= m;
        }
        const auto t = partial_sums_mod(prefix, m);
        kernels::Bitset b = squares;
        for (std::size_t i = 1; i < t.size(); ++i) {
            b.and_shifted(squares, t[i]);
        }
        const auto corr = kernels::cyclic_correlation(b, squares);
        const std::uint64_t last = t.back();
        for (std::uint64_t hd = 0; hd < m; ++hd) {
            std::uint64_t e = last + hd;
            if (e >= m) {
                e -= m;
            }
            table[f * m + hd] = static_cast<std::uint32_t>(corr[e]);
        }
    }
    return table;
}

SolutionCounter::SolutionCounter(const FactoredModulus& q, int r, std::uint64_t table_cap) : r_(r) {
    if (r < 2) {
        throw InvalidArgument("r must be >= 2");
    }
    for (const auto& f : q.factors()) {
        FactorTable t;
        t.m = f.small_value();
        if (t.m > (std::uint64_t{1} << 32)) {
            throw CapExceeded("prime power too large: " + std::to_string(t.m));
        }
        t.squares = kernels::square_indicator(t.m);
        u128 size = 1;
        for (int i = 1; i < r; ++i) {
            size *= t.m;
        }
        if (size <= table_cap) {
            t.table = solution_table(t.m, t.squares, r - 1);
            t.full = true;
        }
        factors_.push_back(std::move(t));
    }
}

std::uint64_t SolutionCounter::count_factor(std::size_t factor, std::span<const std::int64_t> h) const {
    const auto& t = factors_[factor];
    if (!t.full) {
        return count_solutions_brute(h, t.m, t.squares);
    }
    const auto mm = static_cast<std::int64_t>(t.m);
    std::uint64_t idx = 0;
    for (auto v : h) {
        std::int64_t r = v % mm;
        if (r < 0) {
            r += mm;
        }
        idx = idx * t.m + static_cast<std::uint64_t>(r);
    }
    return t.table[idx];
}

u128 SolutionCounter::count(std::span<const std::int64_t> h) const {
    if (static_cast<int>(h.size()) + 1 != r_) {
        throw InvalidArgument("offset vector length does not match r");
    }
    u128 n = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::uint64_t c = count_factor(i, h);
        if (c == 0) {
            return 0;
        }
        n *= c;
    }
    return n;
}

bool fits_centered_domain(const RationalBox& box, const Rational& s, const BigInt& q) {
    const Rational half(q, 2);
    for (const auto& iv : box.intervals) {
        if (!(s * iv.lo > -half) || !(s * iv.hi <= half)) {
            return false;
        }
    }
    return true;
}

CorrelationResult r_correlation(const BoxRegion& c, const FactoredModulus& q, CorrelationMethod method,
                                const CorrelationOptions& options) {
    CorrelationResult out;
    out.r = c.r();
    out.s = mean_spacing(q);
    out.volume = c.volume();
    out.n_q = count_squares(q);
    const auto points = c.box().scaled_integer_points(out.s);
    out.num_h = points.point_count();
    if (out.num_h > options.h_cap) {
        throw CapExceeded("sC contains " + std::to_string(out.num_h) + " integer points, cap is " +
                          std::to_string(options.h_cap));
    }

    const bool want_sum = method != CorrelationMethod::direct;
    const bool want_direct = method != CorrelationMethod::sum;

    if (want_sum || options.per_h) {
        SolutionCounter counter(q, out.r);
        if (want_sum) {
            out.sum_total = to_big(kernels::sum_over_box(points, [&](std::span<const std::int64_t> h) {
                return counter.count(h);
            }));
        }
        if (options.per_h) {
            std::vector<std::int64_t> h(points.dim());
            for (std::uint64_t idx = 0; idx < out.num_h; ++idx) {
                points.point_at(idx, h);
                out.per_h.push_back({h, to_big(counter.count(h))});
            }
        }
    }
    if (want_direct) {
        if (!fits_centered_domain(c.box(), out.s, q.value())) {
            throw InvalidArgument("direct method needs sC inside (-Q/2, Q/2]^{r-1}");
        }
        const auto x = enumerate_squares(q, options.residue_cap);
        out.direct_total = to_big(kernels::count_difference_tuples(x.elements(), q.small_value(), points));
    }
    const BigInt& total = want_sum ? *out.sum_total : *out.direct_total;
    out.value = Rational(total, out.n_q);
    out.value.canonicalize();
    if (out.sum_total && out.direct_total) {
        out.methods_agree = *out.sum_total == *out.direct_total;
    }
    return out;
}

}  // namespace qrs
