#include "qrspace/truncation.hpp"

#include <cmath>
#include <numeric>

#include "qrspace/kernels.hpp"
#include "qrspace/residues.hpp"

namespace qrs {
namespace {

// Just above the footnote's threshold 7 / log 2.
const double kFootnoteC1 = 7.0 / std::log(2.0) + 1e-9;

std::uint64_t power_dims(std::uint64_t m, int dims, std::uint64_t cap, const char* what) {
    u128 size = 1;
    for (int i = 0; i < dims; ++i) {
        size *= m;
        if (size > cap) {
            throw CapExceeded(std::string(what) + " exceeds enumeration cap");
        }
    }
    return static_cast<std::uint64_t>(size);
}

// Reduce h into row-major index over (Z/m)^dims.
std::uint64_t index_mod(std::span<const std::int64_t> h, std::uint64_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    std::uint64_t idx = 0;
    for (auto v : h) {
        std::int64_t r = v % mm;
        if (r < 0) {
            r += mm;
        }
        idx = idx * m + static_cast<std::uint64_t>(r);
    }
    return idx;
}

void decode(std::uint64_t idx, std::uint64_t m, std::span<std::int64_t> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<std::int64_t>(idx % m);
        idx /= m;
    }
}

BigInt big_pow(const BigInt& b, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rational rational_pow(const Rational& b, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

// Primes of a squarefree modulus.
std::vector<std::uint64_t> primes_of(const FactoredModulus& q) {
    std::vector<std::uint64_t> out;
    for (const auto& f : q.factors()) {
        out.push_back(f.small_p());
    }
    return out;
}

// The divisor c's prime powers as they appear in q~.
FactoredModulus restrict_to(const Divisor& c, const FactoredModulus& q_tilde) {
    std::vector<PrimePower> f;
    for (auto p : c.primes) {
        f.push_back({to_big(p), q_tilde.exponent_of(p)});
    }
    return FactoredModulus::from_factors(std::move(f));
}

FactoredModulus quotient_radical(const FactoredModulus& q, const Divisor& c) {
    std::vector<PrimePower> f;
    for (const auto& pp : q.factors()) {
        bool in_c = false;
        for (auto p : c.primes) {
            in_c = in_c || pp.p == to_big(p);
        }
        if (!in_c) {
            f.push_back({pp.p, 1});
        }
    }
    return FactoredModulus::from_factors(std::move(f));
}

}  // namespace

double alpha_bound(unsigned omega, std::uint64_t p) {
    return 1.5 + std::sqrt(static_cast<double>(omega)) / (7.0 * std::log2(static_cast<double>(p)));
}

TruncationPolicy TruncationPolicy::standard() {
    return {"default", [](unsigned alpha, unsigned omega, std::uint64_t p) {
                const auto cap = static_cast<unsigned>(std::floor(alpha_bound(omega, p)));
                return std::min(alpha, std::max(1U, cap));
            }};
}

TruncationPolicy TruncationPolicy::identity() {
    return {"identity", [](unsigned alpha, unsigned, std::uint64_t) { return alpha; }};
}

FactoredModulus truncate(const FactoredModulus& q, const TruncationPolicy& policy) {
    std::vector<PrimePower> f;
    for (const auto& pp : q.factors()) {
        const unsigned a = policy.rule(pp.alpha, q.omega(), pp.small_p());
        if (a < 1 || a > pp.alpha) {
            throw InvalidArgument("truncation policy '" + policy.name + "' left [1, alpha_p] at p = " +
                                  pp.p.get_str());
        }
        f.push_back({pp.p, a});
    }
    return FactoredModulus::from_factors(std::move(f));
}

FactoredModulus c_tilde(const FactoredModulus& c, const FactoredModulus& q, const TruncationPolicy& policy) {
    if (!c.is_squarefree()) {
        throw InvalidArgument("c must be squarefree");
    }
    const auto qt = truncate(q, policy);
    std::vector<PrimePower> f;
    for (const auto& pp : c.factors()) {
        const unsigned a = qt.exponent_of(pp.small_p());
        if (a == 0) {
            throw InvalidArgument("c does not divide rad(Q)");
        }
        f.push_back({pp.p, a});
    }
    return FactoredModulus::from_factors(std::move(f));
}

std::vector<PrimeTruncation> truncation_table(const FactoredModulus& q, const TruncationPolicy& policy) {
    const auto qt = truncate(q, policy);
    std::vector<PrimeTruncation> out;
    const double omega = q.omega();
    for (std::size_t i = 0; i < q.factors().size(); ++i) {
        PrimeTruncation row;
        row.p = q.factors()[i].small_p();
        row.alpha = q.factors()[i].alpha;
        row.alpha_tilde = qt.factors()[i].alpha;
        row.bound = alpha_bound(q.omega(), row.p);
        row.within_bound = row.alpha_tilde <= row.alpha && row.alpha_tilde <= row.bound;
        if (row.alpha_tilde < row.alpha) {
            const double lhs = std::pow(static_cast<double>(row.p), -static_cast<double>(row.alpha_tilde));
            const double rhs = std::pow(static_cast<double>(row.p), -0.5) * std::exp(-std::sqrt(omega) / kFootnoteC1);
            row.footnote_inequality = lhs <= rhs;
        }
        out.push_back(row);
    }
    return out;
}

CTildeBound ctilde_bound_check(const FactoredModulus& c, const FactoredModulus& q, const TruncationPolicy& policy) {
    CTildeBound out;
    out.c_tilde = c_tilde(c, q, policy);
    out.hypothesis = c.omega() * c.omega() <= q.omega();
    // C~ <= c^{3/2} s^{1/6}  <=>  C~^6 N_Q <= c^9 Q.
    const BigInt lhs = big_pow(out.c_tilde.value(), 6) * count_squares(q);
    const BigInt rhs = big_pow(c.value(), 9) * q.value();
    out.holds = lhs <= rhs;
    return out;
}

TruncationGap truncation_gap(const FactoredModulus& q, const BoxRegion& c, const TruncationPolicy& policy) {
    TruncationGap out;
    out.q_tilde = truncate(q, policy);
    const Rational s = mean_spacing(q);
    const auto points = c.box().scaled_integer_points(s);
    const SolutionCounter full(q, c.r());
    const SolutionCounter trunc(out.q_tilde, c.r());
    const BigInt sum_q = to_big(kernels::sum_over_box(points, [&](auto h) { return full.count(h); }));
    const BigInt sum_t = to_big(kernels::sum_over_box(points, [&](auto h) { return trunc.count(h); }));
    Rational diff = s * Rational(sum_q, q.value()) - s * Rational(sum_t, out.q_tilde.value());
    diff.canonicalize();
    out.exact = abs(diff);
    out.value = out.exact.get_d();
    out.reference = std::exp(-std::sqrt(static_cast<double>(q.omega())));
    return out;
}

std::vector<std::int64_t> eps_delta_numerators(const FactoredModulus& c_tilde, int r) {
    const std::uint64_t ct = c_tilde.small_value();
    const std::uint64_t size = power_dims(ct, r - 1, std::uint64_t{1} << 24, "C~^{r-1}");
    struct Factor {
        std::uint64_t p;
        std::uint64_t m;
        std::vector<std::uint32_t> table;
    };
    std::vector<Factor> factors;
    for (const auto& f : c_tilde.factors()) {
        const std::uint64_t m = f.small_value();
        factors.push_back({f.small_p(), m, solution_table(m, kernels::square_indicator(m), r - 1)});
    }
    std::vector<std::int64_t> out(size);
    std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
    const std::int64_t two_r = std::int64_t{1} << r;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        decode(idx, ct, h);
        __int128 f = 1;
        for (const auto& fac : factors) {
            const auto n = static_cast<std::int64_t>(fac.table[index_mod(h, fac.m)]);
            const auto d = static_cast<std::int64_t>(delta_prime(h, fac.p));
            f *= two_r * n - d * static_cast<std::int64_t>(fac.m);
        }
        if (f > INT64_MAX || f < INT64_MIN) {
            throw CapExceeded("eps*Delta numerator overflows 64 bits");
        }
        out[idx] = static_cast<std::int64_t>(f);
    }
    return out;
}

CompletedSum completed_sum_identity(const FactoredModulus& q_tilde, int r) {
    if (r < 2 || r > 3) {
        throw InvalidArgument("completed_sum_identity supports r in {2,3}");
    }
    if (q_tilde.omega() > 4) {
        throw InvalidArgument("completed_sum_identity supports omega(q) <= 4");
    }
    const std::uint64_t qt = q_tilde.small_value();
    const std::uint64_t cells = power_dims(qt, r - 1, std::uint64_t{1} << 22, "Q~^{r-1}");
    const auto q = q_tilde.radical();
    const unsigned omega = q.omega();
    const BigInt n = count_squares(q_tilde);
    const auto primes = primes_of(q);

    CompletedSum out;
    out.n_power = big_pow(n, static_cast<unsigned>(r));

    // Direct: N(h, Q~) for all h by the bitset correlation over Z/Q~.
    const auto direct = solution_table(qt, kernels::square_indicator(qt), r - 1);
    out.direct_sum = 0;
    for (auto v : direct) {
        out.direct_sum += v;
    }

    struct PerDivisor {
        Divisor c;
        FactoredModulus c_tilde;
        std::uint64_t ct;
        std::vector<std::int64_t> f;
        std::vector<CompositeLattice> lattices;
    };
    std::vector<PerDivisor> parts;
    std::uint64_t lattice_work = 0;
    for (const auto& c : divisors(q)) {
        PerDivisor pd{c, restrict_to(c, q_tilde), 0, {}, {}};
        pd.ct = pd.c_tilde.small_value();
        pd.f = eps_delta_numerators(pd.c_tilde, r);
        pd.lattices = enumerate_composite_lattices(quotient_radical(q, c), r);
        lattice_work += pd.lattices.size() * cells;
        parts.push_back(std::move(pd));
    }

    // Per-h: N(h,Q~) 2^{r omega} = sum_c (Q~/C~) Delta(h, q/c) f_c(h).
    out.per_h_decomposition = true;
    std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
    for (std::uint64_t idx = 0; idx < cells && out.per_h_decomposition; ++idx) {
        decode(idx, qt, h);
        __int128 rhs = 0;
        for (const auto& pd : parts) {
            __int128 d = 1;
            for (auto p : primes) {
                if (std::find(pd.c.primes.begin(), pd.c.primes.end(), p) == pd.c.primes.end()) {
                    d *= delta_prime(h, p);
                }
            }
            rhs += static_cast<__int128>(qt / pd.ct) * d * pd.f[index_mod(h, pd.ct)];
        }
        const __int128 lhs = static_cast<__int128>(direct[idx]) << (r * static_cast<int>(omega));
        out.per_h_decomposition = lhs == rhs;
    }

    const Rational prefactor(q_tilde.value(), BigInt(1) << (r * static_cast<int>(omega)));
    const BigInt qt_pow = big_pow(q_tilde.value(), static_cast<unsigned>(r - 1));

    // After periodicity: sum over h mod C~ only.
    Rational periodic = 0;
    Rational normalized = 0;
    for (const auto& pd : parts) {
        BigInt fsum = 0;
        for (auto v : pd.f) {
            fsum += BigInt(static_cast<long>(v));
        }
        const BigInt ct_pow = big_pow(to_big(pd.ct), static_cast<unsigned>(r - 1));
        for (const auto& l : pd.lattices) {
            const BigInt disc = ct_pow * l.disc;  // disc(C~ L)
            const Rational term(BigInt(static_cast<long>(l.lambda)) * fsum, disc * to_big(pd.ct));
            normalized += term;
            periodic += term * Rational(qt_pow);
        }
    }
    out.periodic_expansion = prefactor * periodic;
    out.periodic_expansion.canonicalize();
    out.normalized_lhs = mean_spacing(q_tilde) / Rational(BigInt(1) << (r * static_cast<int>(omega))) * normalized;
    out.normalized_lhs.canonicalize();
    out.normalized_rhs = rational_pow(Rational(n, q_tilde.value()), r - 1);
    out.normalized_rhs.canonicalize();

    // Before periodicity: literal sum over h mod Q~ restricted to L.
    if (lattice_work <= (std::uint64_t{1} << 26)) {
        Rational expanded = 0;
        for (const auto& pd : parts) {
            for (const auto& l : pd.lattices) {
                __int128 acc = 0;
                for (std::uint64_t idx = 0; idx < cells; ++idx) {
                    decode(idx, qt, h);
                    if (l.contains(h)) {
                        acc += pd.f[index_mod(h, pd.ct)];
                    }
                }
                const auto acc_big = acc >= 0 ? to_big(static_cast<u128>(acc)) : BigInt(-to_big(static_cast<u128>(-acc)));
                expanded += Rational(BigInt(static_cast<long>(l.lambda)) * acc_big, to_big(pd.ct));
            }
        }
        out.lattice_expansion = prefactor * expanded;
        out.lattice_expansion->canonicalize();
    }

    const Rational target(out.n_power);
    out.holds = out.direct_sum == out.n_power && out.per_h_decomposition && out.periodic_expansion == target &&
                out.normalized_lhs == out.normalized_rhs &&
                (!out.lattice_expansion || *out.lattice_expansion == target);
    return out;
}

PeriodicityReport periodicity_check(const CompositeLattice& lattice, const FactoredModulus& c,
                                    const FactoredModulus& q_tilde, const BoxRegion& region,
                                    std::optional<Rational> s) {
    if (!c.is_squarefree()) {
        throw InvalidArgument("c must be squarefree");
    }
    const int r = region.r();
    if (lattice.r != r) {
        throw InvalidArgument("lattice dimension does not match the region");
    }
    std::vector<PrimePower> cf;
    for (const auto& pp : c.factors()) {
        const unsigned a = q_tilde.exponent_of(pp.small_p());
        if (a == 0) {
            throw InvalidArgument("c does not divide rad(Q~)");
        }
        cf.push_back({pp.p, a});
    }
    const auto ct_mod = FactoredModulus::from_factors(std::move(cf));
    const std::uint64_t ct = ct_mod.small_value();

    PeriodicityReport out;
    out.s = s ? *s : mean_spacing(q_tilde);
    out.coprime = true;
    for (const auto& comp : lattice.components) {
        out.coprime = out.coprime && !mpz_divisible_ui_p(c.value().get_mpz_t(), comp.p);
    }
    out.small = Rational(lattice.disc * ct_mod.value()) <= out.s;

    const auto f = eps_delta_numerators(ct_mod, r);
    const auto points = region.box().scaled_integer_points(out.s);
    out.points = points.point_count();
    std::vector<std::int64_t> h(points.dim());
    __int128 lhs_num = 0;
    for (std::uint64_t idx = 0; idx < out.points; ++idx) {
        points.point_at(idx, h);
        if (lattice.contains(h)) {
            lhs_num += f[index_mod(h, ct)];
        }
    }
    auto to_signed_big = [](__int128 v) {
        return v >= 0 ? to_big(static_cast<u128>(v)) : BigInt(-to_big(static_cast<u128>(-v)));
    };
    out.lhs = Rational(to_signed_big(lhs_num), to_big(ct));
    out.lhs.canonicalize();

    BigInt fsum = 0;
    for (auto v : f) {
        fsum += BigInt(static_cast<long>(v));
    }
    const Rational vol = region.volume() * rational_pow(out.s, r - 1);
    const BigInt disc = big_pow(to_big(ct), static_cast<unsigned>(r - 1)) * lattice.disc;
    out.rhs = vol / Rational(disc) * Rational(fsum, to_big(ct));
    out.rhs.canonicalize();
    out.residual = out.lhs - out.rhs;
    out.residual.canonicalize();
    return out;
}

Rational spacing_ratio(const FactoredModulus& q, const TruncationPolicy& policy) {
    Rational r = mean_spacing(q) / mean_spacing(truncate(q, policy));
    r.canonicalize();
    return r;
}

AppendixReport appendix_diagnostics(const FactoredModulus& modulus, const AppendixOptions& options) {
    const auto q = modulus.radical();
    AppendixReport out;
    out.omega = q.omega();
    out.s = mean_spacing(modulus).get_d();
    out.f_half = big_f(q, 0.5);
    out.f_one = big_f(q, 1.0);
    const double w = out.omega;
    out.f_half_shape = out.omega >= 2 ? std::sqrt(w / std::log(w)) : 0.0;
    out.f_one_shape = out.omega >= 3 ? std::log(std::log(w)) : 0.0;

    out.asserted_bounds_hold = true;
    if (out.omega > 0) {
        const double p1 = q.factors().front().p.get_d();
        for (int k = 3; k <= 6; ++k) {
            FBound b{k, big_f(q, k / 2.0), 3.0 * std::pow(p1, 1.0 - k / 2.0), false};
            b.holds = b.value <= b.bound;
            out.asserted_bounds_hold = out.asserted_bounds_hold && b.holds;
            out.f_bounds.push_back(b);
        }
    }

    out.eps_product = 1.0;
    for (const auto& f : q.factors()) {
        out.eps_product *= 1.0 + options.k_const / std::sqrt(f.p.get_d());
    }
    out.eps_product_envelope = std::exp(options.k_const * out.f_half);

    const double root = std::sqrt(w);
    const double size_floor = std::pow(out.s, options.size_exponent);
    const auto divs = divisors(q);
    out.divisor_count = divs.size();
    for (const auto& c : divs) {
        const double cv = c.value.get_d();
        if (static_cast<double>(c.omega) >= root) {
            out.omega_tail += std::pow(options.k_const, c.omega) / std::sqrt(cv);
        }
        if (cv >= size_floor) {
            out.size_tail += std::pow(cv, -options.weight_exponent);
        }
    }
    out.omega_tail_shape = std::exp(-root);
    return out;
}

}  // namespace qrs
