#pragma once

// Truncation Q -> Q~, the completed-sum identity, periodicity of
// epsilon * Delta modulo C~, and the divisor-sum diagnostics.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrspace/correlations.hpp"
#include "qrspace/delta.hpp"
#include "qrspace/modulus.hpp"

namespace qrs {

/// 3/2 + sqrt(omega) / (7 log2 p).
double alpha_bound(unsigned omega, std::uint64_t p);

struct TruncationPolicy {
    std::string name;
    /// (alpha_p, omega(q), p) -> truncated exponent.
    std::function<unsigned(unsigned, unsigned, std::uint64_t)> rule;

    /// min(alpha, max(1, floor(alpha_bound))).
    static TruncationPolicy standard();
    static TruncationPolicy identity();
};

/// Throws InvalidArgument if the policy leaves [1, alpha_p].
FactoredModulus truncate(const FactoredModulus& q, const TruncationPolicy& policy = TruncationPolicy::standard());

/// prod_{p|c} p^{alpha~_p} for squarefree c | rad(Q).
FactoredModulus c_tilde(const FactoredModulus& c, const FactoredModulus& q,
                        const TruncationPolicy& policy = TruncationPolicy::standard());

struct PrimeTruncation {
    std::uint64_t p = 0;
    unsigned alpha = 0;
    unsigned alpha_tilde = 0;
    double bound = 0.0;
    bool within_bound = false;
    /// p^{-alpha~} <= p^{-1/2} exp(-sqrt(omega)/C1); only meaningful when truncation is strict.
    std::optional<bool> footnote_inequality;
};

std::vector<PrimeTruncation> truncation_table(const FactoredModulus& q,
                                              const TruncationPolicy& policy = TruncationPolicy::standard());

struct CTildeBound {
    FactoredModulus c_tilde;
    bool hypothesis = false;  // omega(c)^2 <= omega(q)
    bool holds = false;       // C~^6 <= c^9 s, exactly
};

CTildeBound ctilde_bound_check(const FactoredModulus& c, const FactoredModulus& q,
                               const TruncationPolicy& policy = TruncationPolicy::standard());

struct TruncationGap {
    FactoredModulus q_tilde;
    Rational exact;
    double value = 0.0;
    double reference = 0.0;  // exp(-sqrt(omega))
};

TruncationGap truncation_gap(const FactoredModulus& q, const BoxRegion& c,
                             const TruncationPolicy& policy = TruncationPolicy::standard());

struct CompletedSum {
    BigInt direct_sum;                      // sum_{h mod Q~} N(h, Q~), counted directly
    BigInt n_power;                         // N_{Q~}^r
    bool per_h_decomposition = false;       // N/Q~ = Delta(h,q)/2^{r omega} sum_c eps(h,C~) for every h
    std::optional<Rational> lattice_expansion;  // before periodicity
    Rational periodic_expansion;            // after collapsing h mod Q~ to h mod C~
    Rational normalized_lhs;                // s_{Q~}/2^{r omega} sum ... / disc(C~L) ...
    Rational normalized_rhs;                // (N_{Q~}/Q~)^{r-1}
    bool holds = false;
};

/// Feasibility guard: omega <= 4, r in {2,3}, Q~^{r-1} <= 2^22.
CompletedSum completed_sum_identity(const FactoredModulus& q_tilde, int r);

/// f_c(h) = prod_{p|c} (2^r N(h,p^a) - Delta(h,p) p^a) over h mod C~, so that
/// eps(h,C~) Delta(h,c) = f_c(h) / C~. Row-major table over (Z/C~)^{r-1}.
std::vector<std::int64_t> eps_delta_numerators(const FactoredModulus& c_tilde, int r);

struct PeriodicityReport {
    Rational lhs;       // sum_{h in sC cap L} eps(h,C~) Delta(h,c)
    Rational rhs;       // vol(sC)/disc(C~L) sum_{h mod C~} eps Delta
    Rational residual;  // lhs - rhs
    Rational s;
    bool coprime = false;  // gcd(disc L, c) = 1
    bool small = false;    // disc(L) C~ <= s
    std::uint64_t points = 0;
};

/// s defaults to s_{Q~}.
PeriodicityReport periodicity_check(const CompositeLattice& lattice, const FactoredModulus& c,
                                    const FactoredModulus& q_tilde, const BoxRegion& region,
                                    std::optional<Rational> s = std::nullopt);

/// (Q/N_Q) / (Q~/N_{Q~}).
Rational spacing_ratio(const FactoredModulus& q, const TruncationPolicy& policy = TruncationPolicy::standard());

struct AppendixOptions {
    double k_const = 2.0;
    double size_exponent = 1.0 / 3.0;   // c >= s^a
    double weight_exponent = 0.5;       // c^{-b}
};

struct FBound {
    int k = 0;
    double value = 0.0;
    double bound = 0.0;  // 3 p_1^{1-k/2}
    bool holds = false;
};

struct AppendixReport {
    unsigned omega = 0;
    std::uint64_t divisor_count = 0;
    double f_half = 0.0;
    double f_one = 0.0;
    double f_half_shape = 0.0;  // sqrt(omega/log omega)
    double f_one_shape = 0.0;   // log log omega
    std::vector<FBound> f_bounds;  // k = 3..6
    double eps_product = 0.0;      // prod (1 + K p^{-1/2})
    double eps_product_envelope = 0.0;  // exp(K F(q,1/2))
    double omega_tail = 0.0;       // sum_{omega(c) >= sqrt(omega)} K^{omega(c)} c^{-1/2}
    double omega_tail_shape = 0.0; // exp(-sqrt(omega))
    double size_tail = 0.0;        // sum_{c >= s^a} c^{-b}
    double s = 0.0;
    bool asserted_bounds_hold = false;
};

/// Uses rad(Q) as q and s = Q/N_Q.
AppendixReport appendix_diagnostics(const FactoredModulus& q, const AppendixOptions& options = {});

}  // namespace qrs
