#pragma once

// The verify suites: exact identities and asserted finite bounds, each
// reported as a named check with the first failing input.

#include <cstdint>
#include <string>
#include <vector>

namespace qrs {

enum class Suite { identities, bounds, all };

Suite parse_suite(const std::string& name);

struct VerifyOptions {
    /// Fault injection: add 1 to one lambda coefficient before the inversion check.
    bool perturb_lambda = false;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;   // measured values
    std::string failure;  // first failing input, empty on pass
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool ok() const;
};

VerifyReport run_verify(Suite suite, const VerifyOptions& options = {});

// Individual checks, also used by the acceptance runner.
CheckResult check_completed_sum();
CheckResult check_multiplicativity(std::uint64_t max_product = 10000);
CheckResult check_crt_consistency();
CheckResult check_mobius_inversion(const VerifyOptions& options = {});
CheckResult check_square_counts();
CheckResult check_method_agreement();
CheckResult check_fundamental_domain();
CheckResult check_truncation_idempotence();
CheckResult check_truncation_exactness();
CheckResult check_lattice_index();
CheckResult check_delta_expansion();
CheckResult check_epsilon_envelope();
CheckResult check_hensel_defects();
CheckResult check_lipschitz_residuals();
CheckResult check_appendix_bounds();
CheckResult check_delta_bounds();

/// max over h and prime powers p^k <= limit of |eps(h,p^k)| sqrt(p), with the argmax.
struct EnvelopeSweep {
    double max_value = 0.0;
    std::uint64_t at_pk = 0;
    std::vector<std::int64_t> at_h;
    double max_excluding_two = 0.0;  // same sweep without p = 2
};
EnvelopeSweep epsilon_envelope(int r, std::uint64_t limit);

}  // namespace qrs
