#include <cmath>
#include <doctest.h>

#include "qrspace/verify.hpp"

using namespace qrs;

TEST_CASE("quick identity checks pass") {
    CHECK(check_mobius_inversion().passed);
    CHECK(check_square_counts().passed);
    CHECK(check_fundamental_domain().passed);
    CHECK(check_truncation_idempotence().passed);
    CHECK(check_truncation_exactness().passed);
    CHECK(check_lattice_index().passed);
    CHECK(check_delta_expansion().passed);
    CHECK(check_multiplicativity(300).passed);
}

TEST_CASE("fault injection names the inversion identity") {
    VerifyOptions opts;
    opts.perturb_lambda = true;
    const auto r = check_mobius_inversion(opts);
    CHECK_FALSE(r.passed);
    CHECK(r.name == "mobius-inversion");
    CHECK(r.failure.find("p=") != std::string::npos);
}

TEST_CASE("bound checks") {
    CHECK(check_hensel_defects().passed);
    CHECK(check_lipschitz_residuals().passed);
    CHECK(check_appendix_bounds().passed);
    CHECK(check_delta_bounds().passed);
}

TEST_CASE("epsilon envelope sweep") {
    const auto e = epsilon_envelope(2, 2000);
    CHECK(e.at_pk == 2);
    CHECK(e.max_value == doctest::Approx(3.0 * std::sqrt(2.0)));
    CHECK(e.max_excluding_two < 2.0);
}

TEST_CASE("suite names") {
    CHECK(parse_suite("all") == Suite::all);
    CHECK_THROWS(parse_suite("everything"));
}
