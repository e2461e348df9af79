#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qrspace/truncation.hpp"

using namespace qrs;

namespace {

BoxRegion box(std::initializer_list<std::pair<Rational, Rational>> iv) {
    RationalBox b;
    for (const auto& [lo, hi] : iv) {
        b.intervals.push_back({lo, hi});
    }
    return BoxRegion::make(std::move(b));
}

FactoredModulus mod(std::initializer_list<std::pair<std::uint64_t, unsigned>> f) {
    std::vector<PrimePower> v;
    for (const auto& [p, a] : f) {
        v.push_back({to_big(p), a});
    }
    return FactoredModulus::from_factors(std::move(v));
}

}  // namespace

TEST_CASE("truncate: examples") {
    CHECK(truncate(mod({{2, 10}, {3, 1}, {5, 1}})).value() == 30);
    CHECK(truncate(mod({{2, 4}})).value() == 2);
    CHECK(truncate(factor(std::uint64_t{30030})) == factor(std::uint64_t{30030}));
    CHECK(truncate(mod({{2, 10}}), TruncationPolicy::identity()).value() == 1024);
    CHECK(alpha_bound(3, 2) == doctest::Approx(1.5 + std::sqrt(3.0) / 7.0));

    TruncationPolicy bad{"zero", [](unsigned, unsigned, std::uint64_t) { return 0U; }};
    CHECK_THROWS_AS(truncate(mod({{3, 2}}), bad), InvalidArgument);
}

TEST_CASE("truncate is idempotent and respects the bound") {
    for (const auto& q : {mod({{2, 10}, {3, 1}, {5, 1}}), mod({{2, 6}, {3, 4}, {5, 1}, {7, 1}}), mod({{3, 4}}),
                          mod({{2, 20}, {3, 10}, {5, 3}, {7, 2}, {11, 1}})}) {
        const auto qt = truncate(q);
        CHECK(truncate(qt) == qt);
        for (const auto& row : truncation_table(q)) {
            CHECK(row.alpha_tilde <= row.alpha);
            CHECK(row.within_bound);
            CHECK(row.footnote_inequality.has_value() == (row.alpha_tilde < row.alpha));
        }
    }
}

TEST_CASE("footnote inequality") {
    const auto rows = truncation_table(mod({{2, 10}, {3, 1}, {5, 1}}));
    REQUIRE(rows[0].footnote_inequality.has_value());
    // 2^{-1} <= 2^{-1/2} exp(-sqrt(3) ln2 / 7) holds.
    CHECK(*rows[0].footnote_inequality);
}

TEST_CASE("c_tilde and its bound") {
    const auto q = mod({{2, 10}, {3, 1}, {5, 1}});
    CHECK(c_tilde(mod({{2, 1}}), q).value() == 2);
    CHECK(c_tilde(mod({{2, 1}}), q, TruncationPolicy::identity()).value() == 1024);
    CHECK_THROWS_AS(c_tilde(mod({{7, 1}}), q), InvalidArgument);
    CHECK_THROWS_AS(c_tilde(mod({{2, 2}}), q), InvalidArgument);

    const auto b = ctilde_bound_check(mod({{2, 1}}), q);
    CHECK(b.c_tilde.value() == 2);
    CHECK(b.hypothesis);
    CHECK(b.holds);
    CHECK(ctilde_bound_check(FactoredModulus(), q).holds);
    const auto sq = factor(std::uint64_t{30030});
    for (const auto& d : divisors(sq)) {
        CHECK(ctilde_bound_check(as_modulus(d), sq).holds);
    }
    // With the identity policy C~ = 1024 exceeds c^{3/2} s^{1/6}.
    CHECK_FALSE(ctilde_bound_check(mod({{2, 1}}), q, TruncationPolicy::identity()).holds);
}

TEST_CASE("spacing ratio") {
    CHECK(spacing_ratio(factor(std::uint64_t{30030})) == 1);
    CHECK(spacing_ratio(mod({{2, 10}, {3, 1}, {5, 1}})) == oracle::frac(15360, 1032) / oracle::frac(30, 12));
    CHECK(count_squares_pk({2, 10}) == 172);
    const auto n81 = static_cast<long>(oracle::squares(81).size());
    CHECK(spacing_ratio(mod({{3, 4}})) == oracle::frac(81, n81) / oracle::frac(3, 2));
}

TEST_CASE("truncation gap") {
    const auto c = box({{Rational(1, 2), Rational(3, 2)}});
    CHECK(truncation_gap(factor(std::uint64_t{2310}), c).exact == 0);

    // Q = 2^6 3^4 5 7 evaluated from oracle counts.
    const auto q = mod({{2, 6}, {3, 4}, {5, 1}, {7, 1}});
    const auto g = truncation_gap(q, c);
    const std::uint64_t qv = q.small_value();
    const std::uint64_t qt = g.q_tilde.small_value();
    const Rational s = mean_spacing(q);
    const auto pts = c.box().scaled_integer_points(s);
    auto local = [](std::int64_t h, const FactoredModulus& m) {
        std::uint64_t n = 1;
        for (const auto& f : m.factors()) {
            n *= oracle::solutions({h}, f.small_value());
        }
        return n;
    };
    std::uint64_t s1 = 0, s2 = 0;
    for (std::int64_t h = pts.lo[0]; h <= pts.hi[0]; ++h) {
        s1 += local(h, q);
        s2 += local(h, g.q_tilde);
    }
    Rational expected = s * oracle::frac(static_cast<long>(s1), static_cast<long>(qv)) -
                        s * oracle::frac(static_cast<long>(s2), static_cast<long>(qt));
    expected = abs(expected);
    CHECK(g.exact == expected);
    CHECK(g.reference == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("completed sum identity") {
    const auto a = completed_sum_identity(factor(std::uint64_t{7}), 2);
    CHECK(a.direct_sum == 16);
    CHECK(a.holds);
    const auto b = completed_sum_identity(factor(std::uint64_t{12}), 2);
    CHECK(b.direct_sum == 16);
    CHECK(b.holds);
    const auto c = completed_sum_identity(factor(std::uint64_t{30}), 3);
    CHECK(c.direct_sum == 1728);
    CHECK(c.n_power == 1728);
    REQUIRE(c.lattice_expansion.has_value());
    CHECK(*c.lattice_expansion == 1728);
    CHECK(c.periodic_expansion == 1728);
    CHECK(c.per_h_decomposition);
    CHECK(c.normalized_lhs == c.normalized_rhs);
    CHECK(completed_sum_identity(factor(std::uint64_t{360}), 3).holds);
    CHECK_THROWS_AS(completed_sum_identity(factor(std::uint64_t{2310}), 2), InvalidArgument);
    CHECK_THROWS_AS(completed_sum_identity(factor(std::uint64_t{30}), 4), InvalidArgument);
}

TEST_CASE("eps * Delta numerators against the oracle") {
    for (std::uint64_t ct : {9, 12, 20}) {
        const auto m = factor(ct);
        for (int r = 2; r <= 3; ++r) {
            const auto f = eps_delta_numerators(m, r);
            std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
            for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
                std::uint64_t rem = idx;
                for (std::size_t i = h.size(); i-- > 0;) {
                    h[i] = static_cast<std::int64_t>(rem % ct);
                    rem /= ct;
                }
                std::int64_t expected = 1;
                for (const auto& pp : m.factors()) {
                    const auto n = static_cast<std::int64_t>(oracle::solutions(h, pp.small_value()));
                    const auto d = static_cast<std::int64_t>(oracle::delta(h, pp.small_p()));
                    expected *= (std::int64_t{1} << r) * n - d * static_cast<std::int64_t>(pp.small_value());
                }
                REQUIRE(f[idx] == expected);
            }
        }
    }
}

TEST_CASE("periodicity") {
    const FactoredModulus one;
    // c = 1, trivial lattice: residual is the lattice-point discrepancy.
    const auto p = periodicity_check(trivial_lattice(2), one, factor(std::uint64_t{7}),
                                     box({{Rational(1, 2), Rational(3, 2)}}));
    CHECK(p.lhs == 2);
    CHECK(p.rhs == Rational(7, 4));
    CHECK(p.residual == Rational(1, 4));
    const auto z = periodicity_check(trivial_lattice(2), one, factor(std::uint64_t{7}),
                                     box({{Rational(2, 7), Rational(6, 7)}}), Rational(7, 4));
    CHECK(z.residual == 0);

    // Q~ = 21, c = 3, trivial lattice, compared with a direct sum.
    const auto c = box({{Rational(1, 2), Rational(3, 2)}});
    const auto r21 = periodicity_check(trivial_lattice(2), factor(std::uint64_t{3}), factor(std::uint64_t{21}), c);
    CHECK(r21.s == Rational(21, 8));
    CHECK_FALSE(r21.small);
    Rational direct = 0;
    for (std::int64_t h = 2; h <= 3; ++h) {
        direct += Rational(4 * static_cast<long>(oracle::solutions({h}, 3)) - static_cast<long>(oracle::delta({h}, 3)) * 3, 3);
    }
    CHECK(r21.lhs == direct);
    // vol(sC) / 3 * (2 + 1 + 1) / 3.
    CHECK(r21.rhs == Rational(7, 6));

    // Q~ = 105, c = 3, L: h = 0 mod 7.
    LatticeFilter f;
    f.exact_supp = 7;
    const auto l7 = enumerate_composite_lattices(factor(std::uint64_t{7}), 2, f).at(0);
    const auto r105 = periodicity_check(l7, factor(std::uint64_t{3}), factor(std::uint64_t{105}), c);
    CHECK(r105.coprime);
    CHECK(r105.residual == r105.lhs - r105.rhs);
    CHECK(r105.points == 4);
}

TEST_CASE("appendix diagnostics") {
    const auto a = appendix_diagnostics(factor(std::uint64_t{30}));
    REQUIRE(a.f_bounds.size() == 4);
    CHECK(a.f_bounds[0].value == doctest::Approx(std::pow(2, -1.5) + std::pow(3, -1.5) + std::pow(5, -1.5)));
    CHECK(a.f_bounds[0].bound == doctest::Approx(3 / std::sqrt(2.0)));
    CHECK(a.asserted_bounds_hold);
    CHECK(a.divisor_count == 8);

    const auto p = appendix_diagnostics(factor(std::uint64_t{101}));
    CHECK(p.omega_tail == doctest::Approx(2.0 / std::sqrt(101.0)));

    const auto big = appendix_diagnostics(factor(std::uint64_t{9699690}));
    CHECK(big.divisor_count == 256);
    CHECK(std::isfinite(big.omega_tail));
    CHECK(std::isfinite(big.size_tail));
    CHECK(big.eps_product <= big.eps_product_envelope);
}
