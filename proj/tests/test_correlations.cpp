#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qrspace/correlations.hpp"

using namespace qrs;

namespace {

BoxRegion box(std::initializer_list<std::pair<Rational, Rational>> iv) {
    RationalBox b;
    for (const auto& [lo, hi] : iv) {
        b.intervals.push_back({lo, hi});
    }
    return BoxRegion::make(std::move(b));
}

}  // namespace

TEST_CASE("N(h, Q) examples") {
    CHECK(big_n(OffsetVector({1}), factor(std::uint64_t{7})) == 2);
    CHECK(big_n(OffsetVector({3}), factor(std::uint64_t{9})) == 3);
    CHECK(big_n(OffsetVector({1}), factor(std::uint64_t{12})) == 1);
}

TEST_CASE("N(h, Q) against the oracle") {
    std::mt19937_64 rng(11);
    for (std::uint64_t n : {7, 8, 9, 12, 16, 25, 27, 30, 45, 60, 72, 105, 360}) {
        const auto q = factor(n);
        for (int r = 2; r <= 4; ++r) {
            const SolutionCounter counter(q, r);
            for (int t = 0; t < 40; ++t) {
                std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
                for (auto& v : h) {
                    v = static_cast<std::int64_t>(rng() % 400) - 200;
                }
                const auto expected = oracle::solutions(h, n);
                REQUIRE(big_n(OffsetVector(h), q) == to_big(expected));
                REQUIRE(counter.count(h) == expected);
            }
        }
    }
}

TEST_CASE("solution_table for composite m against the oracle") {
    for (std::uint64_t m : {6, 12, 35}) {
        const auto t = solution_table(m, kernels::square_indicator(m), 2);
        for (std::uint64_t idx = 0; idx < t.size(); ++idx) {
            const std::vector<std::int64_t> h{static_cast<std::int64_t>(idx / m), static_cast<std::int64_t>(idx % m)};
            REQUIRE(t[idx] == oracle::solutions(h, m));
        }
    }
}

TEST_CASE("brute counts fall back when the table cap is small") {
    const auto q = factor(std::uint64_t{3 * 3 * 3 * 5});
    const SolutionCounter tiny(q, 3, 4);
    const SolutionCounter full(q, 3);
    for (std::int64_t a = -5; a <= 5; ++a) {
        for (std::int64_t b = 0; b <= 5; ++b) {
            const std::int64_t h[] = {a, b};
            CHECK(tiny.count(h) == full.count(h));
        }
    }
    const std::int64_t wrong[] = {1};
    CHECK_THROWS_AS(full.count(wrong), InvalidArgument);
}

TEST_CASE("partial sums") {
    const OffsetVector h({3, -5, 4});
    CHECK(h.r() == 4);
    CHECK(h.partial_sums() == std::vector<std::int64_t>{0, 3, -2, 2});
    CHECK(h.partial_sums_mod(7) == std::vector<std::uint64_t>{0, 3, 5, 2});
}

TEST_CASE("walls") {
    CHECK(wall_check(box({{Rational(1, 2), Rational(3, 2)}}).box()));
    try {
        box({{-1, 1}});
        FAIL("expected a wall violation");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("functional (1,1)") != std::string::npos);
    }
    // Each interval avoids 0 but h1 + h2 can vanish.
    try {
        box({{1, 2}, {-3, -1}});
        FAIL("expected a wall violation");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("functional (1,2)") != std::string::npos);
    }
    CHECK_NOTHROW(box({{-3, -2}, {-3, -1}}));
    CHECK_THROWS_AS(box({{2, 1}}), InvalidArgument);
}

TEST_CASE("scaled integer points") {
    const auto b = box({{Rational(1, 2), Rational(3, 2)}});
    const auto pts = b.box().scaled_integer_points(Rational(7, 4));
    CHECK(pts.lo[0] == 1);
    CHECK(pts.hi[0] == 2);
    CHECK(b.volume() == 1);
}

TEST_CASE("R_2 examples") {
    const auto c = box({{Rational(1, 2), Rational(3, 2)}});
    const auto r7 = r_correlation(c, factor(std::uint64_t{7}), CorrelationMethod::both);
    CHECK(r7.value == 1);
    CHECK(r7.num_h == 2);
    CHECK(r7.s == Rational(7, 4));
    CHECK(r7.methods_agree);

    const auto r1 = r_correlation(c, factor(std::uint64_t{1}), CorrelationMethod::sum);
    CHECK(r1.value == 1);
    CHECK_THROWS_AS(r_correlation(c, factor(std::uint64_t{1}), CorrelationMethod::direct), InvalidArgument);
}

TEST_CASE("sum and direct methods against the tuple oracle") {
    const std::vector<BoxRegion> boxes{box({{Rational(1, 2), Rational(3, 2)}}), box({{Rational(1, 5), 2}}),
                                       box({{Rational(1, 2), Rational(3, 2)}, {Rational(1, 2), Rational(3, 2)}}),
                                       box({{Rational(-3, 2), -1}, {Rational(1, 4), Rational(1, 2)}})};
    for (std::uint64_t n : {7, 12, 30, 45, 60, 105}) {
        const auto q = factor(n);
        for (const auto& c : boxes) {
            const auto res = r_correlation(c, q, CorrelationMethod::both);
            const auto pts = c.box().scaled_integer_points(res.s);
            const auto expected = oracle::tuples(n, pts.lo, pts.hi);
            CHECK(*res.sum_total == to_big(expected));
            CHECK(*res.direct_total == to_big(expected));
        }
    }
}

TEST_CASE("per-h listing and caps") {
    CorrelationOptions opts;
    opts.per_h = true;
    const auto c = box({{Rational(1, 2), Rational(3, 2)}});
    const auto res = r_correlation(c, factor(std::uint64_t{30}), CorrelationMethod::sum, opts);
    REQUIRE(res.per_h.size() == res.num_h);
    BigInt total = 0;
    for (const auto& e : res.per_h) {
        total += e.count;
    }
    CHECK(total == *res.sum_total);
    opts.h_cap = 1;
    CHECK_THROWS_AS(r_correlation(c, factor(std::uint64_t{30}), CorrelationMethod::sum, opts), CapExceeded);
}
