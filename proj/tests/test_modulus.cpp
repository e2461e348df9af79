#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qrspace/modulus.hpp"

using namespace qrs;

TEST_CASE("factor: small moduli and canonical form") {
    const auto q = factor(std::uint64_t{360});
    CHECK(q.to_string() == "2^3*3^2*5");
    CHECK(q.value() == 360);
    CHECK(q.rad() == 30);
    CHECK(q.omega() == 3);
    CHECK_FALSE(q.is_squarefree());
    CHECK(q.exponent_of(3) == 2);
    CHECK(q.exponent_of(7) == 0);
    CHECK(factor(std::uint64_t{1}).to_string() == "1");
    CHECK(factor(std::uint64_t{1}).omega() == 0);
    CHECK_THROWS_AS(factor(BigInt(0)), InvalidArgument);
    CHECK_THROWS_AS(factor(BigInt(-6)), InvalidArgument);
}

TEST_CASE("factor: beyond trial division") {
    // Two primes above the trial-division bound.
    const BigInt n = BigInt(1000003) * BigInt(1000033);
    const auto q = factor(n);
    REQUIRE(q.omega() == 2);
    CHECK(q.factors()[0].p == 1000003);
    CHECK(q.factors()[1].p == 1000033);

    const BigInt m = BigInt("2305843009213693951") * BigInt(1000003) * BigInt(1000003);
    const auto f = factor(m);
    REQUIRE(f.omega() == 2);
    CHECK(f.factors()[0].alpha == 2);
    CHECK(f.factors()[1].p == BigInt("2305843009213693951"));
    CHECK(f.value() == m);
}

TEST_CASE("factor agrees with a smallest-prime-factor sieve for n <= 10^6") {
    const std::uint64_t limit = 1000000;
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i) {
                if (spf[j] == 0) {
                    spf[j] = static_cast<std::uint32_t>(i);
                }
            }
        }
    }
    std::uint64_t bad = 0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        std::vector<PrimePower> expected;
        for (std::uint64_t m = n; m > 1;) {
            const std::uint64_t p = spf[m];
            unsigned a = 0;
            while (m % p == 0) {
                m /= p;
                ++a;
            }
            expected.push_back({to_big(p), a});
        }
        if (!(factor(n).factors() == expected)) {
            ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("is_prime against trial division") {
    for (std::uint64_t n = 0; n < 100000; ++n) {
        REQUIRE(is_prime(n) == oracle::is_prime(n));
    }
    CHECK(is_prime(BigInt("2305843009213693951")));
    CHECK_FALSE(is_prime(BigInt("3215031751")));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
}

TEST_CASE("from_factors validation") {
    CHECK_THROWS_AS(FactoredModulus::from_factors({{4, 1}}), InvalidArgument);
    CHECK_THROWS_AS(FactoredModulus::from_factors({{3, 1}, {2, 1}}), InvalidArgument);
    CHECK_THROWS_AS(FactoredModulus::from_factors({{3, 1}, {3, 2}}), InvalidArgument);
    CHECK_THROWS_AS(FactoredModulus::from_factors({{3, 0}}), InvalidArgument);
    CHECK(FactoredModulus::from_factors({{2, 2}, {3, 1}}).value() == 12);
}

TEST_CASE("crt_combine") {
    const CrtPart parts[] = {{1, {2, 3}}, {4, {3, 2}}, {0, {5, 1}}};
    CHECK(crt_combine(parts) == 265);

    const CrtPart repeated[] = {{1, {3, 1}}, {2, {3, 1}}};
    CHECK_THROWS_AS(crt_combine(repeated), InvalidArgument);
    const CrtPart out_of_range[] = {{9, {3, 2}}};
    CHECK_THROWS_AS(crt_combine(out_of_range), InvalidArgument);
}

TEST_CASE("crt round trip") {
    std::mt19937_64 rng(12345);
    const auto q = factor(std::uint64_t{2} * 2 * 2 * 9 * 5 * 7 * 11 * 13 * 101);
    const std::uint64_t n = q.small_value();
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t x = rng() % n;
        std::vector<CrtPart> parts;
        for (const auto& f : q.factors()) {
            parts.push_back({to_big(x % f.small_value()), f});
        }
        REQUIRE(crt_combine(parts) == to_big(x));
    }
}

TEST_CASE("sigma and F") {
    CHECK(sigma(factor(std::uint64_t{30})) == Rational(12, 5));
    CHECK(sigma(factor(std::uint64_t{15})) == Rational(8, 5));
    CHECK_THROWS_AS(sigma(factor(std::uint64_t{12})), InvalidArgument);
    CHECK(big_f(factor(std::uint64_t{30}), 1.0) == doctest::Approx(31.0 / 30.0));
    CHECK(big_f(factor(std::uint64_t{30}), 0.5) == doctest::Approx(1.7317).epsilon(1e-4));

    // sigma(q) = sum_{d | q} 1/d for squarefree q.
    for (std::uint64_t q : {1, 2, 6, 30, 210, 2310, 1001, 4199}) {
        const auto fq = factor(q);
        Rational sum = 0;
        for (std::uint64_t d = 1; d <= q; ++d) {
            if (q % d == 0) {
                sum += Rational(1, static_cast<long>(d));
            }
        }
        sum.canonicalize();
        CHECK(sigma(fq) == sum);
    }
}

TEST_CASE("divisors") {
    const auto divs = divisors(factor(std::uint64_t{30}));
    std::vector<long> values;
    for (const auto& d : divs) {
        values.push_back(d.value.get_si());
    }
    CHECK(values == std::vector<long>{1, 2, 3, 5, 6, 10, 15, 30});
    CHECK(divs[4].omega == 2);
    CHECK(divs[4].primes == std::vector<std::uint64_t>{2, 3});

    DivisorFilter f;
    f.max_omega = 1;
    CHECK(divisors(factor(std::uint64_t{30}), f).size() == 4);
    f = {};
    f.max_value = BigInt(6);
    CHECK(divisors(factor(std::uint64_t{30}), f).size() == 5);
    f = {};
    f.min_omega = 2;
    CHECK(divisors(factor(std::uint64_t{30}), f).size() == 4);

    // Divisors of a non-squarefree modulus are the squarefree divisors of its radical.
    CHECK(divisors(factor(std::uint64_t{360})).size() == 8);
    CHECK_THROWS_AS(divisors(factor(std::uint64_t{30}), {}, 4), CapExceeded);
    CHECK(as_modulus(divs[7]).to_string() == "2*3*5");
}
