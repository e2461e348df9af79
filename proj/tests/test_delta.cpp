#include <doctest.h>

#include "oracles.hpp"
#include "qrspace/delta.hpp"

using namespace qrs;

namespace {

BoxRegion box(std::initializer_list<std::pair<Rational, Rational>> iv) {
    RationalBox b;
    for (const auto& [lo, hi] : iv) {
        b.intervals.push_back({lo, hi});
    }
    return BoxRegion::make(std::move(b));
}

std::int64_t lambda_of(int r, std::vector<std::uint8_t> rgs) { return mobius_coefficients(r).lambda_of(SetPartition(rgs)); }

}  // namespace

TEST_CASE("set partitions") {
    CHECK(all_partitions(3).size() == 5);
    CHECK(all_partitions(4).size() == 15);
    CHECK(all_partitions(5).size() == 52);
    CHECK(all_partitions(4).front().is_singletons());
    CHECK(all_partitions(4).back() == SetPartition::merged(4));
    CHECK_THROWS_AS(SetPartition({1, 0}), InvalidArgument);
    const SetPartition p({0, 1, 0});
    CHECK(p.to_string() == "{0,2}{1}");
    CHECK(p.codim() == 1);
    CHECK(SetPartition::singletons(3).refines(p));
    CHECK(p.refines(SetPartition::merged(3)));
    CHECK_FALSE(p.refines(SetPartition({0, 0, 1})));
    // t = (0, 2, 5): t0 = t2 mod 5.
    const std::int64_t h[] = {2, 3};
    CHECK(p.contains(h, 5));
    CHECK_FALSE(p.contains(h, 7));
}

TEST_CASE("lambda: known values") {
    CHECK(lambda_of(2, {0, 1}) == 1);
    CHECK(lambda_of(2, {0, 0}) == 1);
    CHECK(lambda_of(3, {0, 1, 2}) == 1);
    CHECK(lambda_of(3, {0, 0, 1}) == 1);
    CHECK(lambda_of(3, {0, 1, 0}) == 1);
    CHECK(lambda_of(3, {0, 0, 0}) == 0);
    CHECK(lambda_of(4, {0, 0, 1, 2}) == 1);
    CHECK(lambda_of(4, {0, 0, 1, 1}) == 1);
    CHECK(lambda_of(4, {0, 0, 0, 1}) == 0);
    CHECK(lambda_of(4, {0, 0, 0, 0}) == -2);
    CHECK_THROWS_AS(mobius_coefficients(1), InvalidArgument);
    CHECK_THROWS_AS(mobius_coefficients(kMaxPartitionR + 1), InvalidArgument);
}

TEST_CASE("lambda against the closed-form partition-lattice Mobius function") {
    for (int r = 2; r <= 6; ++r) {
        const auto table = mobius_coefficients(r);
        for (const auto& e : table.entries) {
            std::vector<int> sigma(e.partition.blocks().begin(), e.partition.blocks().end());
            REQUIRE(e.lambda == oracle::lambda(sigma));
        }
    }
}

TEST_CASE("inversion identity against the Delta oracle") {
    for (int r = 2; r <= 5; ++r) {
        const auto table = mobius_coefficients(r);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            std::uint64_t cells = 1;
            for (int i = 1; i < r; ++i) {
                cells *= p;
            }
            for (std::uint64_t idx = 0; idx < cells && cells <= 20000; ++idx) {
                std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
                std::uint64_t rem = idx;
                for (auto& v : h) {
                    v = static_cast<std::int64_t>(rem % p);
                    rem /= p;
                }
                REQUIRE(delta_prime(h, p) == oracle::delta(h, p));
                REQUIRE(table.evaluate(h, p) == static_cast<std::int64_t>(oracle::delta(h, p)));
            }
        }
    }
}

TEST_CASE("Delta and epsilon examples") {
    CHECK(delta_prime(OffsetVector({2, 3}), 5) == 2);
    CHECK(epsilon(OffsetVector({1}), {7, 1}) == Rational(1, 7));
    CHECK(epsilon(OffsetVector({0}), {7, 1}) == Rational(1, 7));
    CHECK(epsilon(OffsetVector({3}), {3, 2}) == Rational(-1, 3));
    CHECK(epsilon_from_count(2, 1, 2, 7) == Rational(1, 7));
    CHECK(delta_composite(OffsetVector({6}), factor(std::uint64_t{30})) == 4);
    // eps over a composite modulus is the product of the local values.
    CHECK(epsilon_composite(OffsetVector({1}), factor(std::uint64_t{63})) ==
          epsilon(OffsetVector({1}), {7, 1}) * epsilon(OffsetVector({1}), {3, 2}));
    CHECK_THROWS_AS(delta_composite(OffsetVector({1}), factor(std::uint64_t{12})), InvalidArgument);
}

TEST_CASE("composite lattices") {
    const auto single = enumerate_composite_lattices(factor(std::uint64_t{7}), 2);
    REQUIRE(single.size() == 2);
    CHECK(single[0].supp == 1);
    CHECK(single[1].supp == 7);
    CHECK(single[1].disc == 7);
    CHECK(single[1].lambda == 1);
    const std::int64_t zero[] = {14};
    const std::int64_t one[] = {15};
    CHECK(single[1].contains(zero));
    CHECK_FALSE(single[1].contains(one));

    const auto six = enumerate_composite_lattices(factor(std::uint64_t{6}), 2);
    std::vector<std::uint64_t> supps;
    for (const auto& l : six) {
        supps.push_back(l.supp);
        CHECK(l.disc == l.supp);
        CHECK(l.lambda == 1);
    }
    CHECK(supps == std::vector<std::uint64_t>{1, 2, 3, 6});

    for (const auto& l : enumerate_composite_lattices(factor(std::uint64_t{30}), 3)) {
        for (const auto& c : l.components) {
            CHECK_FALSE(c.partition == SetPartition::merged(3));
        }
    }
    LatticeFilter f;
    f.exact_supp = 6;
    for (const auto& l : enumerate_composite_lattices(factor(std::uint64_t{30}), 3, f)) {
        CHECK(l.supp == 6);
    }
}

TEST_CASE("lattice point counts") {
    const auto l3 = enumerate_composite_lattices(factor(std::uint64_t{3}), 2)[1];
    RationalBox b{{{5, 16}}};
    const auto c = count_lattice_points(l3, b, 1);
    CHECK(c.count == 4);
    CHECK(c.prediction == Rational(11, 3));
    CHECK(c.residual == Rational(1, 3));

    LatticeFilter f;
    f.exact_supp = 5;
    for (const auto& l : enumerate_composite_lattices(factor(std::uint64_t{5}), 3, f)) {
        RationalBox sq{{{0, 25}, {0, 25}}};
        std::uint64_t brute = 0;
        for (std::int64_t a = 0; a <= 25; ++a) {
            for (std::int64_t bb = 0; bb <= 25; ++bb) {
                const std::int64_t h[] = {a, bb};
                brute += l.contains(h) ? 1 : 0;
            }
        }
        CHECK(count_lattice_points(l, sq, 1).count == brute);
        if (l.components[0].partition == SetPartition({0, 0, 1})) {
            CHECK(brute == 156);
        }
    }
    const auto triv = trivial_lattice(2);
    const auto t = count_lattice_points(triv, RationalBox{{{Rational(1, 2), Rational(3, 2)}}}, Rational(7, 4));
    CHECK(t.count == 2);
    CHECK(t.prediction == Rational(7, 4));
}

TEST_CASE("Delta sums") {
    const auto c = box({{Rational(1, 2), Rational(3, 2)}});
    CHECK(delta_sum_over_region(factor(std::uint64_t{7}), Rational(7, 4), c).direct == 2);
    CHECK(delta_sum_over_region(factor(std::uint64_t{1}), Rational(10), c).direct == 11);
    const auto q = factor(std::uint64_t{105});
    const auto d = delta_sum_over_region(q, mean_spacing(q), c);
    CHECK(d.direct == d.via_lattices);
    const auto c3 = box({{Rational(1, 2), Rational(3, 2)}, {Rational(1, 3), 2}});
    const auto q3 = factor(std::uint64_t{210});
    const auto d3 = delta_sum_over_region(q3, mean_spacing(q3), c3);
    CHECK(d3.direct == d3.via_lattices);
}

TEST_CASE("Hensel defects") {
    CHECK(hensel_defect(3, 1, 2, 2).value == 1);
    CHECK(hensel_defect(5, 1, 3, 2).value == Rational(44, 25));
    CHECK(hensel_defect(5, 1, 3, 3).value == Rational(47, 25));
    CHECK(hensel_defect(7, 2, 2, 3).value == 0);
    CHECK_THROWS_AS(hensel_defect(5, 2, 1, 2), InvalidArgument);
    CHECK_THROWS_AS(hensel_defect(7, 1, 9, 3), CapExceeded);

    // Brute maximum for p = 3, a = 1, b = 2.
    std::uint64_t best = 0;
    for (std::int64_t h = 0; h < 9; ++h) {
        const auto nb = static_cast<std::int64_t>(oracle::solutions({h}, 9));
        const auto na = 3 * static_cast<std::int64_t>(oracle::solutions({h}, 3));
        best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::abs(nb - na)));
    }
    CHECK(hensel_defect(3, 1, 2, 2).value == oracle::frac(static_cast<long>(best), 3));
}

TEST_CASE("empty intersections") {
    const auto q = factor(std::uint64_t{210});
    const Rational s = mean_spacing(q);
    const auto c = box({{Rational(1, 2), Rational(3, 2)}});
    const auto rep = empty_intersection_check(q, s, c);
    for (const auto& e : rep.entries) {
        if (e.lattice.components.size() == 1) {
            const bool empty = e.count == 0;
            CHECK(empty == (Rational(static_cast<long>(e.lattice.supp)) > s * Rational(3, 2)));
        }
    }
    const auto two = empty_intersection_check(factor(std::uint64_t{2}), Rational(7, 4), c);
    REQUIRE(two.entries.size() == 1);
    CHECK(two.entries[0].count == 1);
}
