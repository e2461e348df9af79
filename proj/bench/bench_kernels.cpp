// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qrspace/kernels.hpp"
#include "qrspace/modulus.hpp"
#include "qrspace/residues.hpp"

namespace {

using namespace qrs;

void BM_CyclicCorrelation(benchmark::State& state, bool serial) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    const auto sq = kernels::square_indicator(m);
    for (auto _ : state) {
        auto out = serial ? kernels::cyclic_correlation_serial(sq, sq) : kernels::cyclic_correlation(sq, sq);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK_CAPTURE(BM_CyclicCorrelation, serial, true)->Arg(4096)->Arg(30030);
BENCHMARK_CAPTURE(BM_CyclicCorrelation, omp, false)->Arg(4096)->Arg(30030);

void BM_CrtProduct(benchmark::State& state, bool serial) {
    const auto q = factor(static_cast<std::uint64_t>(state.range(0)));
    std::vector<std::vector<std::uint64_t>> sets;
    std::vector<std::uint64_t> moduli;
    for (const auto& f : q.factors()) {
        sets.push_back(squares_mod_pk(f));
        moduli.push_back(f.small_value());
    }
    for (auto _ : state) {
        auto out = serial ? kernels::crt_product_serial(sets, moduli) : kernels::crt_product(sets, moduli);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK_CAPTURE(BM_CrtProduct, serial, true)->Arg(9699690)->Arg(223092870);
BENCHMARK_CAPTURE(BM_CrtProduct, omp, false)->Arg(9699690)->Arg(223092870);

void BM_DifferenceTuples(benchmark::State& state, bool serial) {
    const auto q = factor(static_cast<std::uint64_t>(state.range(0)));
    const auto x = enumerate_squares(q);
    const Rational s = mean_spacing(q);
    kernels::IntBox box{{ceil_of(s / 2).get_si(), ceil_of(s / 2).get_si()},
                        {floor_of(3 * s / 2).get_si(), floor_of(3 * s / 2).get_si()}};
    const std::uint64_t n = q.small_value();
    for (auto _ : state) {
        auto v = serial ? kernels::count_difference_tuples_serial(x.elements(), n, box)
                        : kernels::count_difference_tuples(x.elements(), n, box);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK_CAPTURE(BM_DifferenceTuples, serial, true)->Arg(510510);
BENCHMARK_CAPTURE(BM_DifferenceTuples, omp, false)->Arg(510510);

void BM_Histogram(benchmark::State& state, bool serial) {
    std::vector<double> v(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = static_cast<double>((i * 2654435761U) % 100000) / 10000.0;
    }
    for (auto _ : state) {
        auto h = serial ? kernels::histogram_serial(v, 40, 8.0) : kernels::histogram(v, 40, 8.0);
        benchmark::DoNotOptimize(h.counts.data());
    }
}
BENCHMARK_CAPTURE(BM_Histogram, serial, true)->Arg(1 << 22);
BENCHMARK_CAPTURE(BM_Histogram, omp, false)->Arg(1 << 22);

}  // namespace

BENCHMARK_MAIN();
