#include "qrspace/spacings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qrs {

SpacingSummary spacing_summary(const ResidueSet& x, SpacingMode mode, std::size_t bins, double max_y) {
    const auto& el = x.elements();
    const std::uint64_t n = el.size();
    if (n < 2) {
        throw InvalidArgument("spacing statistics need at least two residues");
    }
    SpacingSummary out;
    out.mode = mode;
    out.gaps.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.gaps.push_back(el[i + 1] - el[i]);
    }
    if (mode == SpacingMode::circular) {
        out.gaps.push_back(el.front() + x.modulus().small_value() - el.back());
        out.scale = Rational(x.modulus().value(), to_big(n));
    } else {
        out.scale = Rational(to_big(el.back() - el.front()), to_big(n));
    }
    out.scale.canonicalize();

    const double scale = out.scale.get_d();
    out.normalized.resize(out.gaps.size());
    for (std::size_t i = 0; i < out.gaps.size(); ++i) {
        out.normalized[i] = static_cast<double>(out.gaps[i]) / scale;
    }
    out.mean = std::accumulate(out.normalized.begin(), out.normalized.end(), 0.0) /
               static_cast<double>(out.normalized.size());
    out.histogram = kernels::histogram(out.normalized, bins, max_y);
    out.ks_distance = ks_exponential(out.normalized);
    return out;
}

double ks_exponential(std::span<const double> sample) {
    if (sample.empty()) {
        throw InvalidArgument("KS statistic of an empty sample");
    }
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = sorted[i] <= 0 ? 0.0 : -std::expm1(-sorted[i]);
        const double below = static_cast<double>(i) / n;
        const double above = static_cast<double>(i + 1) / n;
        d = std::max({d, above - cdf, cdf - below});
    }
    return d;
}

std::vector<DavenportRow> davenport_distribution(std::uint64_t p, std::uint64_t max_gap) {
    if (p < 5 || !is_prime(p)) {
        throw InvalidArgument("davenport_distribution needs an odd prime p >= 5");
    }
    auto x = enumerate_squares(FactoredModulus::from_factors({{to_big(p), 1}}));
    const auto& el = x.elements();
    std::vector<std::uint64_t> counts(max_gap + 1, 0);
    auto tally = [&](std::uint64_t g) {
        if (g <= max_gap) {
            ++counts[g];
        }
    };
    for (std::size_t i = 0; i + 1 < el.size(); ++i) {
        tally(el[i + 1] - el[i]);
    }
    tally(el.front() + p - el.back());

    std::vector<DavenportRow> rows;
    const double total = static_cast<double>(el.size());
    for (std::uint64_t g = 1; g <= max_gap; ++g) {
        rows.push_back({g, counts[g], static_cast<double>(counts[g]) / total, std::ldexp(1.0, -static_cast<int>(g))});
    }
    return rows;
}

}  // namespace qrs
