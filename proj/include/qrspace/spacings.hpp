#pragma once

// Spacing statistics of X_Q.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qrspace/kernels.hpp"
#include "qrspace/residues.hpp"

namespace qrs {

enum class SpacingMode { circular, linear };

struct SpacingSummary {
    SpacingMode mode = SpacingMode::circular;
    /// Normalizing spacing: Q/N_Q (circular) or (x_N - x_1)/N_Q (linear).
    Rational scale;
    std::vector<std::uint64_t> gaps;
    std::vector<double> normalized;
    kernels::Histogram histogram;
    double ks_distance = 0.0;
    double mean = 0.0;
};

inline constexpr std::size_t kDefaultBins = 40;
inline constexpr double kDefaultMaxY = 8.0;

SpacingSummary spacing_summary(const ResidueSet& x, SpacingMode mode = SpacingMode::circular,
                               std::size_t bins = kDefaultBins, double max_y = kDefaultMaxY);

/// Kolmogorov-Smirnov distance to the standard exponential law.
double ks_exponential(std::span<const double> sample);

struct DavenportRow {
    std::uint64_t gap = 0;
    std::uint64_t count = 0;
    double frequency = 0.0;
    double expected = 0.0;  // 2^{-gap}
};

/// Frequencies of circular gaps g = 1..max_gap among consecutive squares mod p.
std::vector<DavenportRow> davenport_distribution(std::uint64_t p, std::uint64_t max_gap);

}  // namespace qrs
