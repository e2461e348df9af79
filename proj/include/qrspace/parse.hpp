#pragma once

// Text forms accepted on the command line: moduli, boxes, offset vectors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrspace/correlations.hpp"
#include "qrspace/modulus.hpp"

namespace qrs {

enum class OutputFormat { json, csv, text };

struct RunConfig {
    std::string command;
    std::string modulus;
    int r = 2;
    std::string box;
    OutputFormat format = OutputFormat::text;
    int threads = 0;  // 0: available parallelism
    std::uint64_t max_residues = kDefaultResidueCap;
    std::uint64_t max_h_points = std::uint64_t{1} << 28;
};

/// "2^2*3*5" or a bare integer such as "60".
FactoredModulus parse_modulus(const std::string& text);

/// Comma-separated "a:b" rational pairs, exactly r-1 of them.
BoxRegion parse_box(const std::string& text, int r);

/// Comma-separated integers.
std::vector<std::int64_t> parse_offsets(const std::string& text);

OutputFormat parse_format(const std::string& name);

/// --threads wins over QRSPACE_THREADS; 0 means leave the runtime default.
int resolve_threads(std::optional<int> flag);

}  // namespace qrs
