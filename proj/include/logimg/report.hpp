/**
 * @file report.hpp
 * @brief Statistics report (JSON) and before/after histograms (CSV)
 */
#pragma once

#include "logimg/enhance.hpp"
#include "logimg/image.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>

namespace logimg {

struct AlgorithmOutcome {
    std::optional<AffineParams> params;
    std::optional<std::string> error;
};

struct StatsReport {
    int width = 0;
    int height = 0;
    ImageStats stats;
    AlgorithmOutcome a;
    AlgorithmOutcome b;
};

/// Computes stats and tries both algorithms; failures are recorded, not thrown.
StatsReport make_stats_report(const RasterImage& f);

/// Fixed key order: v0, v1, v2, alpha_a, beta_a, k_a, alpha_b, beta_b, k_b,
/// width, height, lower_counts, upper_counts, error_a, error_b.
std::string to_json(const StatsReport& report, int indent = 2);

using ChannelHistogram = std::array<std::array<std::size_t, 256>, 3>;

ChannelHistogram histogram(const RasterImage& f);

/// Header plus 256 rows: code, r_before, g_before, b_before, r_after, g_after, b_after.
std::string histogram_csv(const ChannelHistogram& before, const ChannelHistogram& after);

}  // namespace logimg
