#pragma once

#include "logimg/image.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace logimg::testing {

inline RasterImage random_code_image(int w, int h, std::uint64_t seed, int lo = 0, int hi = 255) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> code(lo, hi);
    std::vector<std::uint8_t> rgb(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3);
    for (auto& c : rgb) c = static_cast<std::uint8_t>(code(rng));
    return RasterImage::from_codes(w, h, rgb);
}

/// 8-bit image whose channel statistics approximate the requested v0, v1, v2
/// (requires v1 < v0 < v2 per channel). Below-mean pixels mix two adjacent
/// codes to hit v1, above-mean pixels likewise for v2, and the split between
/// the two groups sets v0.
inline RasterImage image_with_stats(const std::array<double, 3>& v0, const std::array<double, 3>& v1,
                                    const std::array<double, 3>& v2, int w = 128, int h = 128) {
    const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    std::vector<std::uint8_t> rgb(n * 3);
    auto fill = [&](std::size_t channel, std::size_t begin, std::size_t count, double target) {
        const double x = (target + 1.0) * 128.0 - 0.5;
        const auto base = static_cast<int>(std::floor(x));
        const auto upper = static_cast<std::size_t>(std::lround((x - base) * static_cast<double>(count)));
        for (std::size_t i = 0; i < count; ++i) {
            rgb[3 * (begin + i) + channel] = static_cast<std::uint8_t>(i < upper ? base + 1 : base);
        }
    };
    for (std::size_t c = 0; c < 3; ++c) {
        const auto lower = static_cast<std::size_t>(std::lround(static_cast<double>(n) * (v2[c] - v0[c]) / (v2[c] - v1[c])));
        fill(c, 0, lower, v1[c]);
        fill(c, lower, n - lower, v2[c]);
    }
    return RasterImage::from_codes(w, h, rgb);
}

}  // namespace logimg::testing
