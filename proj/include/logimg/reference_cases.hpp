/**
 * @file reference_cases.hpp
 * @brief Published channel statistics and parameters for four test images
 *
 * Vectors and parameters are printed to three decimals in the source
 * material; the originating photographs are not distributed.
 */
#pragma once

#include "logimg/image.hpp"

#include <array>
#include <span>
#include <string_view>

namespace logimg {

struct ReferenceCase {
    std::string_view name;
    std::array<double, 3> v0, v1, v2;
    double alpha_a, beta_a;
    double alpha_b, beta_b;

    ImageStats stats() const;
};

std::span<const ReferenceCase> reference_cases();

/// Absolute tolerance on alpha and beta when reproducing reference_cases().
inline constexpr double kReferenceTolerance = 0.005;

}  // namespace logimg
