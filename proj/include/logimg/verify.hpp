/**
 * @file verify.hpp
 * @brief Seeded property checks of the logarithmic algebra and regression
 *        of the reference parameters
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logimg {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;  // largest observed violation
    std::string detail;
};

struct AxiomOptions {
    std::size_t samples = 10000;
    std::uint64_t seed = 20020101;
    double tolerance = 1e-9;
};

/// Isomorphism, formula equivalence, group and vector-space axioms, norm
/// homogeneity, Cauchy-Schwarz, closure and monotonicity on random samples.
std::vector<CheckResult> run_axiom_checks(const AxiomOptions& opts);

/// One check per reference image and algorithm (eight in total).
std::vector<CheckResult> run_reference_regressions(double tolerance);

}  // namespace logimg
