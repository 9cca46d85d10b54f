/**
 * @file enhance.hpp
 * @brief Affine enhancement t(f) = alpha (x) f (+) beta (x) k with
 *        least-squares optimal parameters
 *
 * Two parameter choices are provided. Algorithm A translates every channel
 * by a constant (k = unit_translation()); algorithm B translates along the
 * image mean (k = v0). In both cases alpha and beta minimize the squared
 * residual, in arctanh coordinates, of an overdetermined system asking that
 * the mean go to the neutral color and the lower/upper sub-means go to
 * (-0.5)^3 and (0.5)^3.
 */
#pragma once

#include "logimg/image.hpp"
#include "logimg/logspace.hpp"

#include <string_view>
#include <vector>

namespace logimg {

enum class Algorithm { a, b };

std::string_view to_string(Algorithm algo);

struct AffineParams {
    double alpha = 1.0;
    double beta = 0.0;
    ColorVec k;
};

/// Target positions of v0, v1 and v2 after enhancement.
namespace targets {
const ColorVec& w0();
const ColorVec& w1();
const ColorVec& w2();
}  // namespace targets

/// One vector equation alpha (x) p (+) beta (x) q = target, i.e. three scalar
/// equations alpha * phi(p_i) + beta * phi(q_i) = phi(target_i).
struct LsqRow {
    ColorVec p;
    ColorVec q;
    ColorVec target;
};

struct LsqSystem {
    std::vector<LsqRow> rows;
};

/// Entries of the 2x2 normal equations.
struct NormalEquations {
    double c_vv = 0.0;  // sum phi(p)^2
    double c_uu = 0.0;  // sum phi(q)^2
    double c_vu = 0.0;  // sum phi(p) phi(q)
    double c_vw = 0.0;  // sum phi(p) phi(target)
    double c_uw = 0.0;  // sum phi(q) phi(target)

    double determinant() const { return c_vv * c_uu - c_vu * c_vu; }
};

struct LsqSolution {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Throws InvalidArgument for an empty system.
NormalEquations normal_equations(const LsqSystem& sys);

/// rows (v0, u, w0), (v1 (-) v0, 0, w1), (v2 (-) v0, 0, w2) with u = unit_translation().
LsqSystem build_system_a(const ImageStats& stats);
/// rows (v0, v0, w0), (v1, v0, w1), (v2, v0, w2). Throws ZeroMeanNorm when norm3(v0) <= 1e-9.
LsqSystem build_system_b(const ImageStats& stats);
LsqSystem build_system(const ImageStats& stats, Algorithm algo);

/// Translation vector k used with the given algorithm.
ColorVec translation_for(const ImageStats& stats, Algorithm algo);

/// Closed-form minimizer of the squared residual. Throws SingularSystem when
/// |det| <= 1e-12 * max(1, c_vv * c_uu).
LsqSolution solve_mmse(const LsqSystem& sys);

/// Exhaustive search over the grid [-halfwidth, halfwidth]^2 with the given
/// step. Slow; meant for checking solve_mmse.
LsqSolution mmse_oracle(const LsqSystem& sys, double grid_halfwidth, double step);

/// Sum of squared scalar residuals at (alpha, beta).
double residual_sum_squares(const LsqSystem& sys, double alpha, double beta);

AffineParams solve_params(const ImageStats& stats, Algorithm algo);

RasterImage apply_affine(const RasterImage& f, const AffineParams& params,
                         Parallelism par = Parallelism::sequential());

struct EnhanceResult {
    RasterImage image;
    AffineParams params;
    ImageStats stats;
};

EnhanceResult enhance_auto(const RasterImage& f, Algorithm algo,
                           Parallelism par = Parallelism::sequential());

}  // namespace logimg
