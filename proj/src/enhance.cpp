/**
 * @file enhance.cpp
 * @brief Least-squares affine enhancement
 */
#include "logimg/enhance.hpp"

#include "logimg/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logimg {

std::string_view to_string(Algorithm algo) { return algo == Algorithm::a ? "A" : "B"; }

namespace targets {
const ColorVec& w0() { return kTheta; }
const ColorVec& w1() {
    static const ColorVec v = ColorVec::splat(-0.5);
    return v;
}
const ColorVec& w2() {
    static const ColorVec v = ColorVec::splat(0.5);
    return v;
}
}  // namespace targets

NormalEquations normal_equations(const LsqSystem& sys) {
    if (sys.rows.empty()) {
        throw InvalidArgument("least-squares system has no rows");
    }
    NormalEquations n;
    for (const LsqRow& row : sys.rows) {
        const PhiVec p = phi(row.p), q = phi(row.q), t = phi(row.target);
        for (std::size_t c = 0; c < 3; ++c) {
            n.c_vv += p[c] * p[c];
            n.c_uu += q[c] * q[c];
            n.c_vu += p[c] * q[c];
            n.c_vw += p[c] * t[c];
            n.c_uw += q[c] * t[c];
        }
    }
    return n;
}

LsqSystem build_system_a(const ImageStats& s) {
    return {{
        {s.v0, unit_translation(), targets::w0()},
        {vec_sub(s.v1, s.v0), kTheta, targets::w1()},
        {vec_sub(s.v2, s.v0), kTheta, targets::w2()},
    }};
}

LsqSystem build_system_b(const ImageStats& s) {
    if (norm3(s.v0) <= 1e-9) {
        throw ZeroMeanNorm();
    }
    return {{
        {s.v0, s.v0, targets::w0()},
        {s.v1, s.v0, targets::w1()},
        {s.v2, s.v0, targets::w2()},
    }};
}

LsqSystem build_system(const ImageStats& stats, Algorithm algo) {
    return algo == Algorithm::a ? build_system_a(stats) : build_system_b(stats);
}

ColorVec translation_for(const ImageStats& stats, Algorithm algo) {
    return algo == Algorithm::a ? unit_translation() : stats.v0;
}

LsqSolution solve_mmse(const LsqSystem& sys) {
    const NormalEquations n = normal_equations(sys);
    const double det = n.determinant();
    if (!(std::abs(det) > 1e-12 * std::max(1.0, n.c_vv * n.c_uu))) {
        throw SingularSystem();
    }
    // Cramer's rule. c_uw vanishes for both built-in systems, leaving
    // alpha = c_vw c_uu / det and beta = -c_vw c_vu / det.
    return {(n.c_vw * n.c_uu - n.c_uw * n.c_vu) / det, (n.c_uw * n.c_vv - n.c_vw * n.c_vu) / det};
}

double residual_sum_squares(const LsqSystem& sys, double alpha, double beta) {
    double sum = 0.0;
    for (const LsqRow& row : sys.rows) {
        const PhiVec p = phi(row.p), q = phi(row.q), t = phi(row.target);
        for (std::size_t c = 0; c < 3; ++c) {
            const double r = alpha * p[c] + beta * q[c] - t[c];
            sum += r * r;
        }
    }
    return sum;
}

LsqSolution mmse_oracle(const LsqSystem& sys, double grid_halfwidth, double step) {
    if (!(grid_halfwidth > 0.0) || !(step > 0.0)) {
        throw InvalidArgument("mmse_oracle: grid parameters must be positive");
    }
    std::vector<double> p, q, t;
    for (const LsqRow& row : sys.rows) {
        const PhiVec pp = phi(row.p), qq = phi(row.q), tt = phi(row.target);
        for (std::size_t c = 0; c < 3; ++c) {
            p.push_back(pp[c]);
            q.push_back(qq[c]);
            t.push_back(tt[c]);
        }
    }
    const auto steps = static_cast<long>(std::floor(2.0 * grid_halfwidth / step + 1e-9));
    const std::size_t m = p.size();
    std::vector<double> offset(m);

    LsqSolution best{};
    double best_err = std::numeric_limits<double>::infinity();
    for (long i = 0; i <= steps; ++i) {
        const double alpha = -grid_halfwidth + static_cast<double>(i) * step;
        for (std::size_t e = 0; e < m; ++e) {
            offset[e] = alpha * p[e] - t[e];
        }
        for (long j = 0; j <= steps; ++j) {
            const double beta = -grid_halfwidth + static_cast<double>(j) * step;
            double err = 0.0;
            for (std::size_t e = 0; e < m; ++e) {
                const double r = offset[e] + beta * q[e];
                err += r * r;
            }
            if (err < best_err) {
                best_err = err;
                best = {alpha, beta};
            }
        }
    }
    return best;
}

AffineParams solve_params(const ImageStats& stats, Algorithm algo) {
    const LsqSolution s = solve_mmse(build_system(stats, algo));
    return {s.alpha, s.beta, translation_for(stats, algo)};
}

RasterImage apply_affine(const RasterImage& f, const AffineParams& params, Parallelism par) {
    if (!std::isfinite(params.alpha) || !std::isfinite(params.beta)) {
        throw InvalidArgument("apply_affine: alpha and beta must be finite");
    }
    const ColorVec offset = vec_smul(params.beta, params.k);
    const double alpha = params.alpha;
    return map_pixels(
        f, [alpha, offset](const ColorVec& px) { return vec_add(vec_smul(alpha, px), offset); }, par);
}

EnhanceResult enhance_auto(const RasterImage& f, Algorithm algo, Parallelism par) {
    ImageStats stats = compute_stats(f);
    AffineParams params = solve_params(stats, algo);
    RasterImage out = apply_affine(f, params, par);
    return {std::move(out), params, stats};
}

}  // namespace logimg
