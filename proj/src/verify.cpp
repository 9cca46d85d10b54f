/**
 * @file verify.cpp
 * @brief Property and regression checks behind `logimg verify`
 */
#include "logimg/verify.hpp"

#include "logimg/enhance.hpp"
#include "logimg/logspace.hpp"
#include "logimg/reference_cases.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

namespace logimg {

namespace {

// Vector-space identities compose up to three operations. Keeping |v| <= 0.99
// and |lambda| <= 2 keeps every intermediate below |phi| ~ 10.6, where tanh
// still resolves phi to ~1e-12.
constexpr double kValueRange = 0.99;
constexpr double kScalarRange = 2.0;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    LogScalar value(double range = kValueRange) { return LogScalar::make(uniform(-range, range)); }
    double scalar(double range = kScalarRange) { return uniform(-range, range); }
    ColorVec color(double range = kValueRange) { return {value(range), value(range), value(range)}; }

private:
    std::mt19937_64 rng_;
};

double diff(const ColorVec& a, const ColorVec& b) {
    return std::max({std::abs(a.r.value() - b.r.value()), std::abs(a.g.value() - b.g.value()),
                     std::abs(a.b.value() - b.b.value())});
}

double power_form(double lambda, double a) {
    const double p = std::pow(1.0 + a, lambda), m = std::pow(1.0 - a, lambda);
    return (p - m) / (p + m);
}

bool strictly_inside(LogScalar x) { return x.value() > -1.0 && x.value() < 1.0; }

/// Runs `sample` n times; each call returns a violation size (0 = holds).
CheckResult check(const std::string& name, std::size_t n, double tol, const std::function<double()>& sample) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, sample());
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max violation %.3e (tol %.1e, n=%zu)", worst, tol, n);
    return {name, worst <= tol, worst, buf};
}

}  // namespace

std::vector<CheckResult> run_axiom_checks(const AxiomOptions& opts) {
    const std::size_t n = opts.samples;
    const double tol = opts.tolerance;
    Sampler s(opts.seed);
    std::vector<CheckResult> out;

    out.push_back(check("isomorphism: add = phi_inv(phi + phi)", n, tol, [&] {
        const LogScalar a = s.value(0.999), b = s.value(0.999);
        return std::abs(log_add(a, b).value() - phi_inv(phi(a) + phi(b)).value());
    }));
    out.push_back(check("isomorphism: smul = phi_inv(lambda phi)", n, tol, [&] {
        const LogScalar a = s.value(0.999);
        const double l = s.scalar(16.0);
        return std::abs(log_smul(l, a).value() - phi_inv(l * phi(a)).value());
    }));
    out.push_back(check("power form = tanh(lambda arctanh)", n, tol, [&] {
        const LogScalar a = s.value(0.999);
        const double l = s.scalar(8.0);
        return std::abs(log_smul(l, a).value() - power_form(l, a.value()));
    }));
    out.push_back(check("commutativity", n, tol, [&] {
        const ColorVec u = s.color(), v = s.color();
        return diff(vec_add(u, v), vec_add(v, u));
    }));
    out.push_back(check("associativity", n, tol, [&] {
        const ColorVec u = s.color(), v = s.color(), w = s.color();
        return diff(vec_add(vec_add(u, v), w), vec_add(u, vec_add(v, w)));
    }));
    out.push_back(check("identity", n, tol, [&] {
        const ColorVec u = s.color(0.999);
        return diff(vec_add(u, kTheta), u);
    }));
    out.push_back(check("inverse", n, tol, [&] {
        const ColorVec u = s.color(0.999);
        return std::max(diff(vec_add(u, vec_neg(u)), kTheta), diff(vec_sub(u, u), kTheta));
    }));
    out.push_back(check("distributivity over vectors", n, tol, [&] {
        const ColorVec u = s.color(), v = s.color();
        const double l = s.scalar();
        return diff(vec_smul(l, vec_add(u, v)), vec_add(vec_smul(l, u), vec_smul(l, v)));
    }));
    out.push_back(check("distributivity over scalars", n, tol, [&] {
        const ColorVec v = s.color();
        const double l = s.scalar(), m = s.scalar();
        return diff(vec_smul(l + m, v), vec_add(vec_smul(l, v), vec_smul(m, v)));
    }));
    out.push_back(check("scalar compatibility", n, tol, [&] {
        const ColorVec v = s.color();
        const double l = s.scalar(), m = s.scalar();
        return diff(vec_smul(l * m, v), vec_smul(l, vec_smul(m, v)));
    }));
    out.push_back(check("unit scalar", n, tol, [&] {
        const ColorVec v = s.color(0.999);
        return diff(vec_smul(1.0, v), v);
    }));
    out.push_back(check("norm homogeneity", n, tol, [&] {
        const ColorVec v = s.color();
        const double l = s.scalar();
        return std::abs(norm3(vec_smul(l, v)) - std::abs(l) * norm3(v));
    }));
    out.push_back(check("Cauchy-Schwarz", n, std::min(tol, 1e-12), [&] {
        const ColorVec u = s.color(0.999), v = s.color(0.999);
        return std::max(0.0, std::abs(dot3(u, v)) - norm3(u) * norm3(v));
    }));
    out.push_back(check("closure", n, 0.0, [&] {
        // Extreme operands, including the clamped endpoints and large scalars.
        const LogScalar a = LogScalar::make(s.uniform(-1.0, 1.0) > 0 ? 1.0 : -1.0);
        const LogScalar b = s.value(1.0);
        const double l = s.scalar(1e6);
        const bool ok = strictly_inside(log_add(a, b)) && strictly_inside(log_sub(a, b)) &&
                        strictly_inside(log_neg(a)) && strictly_inside(log_smul(l, a)) &&
                        strictly_inside(log_smul(l, b)) && std::isfinite(phi(log_smul(l, a)));
        return ok ? 0.0 : 1.0;
    }));
    out.push_back(check("monotonicity", n, 0.0, [&] {
        double lo = s.uniform(-kValueRange, kValueRange), hi = s.uniform(-kValueRange, kValueRange);
        if (lo > hi) std::swap(lo, hi);
        if (hi - lo < 1e-6) return 0.0;
        const LogScalar a = LogScalar::make(lo), b = LogScalar::make(hi), c = s.value();
        const double l = s.uniform(1e-3, kScalarRange);
        const bool ok = log_smul(l, a) < log_smul(l, b) && log_add(a, c) < log_add(b, c);
        return ok ? 0.0 : 1.0;
    }));
    return out;
}

std::vector<CheckResult> run_reference_regressions(double tolerance) {
    std::vector<CheckResult> out;
    for (const ReferenceCase& rc : reference_cases()) {
        for (Algorithm algo : {Algorithm::a, Algorithm::b}) {
            const double want_a = algo == Algorithm::a ? rc.alpha_a : rc.alpha_b;
            const double want_b = algo == Algorithm::a ? rc.beta_a : rc.beta_b;
            CheckResult r;
            r.name = std::string(rc.name) + " " + std::string(to_string(algo));
            try {
                const LsqSolution got = solve_mmse(build_system(rc.stats(), algo));
                r.worst = std::max(std::abs(got.alpha - want_a), std::abs(got.beta - want_b));
                r.passed = r.worst <= tolerance;
                char buf[128];
                std::snprintf(buf, sizeof buf, "alpha %.4f (ref %.3f)  beta %.4f (ref %.3f)  max dev %.4f",
                              got.alpha, want_a, got.beta, want_b, r.worst);
                r.detail = buf;
            } catch (const std::exception& e) {
                r.passed = false;
                r.detail = e.what();
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace logimg
