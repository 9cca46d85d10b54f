/**
 * @file logspace.cpp
 * @brief Scalar and color-vector logarithmic algebra
 */
#include "logimg/logspace.hpp"

#include "logimg/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace logimg {

namespace {

constexpr double kLo = -1.0 + kEps;
constexpr double kHi = 1.0 - kEps;

inline double clamp_open(double v) { return std::clamp(v, kLo, kHi); }

}  // namespace

LogScalar LogScalar::make(double v) {
    if (!std::isfinite(v)) {
        throw InvalidArgument("LogScalar: non-finite value");
    }
    return LogScalar(clamp_open(v));
}

LogScalar log_add(LogScalar a, LogScalar b) {
    const double x = a.value(), y = b.value();
    return LogScalar::make((x + y) / (1.0 + x * y));
}

LogScalar log_sub(LogScalar a, LogScalar b) {
    const double x = a.value(), y = b.value();
    return LogScalar::make((x - y) / (1.0 - x * y));
}

LogScalar log_neg(LogScalar a) { return LogScalar::make(-a.value()); }

LogScalar log_smul(double lambda, LogScalar a) {
    if (!std::isfinite(lambda)) {
        throw InvalidArgument("scalar multiplication: non-finite lambda");
    }
    // Same value as ((1+a)^l - (1-a)^l) / ((1+a)^l + (1-a)^l) without the
    // overflow of the power form.
    return LogScalar::make(std::tanh(lambda * std::atanh(a.value())));
}

double phi(LogScalar a) { return std::atanh(a.value()); }

LogScalar phi_inv(double y) {
    if (!std::isfinite(y)) {
        throw InvalidArgument("phi_inv: non-finite argument");
    }
    return LogScalar::make(std::tanh(y));
}

ColorVec ColorVec::make(double r, double g, double b) {
    return {LogScalar::make(r), LogScalar::make(g), LogScalar::make(b)};
}

ColorVec vec_add(const ColorVec& u, const ColorVec& v) {
    return {log_add(u.r, v.r), log_add(u.g, v.g), log_add(u.b, v.b)};
}

ColorVec vec_sub(const ColorVec& u, const ColorVec& v) {
    return {log_sub(u.r, v.r), log_sub(u.g, v.g), log_sub(u.b, v.b)};
}

ColorVec vec_neg(const ColorVec& v) { return {log_neg(v.r), log_neg(v.g), log_neg(v.b)}; }

ColorVec vec_smul(double lambda, const ColorVec& v) {
    return {log_smul(lambda, v.r), log_smul(lambda, v.g), log_smul(lambda, v.b)};
}

PhiVec phi(const ColorVec& v) { return {phi(v.r), phi(v.g), phi(v.b)}; }

ColorVec phi_inv(const PhiVec& p) { return {phi_inv(p.r), phi_inv(p.g), phi_inv(p.b)}; }

double dot3(const ColorVec& u, const ColorVec& v) {
    const PhiVec a = phi(u), b = phi(v);
    return a.r * b.r + a.g * b.g + a.b * b.b;
}

double norm3(const ColorVec& v) { return std::sqrt(dot3(v, v)); }

const ColorVec& unit_translation() {
    static const ColorVec u = ColorVec::splat(std::tanh(1.0));
    return u;
}

}  // namespace logimg
