/**
 * @file logspace.hpp
 * @brief Bounded logarithmic algebra on (-1,1) and the color cube (-1,1)^3
 *
 * Addition, subtraction and real scalar multiplication turn the open
 * interval (-1,1) into a real vector space isomorphic to R through
 * phi(x) = arctanh(x). The color space applies the same operations to each
 * of the r, g, b channels and inherits a Euclidean structure from phi.
 *
 *   a (+) b   = (a + b) / (1 + a b)
 *   a (-) b   = (a - b) / (1 - a b)
 *   l (x) a   = tanh(l * arctanh(a))
 *   (u | v)   = sum_i phi(u_i) phi(v_i)
 *
 * Every result is clamped to [-1 + kEps, 1 - kEps] so phi stays finite.
 */
#pragma once

#include <array>
#include <cstddef>

namespace logimg {

inline constexpr double kEps = 1e-12;

/// A value strictly inside (-1, 1).
class LogScalar {
public:
    constexpr LogScalar() = default;

    /// Clamps into [-1 + kEps, 1 - kEps]; throws InvalidArgument on NaN/inf.
    static LogScalar make(double v);

    constexpr double value() const { return v_; }
    constexpr explicit operator double() const { return v_; }

    friend constexpr bool operator==(LogScalar, LogScalar) = default;
    friend constexpr auto operator<=>(LogScalar, LogScalar) = default;

private:
    constexpr explicit LogScalar(double v) : v_(v) {}
    double v_ = 0.0;
};

LogScalar log_add(LogScalar a, LogScalar b);
LogScalar log_sub(LogScalar a, LogScalar b);
LogScalar log_neg(LogScalar a);
/// Throws InvalidArgument when lambda is not finite.
LogScalar log_smul(double lambda, LogScalar a);

double phi(LogScalar a);
/// Throws InvalidArgument when y is not finite.
LogScalar phi_inv(double y);

/// A point of the color cube.
struct ColorVec {
    LogScalar r, g, b;

    static ColorVec make(double r, double g, double b);
    static ColorVec splat(double v) { return make(v, v, v); }

    LogScalar operator[](std::size_t i) const { return i == 0 ? r : (i == 1 ? g : b); }
    LogScalar& operator[](std::size_t i) { return i == 0 ? r : (i == 1 ? g : b); }

    friend bool operator==(const ColorVec&, const ColorVec&) = default;
};

/// Arctanh coordinates of a ColorVec.
struct PhiVec {
    double r = 0.0, g = 0.0, b = 0.0;

    double operator[](std::size_t i) const { return i == 0 ? r : (i == 1 ? g : b); }
};

ColorVec vec_add(const ColorVec& u, const ColorVec& v);
ColorVec vec_sub(const ColorVec& u, const ColorVec& v);
ColorVec vec_neg(const ColorVec& v);
ColorVec vec_smul(double lambda, const ColorVec& v);

PhiVec phi(const ColorVec& v);
ColorVec phi_inv(const PhiVec& p);

double dot3(const ColorVec& u, const ColorVec& v);
double norm3(const ColorVec& v);

/// Neutral element (0, 0, 0).
inline const ColorVec kTheta{};

/// (tanh 1, tanh 1, tanh 1); phi maps it to (1, 1, 1).
const ColorVec& unit_translation();

}  // namespace logimg
