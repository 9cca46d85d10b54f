/**
 * @file image.cpp
 * @brief RasterImage, channel codec, pointwise lifts and channel statistics
 */
#include "logimg/image.hpp"

#include "logimg/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace logimg {

LogScalar decode_channel(int code) {
    if (code < 0 || code > 255) {
        throw InvalidArgument("decode_channel: code " + std::to_string(code) + " outside 0..255");
    }
    const double u = (static_cast<double>(code) + 0.5) / 256.0;
    return LogScalar::make(2.0 * u - 1.0);
}

std::uint8_t encode_channel(LogScalar v) {
    const double c = std::round(128.0 * (v.value() + 1.0) - 0.5);
    return static_cast<std::uint8_t>(std::clamp(c, 0.0, 255.0));
}

RasterImage::RasterImage(int width, int height, ColorVec fill)
    : RasterImage(width, height,
                  std::vector<ColorVec>(width > 0 && height > 0
                                            ? static_cast<std::size_t>(width) * static_cast<std::size_t>(height)
                                            : 0,
                                        fill)) {}

RasterImage::RasterImage(int width, int height, std::vector<ColorVec> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width <= 0 || height <= 0) {
        throw InvalidArgument("RasterImage: dimensions must be positive");
    }
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw InvalidArgument("RasterImage: pixel count does not match width * height");
    }
}

RasterImage RasterImage::from_codes(int width, int height, std::span<const std::uint8_t> rgb) {
    if (width <= 0 || height <= 0) {
        throw InvalidArgument("RasterImage: dimensions must be positive");
    }
    const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (rgb.size() != n * 3) {
        throw InvalidArgument("RasterImage: code buffer size does not match width * height * 3");
    }
    std::vector<ColorVec> px(n);
    for (std::size_t i = 0; i < n; ++i) {
        px[i] = {decode_channel(rgb[3 * i]), decode_channel(rgb[3 * i + 1]), decode_channel(rgb[3 * i + 2])};
    }
    return RasterImage(width, height, std::move(px));
}

void RasterImage::set_alpha(std::vector<std::uint8_t> alpha) {
    if (alpha.size() != pixels_.size()) {
        throw InvalidArgument("RasterImage: alpha plane size does not match pixel count");
    }
    alpha_ = std::move(alpha);
}

std::vector<std::uint8_t> RasterImage::to_codes() const {
    std::vector<std::uint8_t> out(pixels_.size() * 3);
    for (std::size_t i = 0; i < pixels_.size(); ++i) {
        out[3 * i] = encode_channel(pixels_[i].r);
        out[3 * i + 1] = encode_channel(pixels_[i].g);
        out[3 * i + 2] = encode_channel(pixels_[i].b);
    }
    return out;
}

Parallelism Parallelism::hardware() {
    return {std::max(1u, std::thread::hardware_concurrency())};
}

RasterImage map_pixels(const RasterImage& f, const PixelOp& op, Parallelism par) {
    RasterImage out = f;
    const std::size_t n = f.size();
    const std::size_t workers = std::clamp<std::size_t>(par.threads, 1, std::max<std::size_t>(n, 1));

    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            out[i] = op(f[i]);
        }
    };

    if (workers == 1) {
        run(0, n);
        return out;
    }
    // Each worker owns a disjoint contiguous slice; no reduction is involved.
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(run, begin, end);
    }
    pool.clear();
    return out;
}

namespace {

// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace

double image_dot(const RasterImage& f1, const RasterImage& f2) {
    if (f1.width() != f2.width() || f1.height() != f2.height()) {
        throw InvalidArgument("image_dot: dimension mismatch");
    }
    CompensatedSum acc;
    for (std::size_t i = 0; i < f1.size(); ++i) {
        acc.add(dot3(f1[i], f2[i]));
    }
    return acc.value();
}

double image_norm(const RasterImage& f) { return std::sqrt(image_dot(f, f)); }

ImageStats compute_stats(const RasterImage& f) {
    if (f.empty()) {
        throw InvalidArgument("compute_stats: empty image");
    }
    const std::size_t n = f.size();
    ImageStats s;
    for (std::size_t c = 0; c < 3; ++c) {
        CompensatedSum total;
        double lo_val = f[0][c].value(), hi_val = lo_val;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = f[i][c].value();
            total.add(x);
            lo_val = std::min(lo_val, x);
            hi_val = std::max(hi_val, x);
        }
        // Division can round a constant channel's mean off its value by an ulp.
        const double mean = std::clamp(total.value() / static_cast<double>(n), lo_val, hi_val);

        CompensatedSum lo, hi;
        std::size_t n_lo = 0, n_hi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = f[i][c].value();
            if (x <= mean) {
                lo.add(x);
                ++n_lo;
            }
            if (x >= mean) {
                hi.add(x);
                ++n_hi;
            }
        }
        // n_lo, n_hi >= 1 because min <= mean <= max.
        const double m_lo = std::min(lo.value() / static_cast<double>(n_lo), mean);
        const double m_hi = std::max(hi.value() / static_cast<double>(n_hi), mean);

        s.v0[c] = LogScalar::make(mean);
        s.v1[c] = LogScalar::make(m_lo);
        s.v2[c] = LogScalar::make(m_hi);
        s.lower_counts[c] = n_lo;
        s.upper_counts[c] = n_hi;
    }
    return s;
}

}  // namespace logimg
