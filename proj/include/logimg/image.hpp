/**
 * @file image.hpp
 * @brief Discrete color images over the logarithmic color cube
 */
#pragma once

#include "logimg/logspace.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace logimg {

/// 8-bit code -> (-1,1): (c + 0.5) / 256 mapped by v = 2u - 1.
LogScalar decode_channel(int code);
/// Inverse of decode_channel, saturating at 0 and 255.
std::uint8_t encode_channel(LogScalar v);

/// Row-major W x H grid of ColorVec. An optional 8-bit alpha plane is
/// carried along unchanged by every pixel operation.
class RasterImage {
public:
    RasterImage() = default;
    RasterImage(int width, int height, ColorVec fill = kTheta);
    RasterImage(int width, int height, std::vector<ColorVec> pixels);

    static RasterImage from_codes(int width, int height, std::span<const std::uint8_t> rgb);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }
    int source_depth() const { return 8; }

    const ColorVec& at(int x, int y) const { return pixels_[index(x, y)]; }
    ColorVec& at(int x, int y) { return pixels_[index(x, y)]; }
    const ColorVec& operator[](std::size_t i) const { return pixels_[i]; }
    ColorVec& operator[](std::size_t i) { return pixels_[i]; }

    std::span<const ColorVec> pixels() const { return pixels_; }

    const std::optional<std::vector<std::uint8_t>>& alpha() const { return alpha_; }
    void set_alpha(std::vector<std::uint8_t> alpha);
    void clear_alpha() { alpha_.reset(); }

    /// Interleaved RGB codes, width * height * 3 bytes.
    std::vector<std::uint8_t> to_codes() const;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<ColorVec> pixels_;
    std::optional<std::vector<std::uint8_t>> alpha_;
};

/// Worker count for pixelwise operations. Output never depends on it.
struct Parallelism {
    unsigned threads = 1;

    static Parallelism sequential() { return {1}; }
    static Parallelism hardware();
};

using PixelOp = std::function<ColorVec(const ColorVec&)>;

RasterImage map_pixels(const RasterImage& f, const PixelOp& op,
                       Parallelism par = Parallelism::sequential());

/// Sum over pixels of dot3; throws InvalidArgument on size mismatch.
double image_dot(const RasterImage& f1, const RasterImage& f2);
double image_norm(const RasterImage& f);

/// Channel means over the whole image (v0), over the pixels at or below the
/// mean (v1) and over the pixels at or above it (v2). A pixel equal to the
/// mean is counted in both partitions.
struct ImageStats {
    ColorVec v0, v1, v2;
    std::array<std::size_t, 3> lower_counts{};
    std::array<std::size_t, 3> upper_counts{};
};

/// Throws InvalidArgument on an empty image.
ImageStats compute_stats(const RasterImage& f);

}  // namespace logimg
