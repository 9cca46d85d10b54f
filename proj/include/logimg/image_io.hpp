/**
 * @file image_io.hpp
 * @brief PNG (8-bit RGB/RGBA/gray) and binary PPM/PGM reading and writing
 */
#pragma once

#include "logimg/image.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace logimg {

enum class ImageFormat { png, ppm };

/// Format from the file extension (.png, .ppm, .pnm); throws UnsupportedFormat.
ImageFormat format_from_extension(const std::filesystem::path& path);

/// Sniffs the magic bytes. Grayscale input is expanded to RGB; an alpha
/// channel is kept on the image untouched.
RasterImage decode_image(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_image(const RasterImage& img, ImageFormat format);

/// Throws IoError, CorruptInput or UnsupportedFormat.
RasterImage load_image(const std::filesystem::path& path);
/// PPM output drops the alpha plane.
void save_image(const RasterImage& img, const std::filesystem::path& path);

}  // namespace logimg
