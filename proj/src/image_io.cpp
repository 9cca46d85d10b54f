/**
 * @file image_io.cpp
 * @brief Image file codecs
 */
#include "logimg/image_io.hpp"

#include "logimg/error.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

namespace logimg {

namespace {

constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

RasterImage from_interleaved(int w, int h, int channels, std::span<const std::uint8_t> data) {
    const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    std::vector<std::uint8_t> rgb(n * 3);
    std::vector<std::uint8_t> alpha;
    const bool gray = channels <= 2;
    const bool has_alpha = channels == 2 || channels == 4;
    if (has_alpha) alpha.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* p = data.data() + i * static_cast<std::size_t>(channels);
        if (gray) {
            rgb[3 * i] = rgb[3 * i + 1] = rgb[3 * i + 2] = p[0];
        } else {
            rgb[3 * i] = p[0];
            rgb[3 * i + 1] = p[1];
            rgb[3 * i + 2] = p[2];
        }
        if (has_alpha) alpha[i] = p[channels - 1];
    }
    RasterImage img = RasterImage::from_codes(w, h, rgb);
    if (has_alpha) img.set_alpha(std::move(alpha));
    return img;
}

// ---------------------------------------------------------------------------
// PNG, via the libpng simplified API

struct PngImage {
    png_image img{};
    PngImage() {
        img.version = PNG_IMAGE_VERSION;
    }
    ~PngImage() { png_image_free(&img); }
    PngImage(const PngImage&) = delete;
    PngImage& operator=(const PngImage&) = delete;
};

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
    PngImage png;
    if (!png_image_begin_read_from_memory(&png.img, bytes.data(), bytes.size())) {
        throw CorruptInput(std::string("PNG header: ") + png.img.message);
    }
    if (png.img.format & PNG_FORMAT_FLAG_LINEAR) {
        throw UnsupportedFormat("16-bit PNG");
    }
    if (png.img.width == 0 || png.img.height == 0 ||
        png.img.width > static_cast<png_uint_32>(std::numeric_limits<int>::max()) ||
        png.img.height > static_cast<png_uint_32>(std::numeric_limits<int>::max())) {
        throw CorruptInput("PNG dimensions");
    }
    const bool has_alpha = (png.img.format & PNG_FORMAT_FLAG_ALPHA) != 0;
    png.img.format = has_alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
    std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(png.img));
    if (!png_image_finish_read(&png.img, nullptr, buf.data(), 0, nullptr)) {
        throw CorruptInput(std::string("PNG data: ") + png.img.message);
    }
    return from_interleaved(static_cast<int>(png.img.width), static_cast<int>(png.img.height),
                            has_alpha ? 4 : 3, buf);
}

std::vector<std::uint8_t> encode_png(const RasterImage& img) {
    const bool has_alpha = img.alpha().has_value();
    const std::size_t n = img.size();
    const std::vector<std::uint8_t> rgb = img.to_codes();
    std::vector<std::uint8_t> data;
    if (has_alpha) {
        data.resize(n * 4);
        const auto& a = *img.alpha();
        for (std::size_t i = 0; i < n; ++i) {
            std::copy_n(rgb.begin() + static_cast<std::ptrdiff_t>(3 * i), 3, data.begin() + static_cast<std::ptrdiff_t>(4 * i));
            data[4 * i + 3] = a[i];
        }
    } else {
        data = rgb;
    }

    PngImage png;
    png.img.width = static_cast<png_uint_32>(img.width());
    png.img.height = static_cast<png_uint_32>(img.height());
    png.img.format = has_alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&png.img, nullptr, &size, 0, data.data(), 0, nullptr)) {
        throw Error(std::string("PNG encode: ") + png.img.message);
    }
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&png.img, out.data(), &size, 0, data.data(), 0, nullptr)) {
        throw Error(std::string("PNG encode: ") + png.img.message);
    }
    out.resize(size);
    return out;
}

// ---------------------------------------------------------------------------
// Binary PNM: P6 (RGB) and P5 (gray), maxval 255

class PnmHeaderReader {
public:
    explicit PnmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t pos() const { return pos_; }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    long read_uint() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            throw CorruptInput("PNM header");
        }
        long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_++] - '0');
            if (v > std::numeric_limits<int>::max()) throw CorruptInput("PNM header value too large");
        }
        return v;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    void expect_single_space() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw CorruptInput("PNM header");
        }
        ++pos_;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 2;
};

RasterImage decode_pnm(std::span<const std::uint8_t> bytes) {
    const int channels = bytes[1] == '6' ? 3 : 1;
    PnmHeaderReader hdr(bytes);
    const long w = hdr.read_uint();
    const long h = hdr.read_uint();
    const long maxval = hdr.read_uint();
    hdr.expect_single_space();
    if (w == 0 || h == 0) {
        throw CorruptInput("zero image dimension");
    }
    if (maxval != 255) {
        throw UnsupportedFormat("PNM maxval " + std::to_string(maxval) + " (only 255)");
    }
    const std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * channels;
    if (bytes.size() - hdr.pos() < need) {
        throw CorruptInput("truncated PNM raster");
    }
    return from_interleaved(static_cast<int>(w), static_cast<int>(h), channels, bytes.subspan(hdr.pos(), need));
}

std::vector<std::uint8_t> encode_ppm(const RasterImage& img) {
    const std::string header = "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    const std::vector<std::uint8_t> rgb = img.to_codes();
    out.insert(out.end(), rgb.begin(), rgb.end());
    return out;
}

}  // namespace

ImageFormat format_from_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".png") return ImageFormat::png;
    if (ext == ".ppm" || ext == ".pnm") return ImageFormat::ppm;
    throw UnsupportedFormat("file extension '" + ext + "'");
}

RasterImage decode_image(std::span<const std::uint8_t> bytes) {
    if (bytes.size() >= sizeof kPngMagic && std::memcmp(bytes.data(), kPngMagic, sizeof kPngMagic) == 0) {
        return decode_png(bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '6' || bytes[1] == '5')) {
        return decode_pnm(bytes);
    }
    if (bytes.empty()) {
        throw CorruptInput("empty file");
    }
    throw UnsupportedFormat("unrecognized file signature");
}

std::vector<std::uint8_t> encode_image(const RasterImage& img, ImageFormat format) {
    if (img.empty()) {
        throw InvalidArgument("cannot encode an empty image");
    }
    return format == ImageFormat::png ? encode_png(img) : encode_ppm(img);
}

RasterImage load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read error on '" + path.string() + "'");
    }
    return decode_image(bytes);
}

void save_image(const RasterImage& img, const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = encode_image(img, format_from_extension(path));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write error on '" + path.string() + "'");
    }
}

}  // namespace logimg
