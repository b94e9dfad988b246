#include "lime/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <vector>

namespace lime {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::uint8_t quantize8(double v) {
    const double c = std::clamp(v, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::lround(c * 255.0));
}

// ---------------------------------------------------------------------------
// PNG
// ---------------------------------------------------------------------------

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngReader() {
        png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
    }
    ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngWriter() {
        png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
    }
    ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

RgbImage load_png(std::FILE* fp, const std::string& path) {
    PngReader reader;
    if (!reader.png || !reader.info) throw IoError("png: out of memory");

    // Declared before setjmp so the buffers survive a longjmp landing.
    std::vector<std::uint8_t> row;
    RgbImage out;

    if (setjmp(png_jmpbuf(reader.png))) {
        throw FormatError("png: failed to decode " + path);
    }

    png_init_io(reader.png, fp);
    png_read_info(reader.png, reader.info);

    const png_uint_32 width = png_get_image_width(reader.png, reader.info);
    const png_uint_32 height = png_get_image_height(reader.png, reader.info);
    const int bit_depth = png_get_bit_depth(reader.png, reader.info);
    const int color_type = png_get_color_type(reader.png, reader.info);

    if (width < 1 || height < 1) throw FormatError("png: empty image in " + path);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(reader.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(reader.png);
    }
    if (png_get_valid(reader.png, reader.info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(reader.png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(reader.png);
    }
    png_set_strip_alpha(reader.png);
    png_set_interlace_handling(reader.png);
    png_read_update_info(reader.png, reader.info);

    const int out_depth = png_get_bit_depth(reader.png, reader.info);
    if (out_depth != 8 && out_depth != 16) {
        throw FormatError("png: unsupported bit depth in " + path);
    }
    if (png_get_channels(reader.png, reader.info) != 3) {
        throw FormatError("png: unsupported channel layout in " + path);
    }

    const double max_value = out_depth == 8 ? 255.0 : 65535.0;
    const std::size_t row_bytes = png_get_rowbytes(reader.png, reader.info);
    row.resize(row_bytes);
    out = RgbImage(static_cast<int>(height), static_cast<int>(width));

    for (png_uint_32 i = 0; i < height; ++i) {
        png_read_row(reader.png, row.data(), nullptr);
        double* dst = out.data().data() + static_cast<std::size_t>(i) * width * 3;
        if (out_depth == 8) {
            for (std::size_t k = 0; k < static_cast<std::size_t>(width) * 3; ++k) {
                dst[k] = row[k] / max_value;
            }
        } else {
            // 16-bit PNG samples are big-endian in the stream.
            for (std::size_t k = 0; k < static_cast<std::size_t>(width) * 3; ++k) {
                const unsigned hi = row[2 * k];
                const unsigned lo = row[2 * k + 1];
                dst[k] = ((hi << 8) | lo) / max_value;
            }
        }
    }
    png_read_end(reader.png, nullptr);
    return out;
}

void write_png_bytes(const std::string& path, int height, int width, int channels,
                     const std::vector<std::uint8_t>& bytes) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open for writing: " + path);

    PngWriter writer;
    if (!writer.png || !writer.info) throw IoError("png: out of memory");

    if (setjmp(png_jmpbuf(writer.png))) {
        throw IoError("png: failed to write " + path);
    }

    png_init_io(writer.png, fp.get());
    const int color_type = channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY;
    png_set_IHDR(writer.png, writer.info, width, height, 8, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(writer.png, writer.info);
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (int i = 0; i < height; ++i) {
        png_write_row(writer.png, const_cast<png_bytep>(bytes.data() + i * stride));
    }
    png_write_end(writer.png, nullptr);
}

// ---------------------------------------------------------------------------
// Binary PPM (P6)
// ---------------------------------------------------------------------------

int ppm_read_value(std::FILE* fp, const std::string& path) {
    // Skips whitespace and '#' comments, then parses a decimal value.
    int c = std::fgetc(fp);
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = std::fgetc(fp);
        } else if (std::isspace(c)) {
            c = std::fgetc(fp);
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) throw FormatError("ppm: malformed header in " + path);
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 30) throw FormatError("ppm: header value out of range in " + path);
        c = std::fgetc(fp);
    }
    return static_cast<int>(value);
}

RgbImage load_ppm(std::FILE* fp, const std::string& path) {
    if (std::fgetc(fp) != 'P' || std::fgetc(fp) != '6') {
        throw FormatError("ppm: not a P6 file: " + path);
    }
    const int width = ppm_read_value(fp, path);
    const int height = ppm_read_value(fp, path);
    const int max_value = ppm_read_value(fp, path);
    if (width < 1 || height < 1) throw FormatError("ppm: empty image in " + path);
    if (max_value < 1 || max_value > 65535) {
        throw FormatError("ppm: unsupported sample maximum in " + path);
    }
    // The header terminator is the single whitespace byte just consumed.

    const std::size_t samples = static_cast<std::size_t>(width) * height * 3;
    const int bytes_per_sample = max_value > 255 ? 2 : 1;
    std::vector<std::uint8_t> raw(samples * bytes_per_sample);
    if (std::fread(raw.data(), 1, raw.size(), fp) != raw.size()) {
        throw FormatError("ppm: truncated pixel data in " + path);
    }

    RgbImage out(height, width);
    auto& dst = out.data();
    if (bytes_per_sample == 1) {
        for (std::size_t k = 0; k < samples; ++k) {
            dst[k] = raw[k] / static_cast<double>(max_value);
        }
    } else {
        // Two-byte PPM samples are big-endian.
        for (std::size_t k = 0; k < samples; ++k) {
            const unsigned v = (static_cast<unsigned>(raw[2 * k]) << 8) | raw[2 * k + 1];
            if (v > static_cast<unsigned>(max_value)) {
                throw FormatError("ppm: sample exceeds declared maximum in " + path);
            }
            dst[k] = v / static_cast<double>(max_value);
        }
    }
    return out;
}

} // namespace

RgbImage load_image(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open: " + path);

    std::uint8_t magic[8] = {};
    const std::size_t got = std::fread(magic, 1, sizeof(magic), fp.get());
    std::rewind(fp.get());

    if (got >= 2 && magic[0] == 'P' && magic[1] == '6') {
        return load_ppm(fp.get(), path);
    }
    if (got >= 8 && png_sig_cmp(magic, 0, 8) == 0) {
        return load_png(fp.get(), path);
    }
    throw FormatError("unsupported image format: " + path);
}

void save_image(const RgbImage& img, const std::string& path) {
    std::vector<std::uint8_t> bytes(img.data().size());
    for (std::size_t k = 0; k < bytes.size(); ++k) {
        bytes[k] = quantize8(img.data()[k]);
    }
    write_png_bytes(path, img.height(), img.width(), 3, bytes);
}

void save_gray_png(const GrayMap& map, const std::string& path) {
    std::vector<std::uint8_t> bytes(map.size());
    for (std::size_t k = 0; k < bytes.size(); ++k) {
        bytes[k] = quantize8(map.data()[k]);
    }
    write_png_bytes(path, map.height(), map.width(), 1, bytes);
}

void save_gray_png_normalized(const GrayMap& map, const std::string& path) {
    const Interval range = map.declared_range();
    const double span = range.hi - range.lo;
    std::vector<std::uint8_t> bytes(map.size());
    for (std::size_t k = 0; k < bytes.size(); ++k) {
        const double v = span > 0.0 ? (map.data()[k] - range.lo) / span : 0.0;
        bytes[k] = quantize8(v);
    }
    write_png_bytes(path, map.height(), map.width(), 1, bytes);
}

GrayMap load_gray_png(const std::string& path) {
    const RgbImage rgb = load_image(path);
    GrayMap out(rgb.height(), rgb.width());
    for (std::size_t p = 0; p < rgb.pixel_count(); ++p) {
        out.data()[p] = rgb.data()[p * 3];
    }
    return out;
}

} // namespace lime
