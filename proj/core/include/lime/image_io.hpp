#pragma once

#include <string>

#include "lime/image.hpp"

namespace lime {

/// Reads an 8- or 16-bit RGB image (PNG or binary PPM), normalizing integer
/// samples by the sample maximum. Gray images are promoted to RGB by channel
/// replication; an alpha channel is discarded.
/// Throws IoError (unreadable file) or FormatError (unsupported content).
RgbImage load_image(const std::string& path);

/// Writes img as an 8-bit RGB PNG. Channels are clamped to [0,1] and
/// quantized by round(v * 255), half away from zero.
/// Throws IoError when the path is unwritable.
void save_image(const RgbImage& img, const std::string& path);

/// Writes a scalar map as an 8-bit grayscale PNG, treating values as [0,1].
void save_gray_png(const GrayMap& map, const std::string& path);

/// Writes a scalar map as an 8-bit grayscale PNG after mapping its declared
/// range linearly onto [0,1]. Used for debug dumps of weight and
/// illumination maps.
void save_gray_png_normalized(const GrayMap& map, const std::string& path);

/// Reads an 8-bit grayscale (or gray-promoted color) PNG as a [0,1] map.
GrayMap load_gray_png(const std::string& path);

} // namespace lime
