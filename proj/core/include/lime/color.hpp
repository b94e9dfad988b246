#pragma once

#include "lime/image.hpp"

namespace lime {

/// The three planes of a BT.601 full-range YCbCr decomposition.
/// Y lies in [0,1], Cb and Cr in [-0.5, 0.5].
struct YCbCr {
    GrayMap y;
    GrayMap cb;
    GrayMap cr;
};

/// Replaces every channel value v by 1 - v.
RgbImage invert_image(const RgbImage& img);

/// ITU-R BT.601 full-range RGB -> YCbCr.
YCbCr rgb_to_ycbcr(const RgbImage& img);

/// Inverse BT.601 transform; channels clamped to [0,1].
/// Throws ArgumentError when the planes disagree on dimensions.
RgbImage ycbcr_to_rgb(const GrayMap& y, const GrayMap& cb, const GrayMap& cr);

} // namespace lime
