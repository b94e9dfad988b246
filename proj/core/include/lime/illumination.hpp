#pragma once

#include "lime/image.hpp"

namespace lime {

/// Per-pixel maximum over the R, G, B channels; the initial illumination map.
GrayMap initial_illumination(const RgbImage& img);

/// Windowed maximum over a (2*radius+1)^2 neighborhood, clipped at borders.
GrayMap local_max_refine(const GrayMap& tmap, int radius);

/// Windowed arithmetic mean over the clipped neighborhood; the divisor is
/// the actual in-image window size.
GrayMap local_mean_refine(const GrayMap& tmap, int radius);

} // namespace lime
