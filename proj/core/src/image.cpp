#include "lime/image.hpp"

#include <cmath>

namespace lime {

GrayMap::GrayMap(int height, int width, double fill, Interval range)
    : height_(height), width_(width), range_(range) {
    if (height < 1 || width < 1) {
        throw ArgumentError("GrayMap dimensions must be at least 1x1");
    }
    data_.assign(static_cast<std::size_t>(height) * width, fill);
}

bool GrayMap::values_in_range() const {
    for (double v : data_) {
        if (!std::isfinite(v) || !range_.contains(v)) return false;
    }
    return true;
}

RgbImage::RgbImage(int height, int width, double fill) : height_(height), width_(width) {
    if (height < 1 || width < 1) {
        throw ArgumentError("RgbImage dimensions must be at least 1x1");
    }
    data_.assign(static_cast<std::size_t>(height) * width * 3, fill);
}

bool RgbImage::values_in_range() const {
    for (double v : data_) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) return false;
    }
    return true;
}

void EnhanceParams::validate() const {
    if (alpha < 0.0) throw ArgumentError("alpha must be nonnegative");
    if (sigma <= 0.0) throw ArgumentError("sigma must be positive");
    if (epsilon <= 0.0) throw ArgumentError("epsilon must be positive");
    if (gamma <= 0.0) throw ArgumentError("gamma must be positive");
    if (solver_tol <= 0.0) throw ArgumentError("solver_tol must be positive");
    if (solver_max_iter < 1) throw ArgumentError("solver_max_iter must be at least 1");
    if (kernel_radius < 1) throw ArgumentError("kernel_radius must be at least 1");
}

int default_kernel_radius(double sigma) {
    int r = static_cast<int>(std::ceil(2.0 * sigma));
    return r < 1 ? 1 : r;
}

} // namespace lime
