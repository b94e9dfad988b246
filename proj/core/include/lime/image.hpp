#pragma once

#include <vector>

#include "lime/errors.hpp"

namespace lime {

/// Closed interval a scalar field declares its values to lie in.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double v) const { return v >= lo && v <= hi; }
};

/// H x W scalar field, row-major, with a declared value range.
class GrayMap {
public:
    GrayMap() = default;
    GrayMap(int height, int width, double fill = 0.0, Interval range = {0.0, 1.0});

    int height() const { return height_; }
    int width() const { return width_; }
    Interval declared_range() const { return range_; }
    void set_declared_range(Interval range) { range_ = range; }

    double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * width_ + j]; }
    double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * width_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }
    std::size_t size() const { return data_.size(); }

    bool same_shape(const GrayMap& other) const {
        return height_ == other.height_ && width_ == other.width_;
    }
    /// True when every value lies within the declared range.
    bool values_in_range() const;

private:
    int height_ = 0;
    int width_ = 0;
    Interval range_{0.0, 1.0};
    std::vector<double> data_;
};

/// H x W x 3 image with unit-interval channels, interleaved row-major.
class RgbImage {
public:
    RgbImage() = default;
    RgbImage(int height, int width, double fill = 0.0);

    int height() const { return height_; }
    int width() const { return width_; }

    double at(int i, int j, int c) const {
        return data_[(static_cast<std::size_t>(i) * width_ + j) * 3 + c];
    }
    double& at(int i, int j, int c) {
        return data_[(static_cast<std::size_t>(i) * width_ + j) * 3 + c];
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(height_) * width_; }

    bool same_shape(const RgbImage& other) const {
        return height_ == other.height_ && width_ == other.width_;
    }
    bool same_shape(const GrayMap& map) const {
        return height_ == map.height() && width_ == map.width();
    }
    bool values_in_range() const;

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<double> data_;
};

/// All tunables of the enhancement pipeline.
struct EnhanceParams {
    double alpha = 0.15;      ///< balance between fidelity and smoothness
    double sigma = 2.0;       ///< Gaussian standard deviation, pixels
    double epsilon = 1e-3;    ///< small positive stabilizer
    double gamma = 0.8;       ///< illumination gamma exponent
    double solver_tol = 1e-6; ///< relative residual threshold
    int solver_max_iter = 5000;
    int kernel_radius = 4;    ///< Gaussian truncation radius, pixels

    /// Throws ArgumentError when any field violates its constraint.
    void validate() const;
};

/// Truncation radius used when only sigma is given: ceil(2*sigma), at least 1.
int default_kernel_radius(double sigma);

} // namespace lime
