#include "lime/color.hpp"

#include <algorithm>

namespace lime {

namespace {

// BT.601 luma coefficients.
constexpr double kKr = 0.299;
constexpr double kKg = 0.587;
constexpr double kKb = 0.114;

} // namespace

RgbImage invert_image(const RgbImage& img) {
    RgbImage out(img.height(), img.width());
    const auto& src = img.data();
    auto& dst = out.data();
    for (std::size_t k = 0; k < src.size(); ++k) {
        dst[k] = 1.0 - src[k];
    }
    return out;
}

YCbCr rgb_to_ycbcr(const RgbImage& img) {
    YCbCr out{GrayMap(img.height(), img.width(), 0.0, {0.0, 1.0}),
              GrayMap(img.height(), img.width(), 0.0, {-0.5, 0.5}),
              GrayMap(img.height(), img.width(), 0.0, {-0.5, 0.5})};
    const auto& src = img.data();
    auto& y = out.y.data();
    auto& cb = out.cb.data();
    auto& cr = out.cr.data();
    for (std::size_t p = 0; p < img.pixel_count(); ++p) {
        const double r = src[p * 3];
        const double g = src[p * 3 + 1];
        const double b = src[p * 3 + 2];
        const double luma = kKr * r + kKg * g + kKb * b;
        y[p] = std::clamp(luma, 0.0, 1.0);
        cb[p] = std::clamp((b - luma) / (2.0 * (1.0 - kKb)), -0.5, 0.5);
        cr[p] = std::clamp((r - luma) / (2.0 * (1.0 - kKr)), -0.5, 0.5);
    }
    return out;
}

RgbImage ycbcr_to_rgb(const GrayMap& y, const GrayMap& cb, const GrayMap& cr) {
    if (!y.same_shape(cb) || !y.same_shape(cr)) {
        throw ArgumentError("ycbcr_to_rgb: planes must share dimensions");
    }
    RgbImage out(y.height(), y.width());
    auto& dst = out.data();
    const auto& yd = y.data();
    const auto& cbd = cb.data();
    const auto& crd = cr.data();
    for (std::size_t p = 0; p < yd.size(); ++p) {
        const double r = yd[p] + 2.0 * (1.0 - kKr) * crd[p];
        const double b = yd[p] + 2.0 * (1.0 - kKb) * cbd[p];
        const double g = (yd[p] - kKr * r - kKb * b) / kKg;
        dst[p * 3] = std::clamp(r, 0.0, 1.0);
        dst[p * 3 + 1] = std::clamp(g, 0.0, 1.0);
        dst[p * 3 + 2] = std::clamp(b, 0.0, 1.0);
    }
    return out;
}

} // namespace lime
