#include "lime/illumination.hpp"

#include <algorithm>

namespace lime {

GrayMap initial_illumination(const RgbImage& img) {
    GrayMap out(img.height(), img.width());
    const auto& src = img.data();
    auto& dst = out.data();
    for (std::size_t p = 0; p < img.pixel_count(); ++p) {
        dst[p] = std::max({src[p * 3], src[p * 3 + 1], src[p * 3 + 2]});
    }
    return out;
}

namespace {

// Both windowed filters are separable over rows then columns; results are
// identical to the direct 2-D window evaluation.

GrayMap row_max(const GrayMap& in, int radius) {
    GrayMap out(in.height(), in.width(), 0.0, in.declared_range());
    for (int i = 0; i < in.height(); ++i) {
        for (int j = 0; j < in.width(); ++j) {
            const int lo = std::max(0, j - radius);
            const int hi = std::min(in.width() - 1, j + radius);
            double m = in.at(i, lo);
            for (int k = lo + 1; k <= hi; ++k) m = std::max(m, in.at(i, k));
            out.at(i, j) = m;
        }
    }
    return out;
}

GrayMap col_max(const GrayMap& in, int radius) {
    GrayMap out(in.height(), in.width(), 0.0, in.declared_range());
    for (int j = 0; j < in.width(); ++j) {
        for (int i = 0; i < in.height(); ++i) {
            const int lo = std::max(0, i - radius);
            const int hi = std::min(in.height() - 1, i + radius);
            double m = in.at(lo, j);
            for (int k = lo + 1; k <= hi; ++k) m = std::max(m, in.at(k, j));
            out.at(i, j) = m;
        }
    }
    return out;
}

} // namespace

GrayMap local_max_refine(const GrayMap& tmap, int radius) {
    if (radius < 0) throw ArgumentError("local_max_refine: radius must be nonnegative");
    if (radius == 0) return tmap;
    return col_max(row_max(tmap, radius), radius);
}

GrayMap local_mean_refine(const GrayMap& tmap, int radius) {
    if (radius < 0) throw ArgumentError("local_mean_refine: radius must be nonnegative");
    if (radius == 0) return tmap;

    const int h = tmap.height();
    const int w = tmap.width();

    // Row pass: clipped-window sums and counts per pixel.
    GrayMap row_sum(h, w);
    std::vector<int> row_cnt(w);
    for (int j = 0; j < w; ++j) {
        row_cnt[j] = std::min(w - 1, j + radius) - std::max(0, j - radius) + 1;
    }
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            const int lo = std::max(0, j - radius);
            const int hi = std::min(w - 1, j + radius);
            double s = 0.0;
            for (int k = lo; k <= hi; ++k) s += tmap.at(i, k);
            row_sum.at(i, j) = s;
        }
    }

    GrayMap out(h, w, 0.0, tmap.declared_range());
    for (int i = 0; i < h; ++i) {
        const int ilo = std::max(0, i - radius);
        const int ihi = std::min(h - 1, i + radius);
        for (int j = 0; j < w; ++j) {
            double s = 0.0;
            for (int k = ilo; k <= ihi; ++k) s += row_sum.at(k, j);
            const double count = static_cast<double>(ihi - ilo + 1) * row_cnt[j];
            const Interval r = tmap.declared_range();
            out.at(i, j) = std::clamp(s / count, r.lo, r.hi);
        }
    }
    return out;
}

} // namespace lime
