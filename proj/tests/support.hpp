#pragma once

#include "lmm/image.hpp"
#include "lmm/structuring.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace lmm::test {

inline GreyImage random_image(std::mt19937_64& rng, int w, int h, double lo = 0.0, double hi = 255.0,
                              double M = kDefaultM) {
    std::uniform_real_distribution<double> d(lo, hi);
    GreyImage img(w, h, 0.0, M);
    for (double& v : img.samples()) v = d(rng);
    return img;
}

inline GreyImage random_integer_image(std::mt19937_64& rng, int w, int h, int lo = 0, int hi = 255,
                                      double M = kDefaultM) {
    std::uniform_int_distribution<int> d(lo, hi);
    GreyImage img(w, h, 0.0, M);
    for (double& v : img.samples()) v = d(rng);
    return img;
}

/// Random support inside [-radius, radius]^2 (origin not required) with
/// values drawn from [lo, hi].
inline StructuringFunction random_sf(std::mt19937_64& rng, int radius = 2, double lo = -40.0, double hi = 120.0,
                                     std::size_t min_taps = 1) {
    std::uniform_int_distribution<int> off(-radius, radius);
    const int side = 2 * radius + 1;
    std::uniform_int_distribution<int> count(static_cast<int>(min_taps), side * side);
    std::uniform_real_distribution<double> val(lo, hi);
    const int n = count(rng);
    std::set<std::pair<int, int>> seen;
    std::vector<Tap> taps;
    while (static_cast<int>(taps.size()) < n) {
        const int dx = off(rng), dy = off(rng);
        if (seen.insert({dx, dy}).second) taps.push_back({dx, dy, val(rng)});
    }
    return StructuringFunction(std::move(taps));
}

inline StructuringFunction random_flat_sf(std::mt19937_64& rng, int radius = 2) {
    return with_constant_value(random_sf(rng, radius), 0.0);
}

/// Copy of the samples; safe to iterate over when `img` is a temporary.
inline std::vector<double> values(const GreyImage& img) { return {img.samples().begin(), img.samples().end()}; }

/// Samples at least `margin` pixels away from every border, i.e. where a
/// probe of that reach sees no off-grid tap.
inline std::vector<double> interior(const GreyImage& img, int margin) {
    std::vector<double> v;
    for (int y = margin; y < img.height() - margin; ++y)
        for (int x = margin; x < img.width() - margin; ++x) v.push_back(img(x, y));
    return v;
}

/// max |a - b| with equal infinities counting as zero.
inline double diff(const GreyImage& a, const GreyImage& b) { return max_abs_diff(a, b); }

inline bool identical(const GreyImage& a, const GreyImage& b) {
    if (!a.same_shape(b)) return false;
    auto x = a.samples(), y = b.samples();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] == y[i])) return false;
    return true;
}

}  // namespace lmm::test
