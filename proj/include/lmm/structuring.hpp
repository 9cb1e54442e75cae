#pragma once

#include "lmm/image.hpp"

#include <optional>
#include <vector>

namespace lmm {

/// One sample of a structuring function: offset from the origin and value.
struct Tap {
    int dx = 0;
    int dy = 0;
    double value = 0.0;

    bool operator==(const Tap&) const = default;
};

/// Structuring function with finite support. Outside the listed taps the
/// function is -inf; offsets are relative to the origin (0, 0).
class StructuringFunction {
public:
    StructuringFunction() = default;
    /// Throws DomainError on an empty support, duplicate offsets or a -inf
    /// or NaN value.
    explicit StructuringFunction(std::vector<Tap> taps);

    /// Flat structuring element (all values 0) on the given offsets.
    static StructuringFunction flat(std::vector<std::pair<int, int>> offsets);

    const std::vector<Tap>& taps() const noexcept { return taps_; }
    std::size_t size() const noexcept { return taps_.size(); }
    bool is_flat() const noexcept { return flat_; }

    double sup() const noexcept;
    double inf() const noexcept;

    /// Value at an offset, or nullopt when the offset is outside the support.
    std::optional<double> at(int dx, int dy) const noexcept;
    bool contains(int dx, int dy) const noexcept { return at(dx, dy).has_value(); }

    /// Bounding box of the support: {min_dx, min_dy, max_dx, max_dy}.
    struct Box {
        int min_dx, min_dy, max_dx, max_dy;
    };
    Box bounding_box() const noexcept;

    /// Same values on the same offsets (order-insensitive).
    bool same_as(const StructuringFunction& other) const;

    /// Restriction to `sub`'s offsets, which must be a subset with equal
    /// values; throws GeometryError otherwise.
    void require_restriction(const StructuringFunction& sub) const;

private:
    std::vector<Tap> taps_;
    bool flat_ = false;
};

/// b̄(x) = b(-x).
StructuringFunction reflect(const StructuringFunction& b);

/// Pointwise ⊟b on the values, support unchanged. Requires values < M.
StructuringFunction lip_negate_sf(const StructuringFunction& b, double M = kDefaultM);

/// Same support, every value replaced by `value`.
StructuringFunction with_constant_value(const StructuringFunction& b, double value);

/// Disk {dx² + dy² <= r²} with constant value (0 gives the flat disk).
/// Radius 1 yields the 4-connected cross.
StructuringFunction make_disk(int radius, double value = 0.0);

/// Hemisphere on the disk of radius r: base + scale · sqrt(r² - d²), so the
/// centre value is base + scale · r. Requires the peak to stay below M.
StructuringFunction make_half_sphere(int radius, double base, double scale = 1.0, double M = kDefaultM);

/// Annulus {inner² <= d² <= outer²} with constant value; inner < outer.
StructuringFunction make_ring(int inner, int outer, double value);

/// Gaussian peak on {d <= gauss_radius} plus a surrounding constant ring on
/// {ring_inner <= d <= ring_outer}.
struct GaussianRingParams {
    int gauss_radius = 3;
    double sigma = 1.5;
    double peak = 60.0;
    double base = 0.0;
    int ring_inner = 6;
    int ring_outer = 7;
    double ring_value = 40.0;
};
StructuringFunction make_gaussian_ring(const GaussianRingParams& p, double M = kDefaultM);

/// Horizontal line of `length` taps starting at the origin.
StructuringFunction make_hline(int length, double value = 0.0);

/// Structuring function read from an image: every sample > -inf becomes a
/// tap, offsets measured from (origin_x, origin_y).
StructuringFunction sf_from_image(const GreyImage& img, int origin_x, int origin_y);

/// Rasterizes a structuring function into an image spanning its bounding
/// box, -inf off-support. Returns the image plus the origin position.
struct SfRaster {
    GreyImage image;
    int origin_x = 0;
    int origin_y = 0;
};
SfRaster sf_to_image(const StructuringFunction& b, double M = kDefaultM);

}  // namespace lmm
