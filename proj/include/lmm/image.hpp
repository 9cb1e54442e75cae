#pragma once

#include "lmm/lip.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lmm {

/// Row-major grid of extended grey values in [-inf, M].
///
/// The classical (unbounded) operators reuse this type with values on the
/// whole extended real line; `M` is then only carried along.
class GreyImage {
public:
    GreyImage() = default;
    GreyImage(int width, int height, double fill = 0.0, double M = kDefaultM);
    GreyImage(int width, int height, std::vector<double> samples, double M = kDefaultM);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    double M() const noexcept { return M_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    bool contains(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    double operator()(int x, int y) const noexcept { return data_[index(x, y)]; }
    double& operator()(int x, int y) noexcept { return data_[index(x, y)]; }

    std::span<const double> samples() const noexcept { return data_; }
    std::span<double> samples() noexcept { return data_; }
    std::span<const double> row(int y) const noexcept {
        return {data_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
    }
    std::span<double> row(int y) noexcept {
        return {data_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
    }

    /// True when every sample lies in [-inf, M] (no NaN, nothing above M).
    bool within_bound() const noexcept;
    bool same_shape(const GreyImage& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    double M_ = kDefaultM;
    std::vector<double> data_;
};

/// One byte per pixel; any non-zero value is "set".
class BinaryMask {
public:
    BinaryMask() = default;
    BinaryMask(int width, int height, bool fill = false)
        : width_(width), height_(height),
          bits_(static_cast<std::size_t>(width) * height, fill ? 1 : 0) {}

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return bits_.size(); }

    bool contains(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }
    bool operator()(int x, int y) const noexcept { return bits_[static_cast<std::size_t>(y) * width_ + x] != 0; }
    void set(int x, int y, bool v) noexcept { bits_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0; }
    bool at(std::size_t i) const noexcept { return bits_[i] != 0; }
    void set(std::size_t i, bool v) noexcept { bits_[i] = v ? 1 : 0; }

    std::size_t count() const noexcept;
    bool matches(const GreyImage& img) const noexcept {
        return width_ == img.width() && height_ == img.height();
    }
    bool same_shape(const BinaryMask& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }
    bool operator==(const BinaryMask&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Interleaved 8-bit-range colour image; channel values are stored as
/// doubles so that darkening and luminance operate without conversions.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<double> r, g, b;

    RgbImage() = default;
    RgbImage(int w, int h, double fill = 0.0)
        : width(w), height(h),
          r(static_cast<std::size_t>(w) * h, fill), g(r), b(r) {}

    std::size_t size() const noexcept { return r.size(); }
};

/// Pointwise f* = ⊟f. M maps to -inf and -inf maps to M.
GreyImage negate_image(const GreyImage& f);

/// Pointwise f ⊞ c for a constant c < M.
GreyImage lip_add_constant(const GreyImage& f, double c);

/// Pointwise f ⊞ g (g may vary across the domain, e.g. a lighting drift).
GreyImage lip_add_images(const GreyImage& f, const GreyImage& g);

/// Pointwise xi and xi_inv.
GreyImage xi_image(const GreyImage& f);
GreyImage xi_inv_image(const GreyImage& v, double M);

/// Luminance of a colour image in the LIP scale.
GreyImage luminance_image(const RgbImage& rgb, double M = kDefaultM);

/// Maximum absolute pointwise difference. Equal infinities count as 0,
/// mismatched infinities as +inf.
double max_abs_diff(const GreyImage& a, const GreyImage& b);

}  // namespace lmm
