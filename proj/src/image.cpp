#include "lmm/image.hpp"

#include "lmm/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lmm {
namespace {

void check_dims(int width, int height) {
    if (width <= 0 || height <= 0) throw DomainError("image dimensions must be positive");
}

}  // namespace

GreyImage::GreyImage(int width, int height, double fill, double M)
    : width_(width), height_(height), M_(M) {
    check_dims(width, height);
    data_.assign(static_cast<std::size_t>(width) * height, fill);
}

GreyImage::GreyImage(int width, int height, std::vector<double> samples, double M)
    : width_(width), height_(height), M_(M), data_(std::move(samples)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height)
        throw DomainError("sample count " + std::to_string(data_.size()) + " does not match " +
                          std::to_string(width) + "x" + std::to_string(height));
}

bool GreyImage::within_bound() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [this](double v) { return !std::isnan(v) && v <= M_; });
}

std::size_t BinaryMask::count() const noexcept {
    return static_cast<std::size_t>(std::count_if(bits_.begin(), bits_.end(), [](auto v) { return v != 0; }));
}

GreyImage negate_image(const GreyImage& f) {
    GreyImage out = f;
    const double M = f.M();
    for (double& v : out.samples()) v = lip::negate_extended(v, M);
    return out;
}

GreyImage lip_add_constant(const GreyImage& f, double c) {
    const double M = f.M();
    if (!(c < M)) throw DomainError("LIP-added constant must be < M");
    GreyImage out = f;
    for (double& v : out.samples()) v = lip::add_dilation(v, c, M);
    return out;
}

GreyImage lip_add_images(const GreyImage& f, const GreyImage& g) {
    if (!f.same_shape(g)) throw DomainError("image shapes differ");
    if (f.M() != g.M()) throw DomainError("images belong to different LIP scales");
    GreyImage out = f;
    auto dst = out.samples();
    auto src = g.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = lip::add_dilation(dst[i], src[i], f.M());
    return out;
}

GreyImage xi_image(const GreyImage& f) {
    GreyImage out = f;
    for (double& v : out.samples()) v = lip::xi(v, f.M());
    return out;
}

GreyImage xi_inv_image(const GreyImage& v, double M) {
    GreyImage out(v.width(), v.height(), 0.0, M);
    auto src = v.samples();
    auto dst = out.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = lip::xi_inv(src[i], M);
    return out;
}

GreyImage luminance_image(const RgbImage& rgb, double M) {
    GreyImage out(rgb.width, rgb.height, 0.0, M);
    auto dst = out.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = luminance(rgb.r[i], rgb.g[i], rgb.b[i], M).value;
    return out;
}

double max_abs_diff(const GreyImage& a, const GreyImage& b) {
    if (!a.same_shape(b)) throw DomainError("image shapes differ");
    double worst = 0.0;
    auto x = a.samples();
    auto y = b.samples();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == y[i]) continue;
        const double d = std::abs(x[i] - y[i]);
        worst = std::max(worst, std::isnan(d) ? kPosInf : d);
    }
    return worst;
}

}  // namespace lmm
