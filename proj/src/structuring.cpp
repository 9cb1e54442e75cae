#include "lmm/structuring.hpp"

#include "lmm/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace lmm {

StructuringFunction::StructuringFunction(std::vector<Tap> taps) : taps_(std::move(taps)) {
    if (taps_.empty()) throw DomainError("structuring function support is empty");
    std::set<std::pair<int, int>> seen;
    flat_ = true;
    for (const Tap& t : taps_) {
        if (std::isnan(t.value) || t.value == kNegInf)
            throw DomainError("structuring function values must be > -inf on the support");
        if (!seen.emplace(t.dx, t.dy).second)
            throw DomainError("duplicate offset (" + std::to_string(t.dx) + "," + std::to_string(t.dy) + ")");
        if (t.value != 0.0) flat_ = false;
    }
}

StructuringFunction StructuringFunction::flat(std::vector<std::pair<int, int>> offsets) {
    std::vector<Tap> taps;
    taps.reserve(offsets.size());
    for (auto [dx, dy] : offsets) taps.push_back({dx, dy, 0.0});
    return StructuringFunction(std::move(taps));
}

double StructuringFunction::sup() const noexcept {
    double s = kNegInf;
    for (const Tap& t : taps_) s = std::max(s, t.value);
    return s;
}

double StructuringFunction::inf() const noexcept {
    double s = kPosInf;
    for (const Tap& t : taps_) s = std::min(s, t.value);
    return s;
}

std::optional<double> StructuringFunction::at(int dx, int dy) const noexcept {
    for (const Tap& t : taps_)
        if (t.dx == dx && t.dy == dy) return t.value;
    return std::nullopt;
}

StructuringFunction::Box StructuringFunction::bounding_box() const noexcept {
    Box box{0, 0, 0, 0};
    if (taps_.empty()) return box;
    box = {taps_[0].dx, taps_[0].dy, taps_[0].dx, taps_[0].dy};
    for (const Tap& t : taps_) {
        box.min_dx = std::min(box.min_dx, t.dx);
        box.min_dy = std::min(box.min_dy, t.dy);
        box.max_dx = std::max(box.max_dx, t.dx);
        box.max_dy = std::max(box.max_dy, t.dy);
    }
    return box;
}

bool StructuringFunction::same_as(const StructuringFunction& other) const {
    if (size() != other.size()) return false;
    for (const Tap& t : taps_) {
        auto v = other.at(t.dx, t.dy);
        if (!v || *v != t.value) return false;
    }
    return true;
}

void StructuringFunction::require_restriction(const StructuringFunction& sub) const {
    for (const Tap& t : sub.taps()) {
        auto v = at(t.dx, t.dy);
        if (!v) throw GeometryError("offset (" + std::to_string(t.dx) + "," + std::to_string(t.dy) +
                                    ") lies outside the probe support");
        if (*v != t.value) throw GeometryError("sub-probe value differs from the probe at (" +
                                               std::to_string(t.dx) + "," + std::to_string(t.dy) + ")");
    }
}

StructuringFunction reflect(const StructuringFunction& b) {
    std::vector<Tap> taps = b.taps();
    for (Tap& t : taps) {
        t.dx = -t.dx;
        t.dy = -t.dy;
    }
    return StructuringFunction(std::move(taps));
}

StructuringFunction lip_negate_sf(const StructuringFunction& b, double M) {
    std::vector<Tap> taps = b.taps();
    for (Tap& t : taps) {
        if (!(t.value < M)) throw SingularityError("cannot negate a structuring value >= M");
        t.value = lip::negate(t.value, M);
    }
    return StructuringFunction(std::move(taps));
}

StructuringFunction with_constant_value(const StructuringFunction& b, double value) {
    std::vector<Tap> taps = b.taps();
    for (Tap& t : taps) t.value = value;
    return StructuringFunction(std::move(taps));
}

StructuringFunction make_disk(int radius, double value) {
    if (radius < 1) throw GeometryError("disk radius must be >= 1");
    std::vector<Tap> taps;
    const int r2 = radius * radius;
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
            if (dx * dx + dy * dy <= r2) taps.push_back({dx, dy, value});
    return StructuringFunction(std::move(taps));
}

StructuringFunction make_half_sphere(int radius, double base, double scale, double M) {
    if (radius < 1) throw GeometryError("hemisphere radius must be >= 1");
    if (!(base + scale * radius < M)) throw DomainError("hemisphere peak must stay below M");
    std::vector<Tap> taps;
    const int r2 = radius * radius;
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx) {
            const int d2 = dx * dx + dy * dy;
            if (d2 <= r2) taps.push_back({dx, dy, base + scale * std::sqrt(static_cast<double>(r2 - d2))});
        }
    return StructuringFunction(std::move(taps));
}

StructuringFunction make_ring(int inner, int outer, double value) {
    if (inner < 0 || outer < 1 || inner >= outer) throw GeometryError("ring needs 0 <= inner < outer");
    std::vector<Tap> taps;
    for (int dy = -outer; dy <= outer; ++dy)
        for (int dx = -outer; dx <= outer; ++dx) {
            const int d2 = dx * dx + dy * dy;
            if (d2 >= inner * inner && d2 <= outer * outer) taps.push_back({dx, dy, value});
        }
    return StructuringFunction(std::move(taps));
}

StructuringFunction make_gaussian_ring(const GaussianRingParams& p, double M) {
    if (p.gauss_radius < 0 || !(p.sigma > 0.0)) throw GeometryError("gaussian part needs radius >= 0, sigma > 0");
    if (p.ring_inner <= p.gauss_radius) throw GeometryError("ring must lie outside the gaussian part");
    if (!(p.base + p.peak < M) || !(p.ring_value < M)) throw DomainError("probe values must stay below M");
    StructuringFunction ring = make_ring(p.ring_inner, p.ring_outer, p.ring_value);
    std::vector<Tap> taps = ring.taps();
    const int r2 = p.gauss_radius * p.gauss_radius;
    for (int dy = -p.gauss_radius; dy <= p.gauss_radius; ++dy)
        for (int dx = -p.gauss_radius; dx <= p.gauss_radius; ++dx) {
            const int d2 = dx * dx + dy * dy;
            if (d2 <= r2)
                taps.push_back({dx, dy, p.base + p.peak * std::exp(-d2 / (2.0 * p.sigma * p.sigma))});
        }
    return StructuringFunction(std::move(taps));
}

StructuringFunction make_hline(int length, double value) {
    if (length < 1) throw GeometryError("line length must be >= 1");
    std::vector<Tap> taps;
    for (int i = 0; i < length; ++i) taps.push_back({i, 0, value});
    return StructuringFunction(std::move(taps));
}

StructuringFunction sf_from_image(const GreyImage& img, int origin_x, int origin_y) {
    std::vector<Tap> taps;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            if (img(x, y) > kNegInf) taps.push_back({x - origin_x, y - origin_y, img(x, y)});
    return StructuringFunction(std::move(taps));
}

SfRaster sf_to_image(const StructuringFunction& b, double M) {
    const auto box = b.bounding_box();
    SfRaster out{GreyImage(box.max_dx - box.min_dx + 1, box.max_dy - box.min_dy + 1, kNegInf, M),
                 -box.min_dx, -box.min_dy};
    for (const Tap& t : b.taps()) out.image(t.dx + out.origin_x, t.dy + out.origin_y) = t.value;
    return out;
}

}  // namespace lmm
