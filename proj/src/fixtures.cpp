#include "lmm/fixtures.hpp"

#include "lmm/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace lmm::fixtures {
namespace {

double bump_shape(double d, double radius) {
    const double t = d / radius;
    return std::abs(t) >= 1.0 ? 0.0 : 0.5 * (1.0 + std::cos(std::numbers::pi * t));
}

constexpr int kBumpRadius = 10;
constexpr double kBumpHeight = 60.0;
constexpr double kBase = 30.0;

struct Vec2 {
    double x, y;
};

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = p.x - (a.x + t * vx), dy = p.y - (a.y + t * vy);
    return std::sqrt(dx * dx + dy * dy);
}

struct VesselSpec {
    Vec2 from, to;
    double bulge;  // sagitta relative to the chord length
    double width;  // diameter relative to the field-of-view radius
};

// Field-of-view coordinates: centre (0, 0), radius 1.
constexpr Vec2 kDisc{0.45, 0.0};
const std::array<VesselSpec, 7> kVessels{{
    {kDisc, {-0.92, -0.35}, 0.18, 0.11},
    {kDisc, {-0.92, 0.35}, -0.18, 0.11},
    {kDisc, {-0.25, -0.90}, 0.10, 0.08},
    {kDisc, {-0.25, 0.90}, -0.10, 0.08},
    {kDisc, {0.88, -0.40}, 0.05, 0.06},
    {kDisc, {0.88, 0.40}, -0.05, 0.06},
    {{-0.30, -0.30}, {-0.70, 0.05}, 0.10, 0.06},
}};

}  // namespace

SpiralDrift spiral_drift(int size, std::uint64_t seed, double drift_max, double M) {
    if (size < 8) throw GeometryError("spiral fixture needs size >= 8");
    if (!(drift_max < M)) throw DomainError("drift must stay below M");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 2.0);
    SpiralDrift out{GreyImage(size, size, 0.0, M), GreyImage(size, size, 0.0, M), GreyImage(size, size, 0.0, M)};
    const double cx = 0.5 * (size - 1), cy = 0.5 * (size - 1);
    const double turns = 3.0;
    const double pitch = 0.45 * size / turns;  // radial gap between arms
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const double dx = x - cx, dy = y - cy;
            const double r = std::hypot(dx, dy);
            double phase = std::atan2(dy, dx);
            if (phase < 0) phase += 2.0 * std::numbers::pi;
            // Distance (radially) to the nearest arm of r = pitch * phase / 2π.
            double best = 1e9;
            for (int k = 0; k <= static_cast<int>(turns) + 1; ++k) {
                const double arm = pitch * (phase / (2.0 * std::numbers::pi) + k);
                best = std::min(best, std::abs(r - arm));
            }
            const bool inside = r <= 0.45 * size + 1.0;
            const double stroke = inside ? 90.0 * bump_shape(best, 0.11 * pitch + 1.5) : 0.0;
            const double texture = 20.0 + 6.0 * std::sin(0.4 * x) * std::cos(0.3 * y);
            out.clean(x, y) = std::clamp(texture + stroke + noise(rng), 0.0, M - 1.0);
            out.plane(x, y) = drift_max * x / (size - 1.0);
        }
    }
    out.drifted = lip_add_images(out.clean, out.plane);
    return out;
}

std::vector<double> bump_profile(int radius) {
    std::vector<double> v;
    for (int d = -radius; d <= radius; ++d) v.push_back(kBumpHeight * bump_shape(d, kBumpRadius + 0.5));
    return v;
}

BumpSignal bump_signal(int length, std::uint64_t seed, double c, double density, double sigma, double M) {
    if (length < 120) throw GeometryError("bump signal needs length >= 120");
    if (!(c < M)) throw DomainError("c must stay below M");
    if (!(density >= 0.0 && density <= 1.0) || !(sigma >= 0.0)) throw DomainError("invalid noise parameters");
    BumpSignal s;
    s.clean = GreyImage(length, 1, 0.0, M);
    const int quarter = length / 4;
    s.first_center = quarter / 2 + quarter / 4;
    s.second_center = s.first_center + quarter;
    s.step_position = 2 * quarter + quarter / 2;
    for (int x = 0; x < quarter; ++x)
        s.clean(x, 0) = lip::add(kBase, kBumpHeight * bump_shape(x - s.first_center, kBumpRadius + 0.5), M);
    for (int x = quarter; x < 2 * quarter; ++x) s.clean(x, 0) = lip::add(s.clean(x - quarter, 0), c, M);
    const double low = kBase, high = lip::add(kBase, c, M);
    for (int x = 2 * quarter; x < length; ++x) {
        const double t = std::clamp((x - s.step_position) / 4.0, 0.0, 1.0);
        s.clean(x, 0) = low + (high - low) * t;
    }
    s.c = c;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::normal_distribution<double> amp(0.0, sigma);
    s.noisy = s.clean;
    for (int x = 0; x < length; ++x) {
        if (coin(rng) < density) {
            const double sign = coin(rng) < 0.5 ? -1.0 : 1.0;
            s.noisy(x, 0) = std::clamp(s.noisy(x, 0) + sign * std::abs(amp(rng)), 0.0, M - 1.0);
        }
    }
    return s;
}

FundusPhantom fundus_phantom(int size, std::uint64_t seed, double rotation_deg) {
    if (size < 32) throw GeometryError("fundus phantom needs size >= 32");
    const double R = 0.45 * size;
    const double cx = 0.5 * (size - 1), cy = 0.5 * (size - 1);
    const double rot = rotation_deg * std::numbers::pi / 180.0;
    const double cr = std::cos(rot), sr = std::sin(rot);
    auto place = [&](Vec2 p) { return Vec2{cx + R * (cr * p.x - sr * p.y), cy + R * (sr * p.x + cr * p.y)}; };

    // Each vessel is a quadratic Bezier flattened into a polyline.
    struct Polyline {
        std::vector<Vec2> pts;
        double radius;
        double min_x, max_x, min_y, max_y;
    };
    std::vector<Polyline> lines;
    for (const auto& v : kVessels) {
        const Vec2 mid{0.5 * (v.from.x + v.to.x), 0.5 * (v.from.y + v.to.y)};
        const double chord = std::hypot(v.to.x - v.from.x, v.to.y - v.from.y);
        const Vec2 normal{-(v.to.y - v.from.y) / chord, (v.to.x - v.from.x) / chord};
        const Vec2 ctrl{mid.x + 2.0 * v.bulge * chord * normal.x, mid.y + 2.0 * v.bulge * chord * normal.y};
        Polyline pl{{}, std::max(0.75, 0.5 * v.width * R), 1e9, -1e9, 1e9, -1e9};
        constexpr int kPieces = 48;
        for (int i = 0; i <= kPieces; ++i) {
            const double t = static_cast<double>(i) / kPieces, u = 1.0 - t;
            const Vec2 q{u * u * v.from.x + 2 * u * t * ctrl.x + t * t * v.to.x,
                         u * u * v.from.y + 2 * u * t * ctrl.y + t * t * v.to.y};
            const Vec2 p = place(q);
            pl.pts.push_back(p);
            pl.min_x = std::min(pl.min_x, p.x), pl.max_x = std::max(pl.max_x, p.x);
            pl.min_y = std::min(pl.min_y, p.y), pl.max_y = std::max(pl.max_y, p.y);
        }
        lines.push_back(std::move(pl));
    }
    const Vec2 disc = place(kDisc);
    const double disc_r = 0.16 * R;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.5);
    FundusPhantom out{RgbImage(size, size), BinaryMask(size, size), BinaryMask(size, size)};
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * size + x;
            const double rho = std::hypot(x - cx, y - cy) / R;
            const double n_r = noise(rng), n_g = noise(rng), n_b = noise(rng);
            if (rho > 1.0) {
                out.rgb.r[i] = std::clamp(std::round(2.0 + n_r), 0.0, 255.0);
                out.rgb.g[i] = std::clamp(std::round(2.0 + n_g), 0.0, 255.0);
                out.rgb.b[i] = std::clamp(std::round(2.0 + n_b), 0.0, 255.0);
                continue;
            }
            out.zoi.set(i, true);
            double r = 205.0 - 55.0 * rho * rho;
            double g = 105.0 - 35.0 * rho * rho;
            double b = 45.0 - 15.0 * rho * rho;
            const double dd = std::hypot(x - disc.x, y - disc.y);
            const double glow = dd < 2.0 * disc_r ? std::exp(-0.5 * (dd / disc_r) * (dd / disc_r)) : 0.0;
            r += 40.0 * glow, g += 70.0 * glow, b += 50.0 * glow;
            double depth = 0.0;
            bool vessel = false;
            const Vec2 p{static_cast<double>(x), static_cast<double>(y)};
            for (const auto& pl : lines) {
                const double reach = 2.5 * pl.radius + 1.0;
                if (p.x < pl.min_x - reach || p.x > pl.max_x + reach || p.y < pl.min_y - reach || p.y > pl.max_y + reach)
                    continue;
                double d = 1e9;
                for (std::size_t k = 1; k < pl.pts.size(); ++k) d = std::min(d, segment_distance(p, pl.pts[k - 1], pl.pts[k]));
                if (d <= pl.radius) vessel = true;
                const double s = d / pl.radius;
                depth = std::max(depth, std::exp(-0.5 * s * s * 1.4));
            }
            out.vessels.set(i, vessel);
            r -= 40.0 * depth, g -= 55.0 * depth, b -= 15.0 * depth;
            out.rgb.r[i] = std::clamp(std::round(r + n_r), 0.0, 255.0);
            out.rgb.g[i] = std::clamp(std::round(g + n_g), 0.0, 255.0);
            out.rgb.b[i] = std::clamp(std::round(b + n_b), 0.0, 255.0);
        }
    }
    return out;
}

}  // namespace lmm::fixtures
