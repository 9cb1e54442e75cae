#include "lmm/vessel.hpp"

#include "lmm/error.hpp"
#include "lmm/morphology.hpp"
#include "lmm/residues.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>
#include <string>

namespace lmm::vessel {
namespace {

int round_half_away(double v) { return static_cast<int>(std::lround(v)); }

// `length` pixels from (ox, oy) along the unit direction (c, s).
std::vector<std::pair<int, int>> segment_pixels(int ox, int oy, double c, double s, int length) {
    std::vector<std::pair<int, int>> px;
    px.reserve(static_cast<std::size_t>(length));
    const bool x_major = std::abs(c) >= std::abs(s);
    const double slope = x_major ? s / c : c / s;
    const int step = (x_major ? c : s) >= 0.0 ? 1 : -1;
    for (int i = 0; i < length; ++i) {
        const int major = i * step;
        const int minor = round_half_away(major * slope);
        px.emplace_back(x_major ? ox + major : ox + minor, x_major ? oy + minor : oy + major);
    }
    return px;
}

StructuringFunction segment_sf(const std::vector<std::pair<int, int>>& px, double value) {
    std::vector<Tap> taps;
    for (auto [dx, dy] : px) taps.push_back({dx, dy, value});
    return StructuringFunction(std::move(taps));
}

}  // namespace

StructuringFunction VesselProbe::combined() const {
    std::vector<Tap> taps = center.taps();
    taps.insert(taps.end(), left.taps().begin(), left.taps().end());
    taps.insert(taps.end(), right.taps().begin(), right.taps().end());
    return StructuringFunction(std::move(taps));
}

VesselProbe build_probe(double theta, int width, int length, double center_intensity, double side_intensity) {
    if (length < 2 || width < 2) throw GeometryError("probe needs length >= 2 and width >= 2");
    if (!std::isfinite(theta)) throw GeometryError("probe orientation must be finite");
    if (!(center_intensity > side_intensity))
        throw GeometryError("central segment must be more intense than the side segments");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double half = width / 2.0;
    const int nx = round_half_away(-s * half);
    const int ny = round_half_away(c * half);

    const auto mid = segment_pixels(0, 0, c, s, length);
    const auto lft = segment_pixels(nx, ny, c, s, length);
    const auto rgt = segment_pixels(-nx, -ny, c, s, length);

    std::set<std::pair<int, int>> seen(mid.begin(), mid.end());
    for (const auto& p : lft)
        if (!seen.insert(p).second) throw GeometryError("probe segments overlap; increase the width");
    for (const auto& p : rgt)
        if (!seen.insert(p).second) throw GeometryError("probe segments overlap; increase the width");

    return VesselProbe{theta,
                       width,
                       length,
                       center_intensity,
                       side_intensity,
                       segment_sf(mid, center_intensity),
                       segment_sf(lft, side_intensity),
                       segment_sf(rgt, side_intensity)};
}

PipelineConfig PipelineConfig::defaults() {
    PipelineConfig c;
    c.probes = {{5, 11}, {9, 15}, {13, 21}};
    return c;
}

void PipelineConfig::validate() const {
    if (probes.empty()) throw ConfigError("at least one probe is required");
    for (const auto& p : probes)
        if (p.width < 2 || p.length < 2) throw ConfigError("probe width and length must be >= 2");
    if (orientations < 1) throw ConfigError("orientations must be >= 1");
    if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0))
        throw ConfigError("threshold_fraction must lie in (0, 1)");
    if (!(M > 0.0) || !std::isfinite(M)) throw ConfigError("M must be a positive real");
    if (!(center_intensity > side_intensity)) throw ConfigError("center_intensity must exceed side_intensity");
    if (!(center_intensity < M) || !(side_intensity < M)) throw ConfigError("probe intensities must be < M");
    if (zoi_close_radius < 0) throw ConfigError("zoi_close_radius must be >= 0");
    for (const auto& p : probes)
        if (rank_for(p) >= static_cast<std::size_t>(p.length))
            throw ConfigError("rank k must be smaller than the probe length");
}

std::size_t PipelineConfig::rank_for(const ProbeSize& probe) const {
    if (k) return *k;
    return static_cast<std::size_t>(std::lround(0.05 * probe.length));
}

double PipelineConfig::orientation(int i) const {
    return 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(orientations);
}

GreyImage grave_c(const GreyImage& f, const VesselProbe& probe, std::size_t k) {
    const GreyImage sides = morph::pointwise_min(morph::log_rank_min(f, probe.left, {k}),
                                                 morph::log_rank_min(f, probe.right, {k}));
    return morph::pointwise_min(morph::log_erode(f, probe.center), sides);
}

SideDetectors left_right_detectors(const GreyImage& f, const VesselProbe& probe, std::size_t k) {
    const GreyImage zl = morph::log_rank_min(f, probe.left, {k});
    const GreyImage zr = morph::log_rank_min(f, probe.right, {k});
    const GreyImage contact = morph::pointwise_min(morph::log_erode(f, probe.center), morph::pointwise_min(zl, zr));
    return {residue::lip_difference(zl, contact), residue::lip_difference(zr, contact)};
}

GreyImage oriented_detector(const GreyImage& f, const VesselProbe& probe, std::size_t k) {
    auto d = left_right_detectors(f, probe, k);
    return morph::pointwise_max(d.left, d.right);
}

GreyImage probe_detector(const GreyImage& f, const ProbeSize& size, const PipelineConfig& config) {
    config.validate();
    const std::size_t k = config.rank_for(size);
    GreyImage acc;
    for (int i = 0; i < config.orientations; ++i) {
        const auto probe = build_probe(config.orientation(i), size.width, size.length, config.center_intensity,
                                       config.side_intensity);
        GreyImage e = oriented_detector(f, probe, k);
        acc = acc.empty() ? std::move(e) : morph::pointwise_min(acc, e);
    }
    return acc;
}

GreyImage vesselness(const GreyImage& f, const PipelineConfig& config) {
    config.validate();
    if (f.M() != config.M) throw DomainError("image and configuration use different LIP bounds");
    GreyImage acc;
    for (const auto& size : config.probes) {
        GreyImage e = probe_detector(f, size, config);
        acc = acc.empty() ? std::move(e) : morph::pointwise_min(acc, e);
    }
    return acc;
}

BinaryMask segment(const GreyImage& map, const BinaryMask& zoi, double fraction, std::optional<double> tie_quantum) {
    if (!zoi.matches(map)) throw DomainError("ZOI mask and map dimensions differ");
    if (!(fraction >= 0.0 && fraction <= 1.0)) throw DomainError("threshold fraction must lie in [0, 1]");
    const double quantum = tie_quantum.value_or(1e-9 * map.M());
    if (!(quantum >= 0.0)) throw DomainError("tie quantum must be >= 0");

    struct Entry {
        double key;
        std::size_t index;
    };
    std::vector<Entry> entries;
    entries.reserve(zoi.count());
    const auto samples = map.samples();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!zoi.at(i)) continue;
        const double v = samples[i];
        if (std::isnan(v)) throw DomainError("map contains NaN");
        entries.push_back({quantum > 0.0 && std::isfinite(v) ? std::round(v / quantum) : v, i});
    }
    const auto selected = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(entries.size())));
    BinaryMask out(map.width(), map.height());
    if (selected == 0) return out;
    auto less = [](const Entry& a, const Entry& b) { return a.key < b.key || (a.key == b.key && a.index < b.index); };
    if (selected < entries.size())
        std::nth_element(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(selected), entries.end(), less);
    for (std::size_t i = 0; i < selected; ++i) out.set(entries[i].index, true);
    return out;
}

BinaryMask estimate_zoi(const RgbImage& rgb, double floor, int close_radius) {
    if (rgb.width <= 0 || rgb.height <= 0 || rgb.size() == 0) throw DomainError("empty image");
    const int W = rgb.width;
    const int H = rgb.height;
    std::vector<char> bright(rgb.size());
    for (std::size_t i = 0; i < rgb.size(); ++i)
        bright[i] = (0.299 * rgb.r[i] + 0.587 * rgb.g[i] + 0.114 * rgb.b[i]) > floor;

    std::vector<int> label(rgb.size(), -1);
    int best_label = -1;
    std::size_t best_size = 0;
    int next = 0;
    std::queue<std::size_t> queue;
    for (std::size_t seed = 0; seed < rgb.size(); ++seed) {
        if (!bright[seed] || label[seed] >= 0) continue;
        std::size_t size = 0;
        label[seed] = next;
        queue.push(seed);
        while (!queue.empty()) {
            const std::size_t p = queue.front();
            queue.pop();
            ++size;
            const int x = static_cast<int>(p % W);
            const int y = static_cast<int>(p / W);
            const int nbr[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
            for (auto [nx, ny] : nbr) {
                if (nx < 0 || ny < 0 || nx >= W || ny >= H) continue;
                const std::size_t q = static_cast<std::size_t>(ny) * W + nx;
                if (bright[q] && label[q] < 0) {
                    label[q] = next;
                    queue.push(q);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best_label = next;
        }
        ++next;
    }
    if (best_label < 0) throw DomainError("no pixel above the ZOI floor");

    BinaryMask mask(W, H);
    for (std::size_t i = 0; i < rgb.size(); ++i) mask.set(i, label[i] == best_label);
    if (close_radius > 0) mask = morph::binary_close(mask, make_disk(close_radius));

    // Fill holes: background pixels not connected to the frame border.
    std::vector<char> outside(rgb.size(), 0);
    for (int x = 0; x < W; ++x)
        for (int y : {0, H - 1}) {
            const std::size_t i = static_cast<std::size_t>(y) * W + x;
            if (!mask.at(i) && !outside[i]) outside[i] = 1, queue.push(i);
        }
    for (int y = 0; y < H; ++y)
        for (int x : {0, W - 1}) {
            const std::size_t i = static_cast<std::size_t>(y) * W + x;
            if (!mask.at(i) && !outside[i]) outside[i] = 1, queue.push(i);
        }
    while (!queue.empty()) {
        const std::size_t p = queue.front();
        queue.pop();
        const int x = static_cast<int>(p % W);
        const int y = static_cast<int>(p / W);
        const int nbr[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
        for (auto [nx, ny] : nbr) {
            if (nx < 0 || ny < 0 || nx >= W || ny >= H) continue;
            const std::size_t q = static_cast<std::size_t>(ny) * W + nx;
            if (!mask.at(q) && !outside[q]) outside[q] = 1, queue.push(q);
        }
    }
    for (std::size_t i = 0; i < rgb.size(); ++i)
        if (!outside[i]) mask.set(i, true);
    return mask;
}

}  // namespace lmm::vessel
