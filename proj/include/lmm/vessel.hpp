#pragma once

// Vessel segmentation in eye-fundus images with oriented three-segment
// probes and k-th minimum logarithmic detectors.

#include "lmm/image.hpp"
#include "lmm/structuring.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lmm::vessel {

/// Three parallel segments of equal length: the central one (higher
/// intensity) starts at the origin, the side ones lie at ±w/2 along the
/// normal of the orientation.
struct VesselProbe {
    double theta = 0.0;
    int width = 0;
    int length = 0;
    double center_intensity = 0.0;
    double side_intensity = 0.0;
    StructuringFunction center;
    StructuringFunction left;
    StructuringFunction right;

    /// Union of the three segments.
    StructuringFunction combined() const;
};

/// Rasterizes the probe. Each segment gets exactly `length` pixels: the
/// dominant axis advances by one pixel per sample and the minor axis is
/// rounded. Requires width >= 2, length >= 2 and center > side intensity.
VesselProbe build_probe(double theta, int width, int length, double center_intensity = 10.0,
                        double side_intensity = 0.0);

struct ProbeSize {
    int width = 0;
    int length = 0;
    bool operator==(const ProbeSize&) const = default;
};

struct PipelineConfig {
    std::vector<ProbeSize> probes;
    int orientations = 18;
    /// Rank tolerance for the side segments; unset means 5% of the segment
    /// length, rounded.
    std::optional<std::size_t> k;
    double threshold_fraction = 0.12;
    double center_intensity = 10.0;
    double side_intensity = 0.0;
    double M = kDefaultM;
    /// Field-of-view extraction: conventional luminance floor and closing radius.
    double zoi_floor = 20.0;
    int zoi_close_radius = 3;

    static PipelineConfig defaults();
    /// Throws ConfigError on an empty probe list or out-of-range values.
    void validate() const;
    std::size_t rank_for(const ProbeSize& probe) const;
    /// Orientation of index i out of `orientations`, evenly spread over [0, 2π).
    double orientation(int i) const;
};

PipelineConfig parse_config(std::istream& in);
PipelineConfig load_config(const std::string& path);
std::string format_config(const PipelineConfig& config);

/// inf{ ε^⊞_{center}(f), ζ^⊞_{left,k}(f), ζ^⊞_{right,k}(f) }.
GreyImage grave_c(const GreyImage& f, const VesselProbe& probe, std::size_t k);

struct SideDetectors {
    GreyImage left;
    GreyImage right;
};
/// ζ^⊞_{side,k}(f) ⊟ grave_c(f) for both sides.
SideDetectors left_right_detectors(const GreyImage& f, const VesselProbe& probe, std::size_t k);

/// E^k(b_θ, f): pointwise sup of the two side detectors.
GreyImage oriented_detector(const GreyImage& f, const VesselProbe& probe, std::size_t k);

/// E^k(b, f): pointwise inf of the oriented detectors over all orientations.
GreyImage probe_detector(const GreyImage& f, const ProbeSize& size, const PipelineConfig& config);

/// e^k_b(f): pointwise inf of the probe detectors. Vessels are valleys.
GreyImage vesselness(const GreyImage& f, const PipelineConfig& config);

/// Selects the round(fraction · area) lowest-valued ZOI pixels. Values
/// closer than `tie_quantum` (default 1e-9 · M) are treated as ties and
/// resolved in scan order.
BinaryMask segment(const GreyImage& map, const BinaryMask& zoi, double fraction,
                   std::optional<double> tie_quantum = std::nullopt);

/// Field of view: largest 4-connected region whose conventional luminance
/// exceeds `floor`, closed by a disk and with holes filled.
BinaryMask estimate_zoi(const RgbImage& rgb, double floor = 20.0, int close_radius = 3);

}  // namespace lmm::vessel
