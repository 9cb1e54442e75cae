#pragma once

// Seeded synthetic inputs standing in for photographs: a spiral under a
// lighting drift, a 1-D bump signal and a colour fundus phantom.

#include "lmm/image.hpp"

#include <cstdint>
#include <vector>

namespace lmm::fixtures {

struct SpiralDrift {
    GreyImage clean;
    GreyImage plane;    // LIP-scale grey plane, 0 at the left edge
    GreyImage drifted;  // clean ⊞ plane
};

/// Dark spiral (LIP scale) on a textured background, plus a LIP-additive
/// linear drift rising to `drift_max` at the right edge.
SpiralDrift spiral_drift(int size = 128, std::uint64_t seed = 1, double drift_max = 150.0,
                         double M = kDefaultM);

struct BumpSignal {
    GreyImage clean;      // 1 x length
    GreyImage noisy;      // clean with impulse noise
    int first_center = 0;
    int second_center = 0;
    int step_position = 0;  // start of the rising transition
    double c = 0.0;         // second half = first half ⊞ c
};

/// The first quarter holds a bump (base ⊞ profile); the second quarter is
/// the first one ⊞ c.
/// A step transition follows in the tail. Impulse noise: each sample is
/// replaced with probability `density` by itself ± |N(0, sigma)|.
BumpSignal bump_signal(int length = 240, std::uint64_t seed = 1, double c = 80.0, double density = 0.08,
                       double sigma = 20.0, double M = kDefaultM);

/// Half-profile of the bump in `bump_signal` sampled at offsets -r..r, for
/// use as a probe.
std::vector<double> bump_profile(int radius);

struct FundusPhantom {
    RgbImage rgb;
    BinaryMask vessels;
    BinaryMask zoi;
};

/// Circular field of view on black, a reddish background with radial
/// shading, a bright optic disc and seven curved vessels. Rotation by
/// `rotation_deg` turns the whole scene about the image centre.
FundusPhantom fundus_phantom(int size = 64, std::uint64_t seed = 1, double rotation_deg = 0.0);

}  // namespace lmm::fixtures
