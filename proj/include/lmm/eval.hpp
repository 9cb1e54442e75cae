#pragma once

// Non-uniform darkening of colour images and segmentation metrics.

#include "lmm/image.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lmm::eval {

/// Radial darkening c_dk(ρ) = I0 [1 - exp(-ρ / (R0 / 4))] centred on the ZOI.
struct DarkeningParams {
    double center_x = 0.0;
    double center_y = 0.0;
    double radius = 1.0;  // R0, ZOI radius in pixels
    double intensity = 230.0;  // I0

    void validate(double M) const;
};

GreyImage darkening_function(const DarkeningParams& params, int width, int height, double M = kDefaultM);

/// (M-1) - floor((M-1-f) ⊞ c), clamped to [0, M-1]. `channel` must hold
/// integers in [0, M-1] in the conventional (non-inverted) scale.
GreyImage darken_channel(const GreyImage& channel, const GreyImage& c_dk);
RgbImage darken_rgb(const RgbImage& rgb, const GreyImage& c_dk);

/// Circle with the mask's centroid and its equivalent-area radius.
DarkeningParams fit_zoi_circle(const BinaryMask& zoi, double intensity = 230.0);

struct SegMetrics {
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    double acc = 0.0;
    double se = 0.0;  // NaN when the ground truth has no positive pixel
    double sp = 0.0;  // NaN when the ground truth has no negative pixel
    double auc = 0.0;  // NaN until filled in from a vesselness map
};

/// Confusion counts and ratios over the pixels set in `region`.
SegMetrics compute_metrics(const BinaryMask& mask, const BinaryMask& truth, const BinaryMask& region);

/// Area under the ROC curve of a vesselness map (low = vessel) against
/// the ground truth over `region`: the threshold sweeps every distinct
/// value and the curve is integrated with trapezoids.
double auc(const GreyImage& map, const BinaryMask& truth, const BinaryMask& region);

/// |initial - dark| / initial.
double relative_auc_diff(double auc_initial, double auc_dark);

double dice(const BinaryMask& a, const BinaryMask& b);

/// Mean of the ratios; counts are summed.
SegMetrics mean_metrics(const std::vector<SegMetrics>& rows);

struct MetricsRow {
    std::string name;
    SegMetrics metrics;
};
/// CSV with header `image,AUC,Acc,Se,Sp,TP,FP,TN,FN`, one line per row and a
/// trailing `mean` line when there is more than one row.
void write_metrics_table(std::ostream& out, const std::vector<MetricsRow>& rows);

}  // namespace lmm::eval
