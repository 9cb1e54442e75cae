#pragma once

// Evaluation on a DRIVE-style test set converted to PNG:
//
//   <root>/images/NN_test.png        colour fundus images
//   <root>/1st_manual/NN_manual1.png vessel ground truth
//   <root>/mask/NN_test_mask.png     field of view (optional; estimated if absent)
//
// Each image is segmented as is and after the radial darkening, and the
// AUC / Acc / Se / Sp of both runs are reported.

#include "lmm/eval.hpp"
#include "lmm/vessel.hpp"

#include <string>
#include <vector>

namespace lmm::drive {

struct ImageResult {
    std::string name;
    eval::SegMetrics initial;
    eval::SegMetrics darkened;
};

struct Summary {
    std::vector<ImageResult> images;
    double mean_auc_initial = 0.0;
    double mean_auc_darkened = 0.0;
    double relative_auc_diff = 0.0;
};

struct Options {
    vessel::PipelineConfig config = vessel::PipelineConfig::defaults();
    double darkening_intensity = 230.0;
    bool full_frame = false;  // evaluate every pixel instead of the ZOI
};

/// Throws IoError when the layout is missing or holds no image.
Summary evaluate(const std::string& root, const Options& options = {});

/// One image: metrics of the segmentation plus the AUC of the vesselness map.
eval::SegMetrics evaluate_image(const RgbImage& rgb, const BinaryMask& truth, const BinaryMask& zoi,
                                const vessel::PipelineConfig& config, bool full_frame = false);

}  // namespace lmm::drive
