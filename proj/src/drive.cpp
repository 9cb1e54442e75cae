#include "lmm/drive.hpp"

#include "lmm/error.hpp"
#include "lmm/image_io.hpp"

#include <algorithm>
#include <filesystem>

namespace lmm::drive {
namespace fs = std::filesystem;

eval::SegMetrics evaluate_image(const RgbImage& rgb, const BinaryMask& truth, const BinaryMask& zoi,
                                const vessel::PipelineConfig& config, bool full_frame) {
    const GreyImage f = luminance_image(rgb, config.M);
    const GreyImage map = vessel::vesselness(f, config);
    const BinaryMask mask = vessel::segment(map, zoi, config.threshold_fraction);
    const BinaryMask region = full_frame ? BinaryMask(zoi.width(), zoi.height(), true) : zoi;
    eval::SegMetrics m = eval::compute_metrics(mask, truth, region);
    m.auc = eval::auc(map, truth, region);
    return m;
}

Summary evaluate(const std::string& root, const Options& options) {
    const fs::path base(root);
    const fs::path images = base / "images";
    if (!fs::is_directory(images)) throw IoError("'" + images.string() + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(images))
        if (entry.path().extension() == ".png") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoError("no PNG image under '" + images.string() + "'");

    Summary s;
    for (const auto& file : files) {
        const std::string stem = file.stem().string();        // NN_test
        const std::string id = stem.substr(0, stem.find('_'));  // NN
        const fs::path gt = base / "1st_manual" / (id + "_manual1.png");
        const fs::path fov = base / "mask" / (stem + "_mask.png");
        const RgbImage rgb = io::load_rgb(file.string());
        const BinaryMask truth = io::load_mask(gt.string());
        const BinaryMask zoi = fs::exists(fov) ? io::load_mask(fov.string())
                                               : vessel::estimate_zoi(rgb, options.config.zoi_floor,
                                                                      options.config.zoi_close_radius);
        if (truth.width() != rgb.width || truth.height() != rgb.height || !zoi.same_shape(truth))
            throw IoError("'" + stem + "': image, ground truth and mask sizes differ");

        ImageResult r;
        r.name = stem;
        r.initial = evaluate_image(rgb, truth, zoi, options.config, options.full_frame);
        const auto params = eval::fit_zoi_circle(zoi, options.darkening_intensity);
        const GreyImage c_dk = eval::darkening_function(params, rgb.width, rgb.height, options.config.M);
        r.darkened = evaluate_image(eval::darken_rgb(rgb, c_dk), truth, zoi, options.config, options.full_frame);
        s.images.push_back(std::move(r));
    }
    for (const auto& r : s.images) {
        s.mean_auc_initial += r.initial.auc;
        s.mean_auc_darkened += r.darkened.auc;
    }
    s.mean_auc_initial /= static_cast<double>(s.images.size());
    s.mean_auc_darkened /= static_cast<double>(s.images.size());
    s.relative_auc_diff = eval::relative_auc_diff(s.mean_auc_initial, s.mean_auc_darkened);
    return s;
}

}  // namespace lmm::drive
