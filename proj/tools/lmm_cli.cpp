// lmm: command-line front end.

#include "lmm/asplund.hpp"
#include "lmm/drive.hpp"
#include "lmm/error.hpp"
#include "lmm/eval.hpp"
#include "lmm/fixtures.hpp"
#include "lmm/image_io.hpp"
#include "lmm/morphology.hpp"
#include "lmm/oracle.hpp"
#include "lmm/parallel.hpp"
#include "lmm/residues.hpp"
#include "lmm/structuring.hpp"
#include "lmm/vessel.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace lmm;
namespace fs = std::filesystem;

namespace {

// --- structuring-function specs -------------------------------------------
//
//   point[:value=0]               single tap at the origin
//   disk:r=5,flat | disk:r=5,value=20
//   hemisphere:r=5,base=0,scale=8
//   ring:inner=6,outer=7,value=40
//   gaussring[:radius=3,sigma=1.5,peak=60,base=0,inner=6,outer=7,ring=40]
//   line:len=11[,value=0]
//   bump:r=10                     horizontal bump profile
//   file:path[,ox=..,oy=..]       image or float plane; -inf samples are off-support

struct SpecArgs {
    std::string head;
    std::vector<std::string> positional;
    std::map<std::string, std::string> named;

    double num(const std::string& key, double fallback) const {
        auto it = named.find(key);
        if (it == named.end()) return fallback;
        try {
            std::size_t used = 0;
            const double v = std::stod(it->second, &used);
            if (used == it->second.size()) return v;
        } catch (const std::exception&) {
        }
        throw ConfigError("structuring function: '" + key + "' expects a number, got '" + it->second + "'");
    }
    int integer(const std::string& key, int fallback) const {
        const double v = num(key, fallback);
        if (v != std::floor(v)) throw ConfigError("structuring function: '" + key + "' expects an integer");
        return static_cast<int>(v);
    }
    bool has(const std::string& key) const {
        return named.count(key) || std::find(positional.begin(), positional.end(), key) != positional.end();
    }
};

SpecArgs split_spec(const std::string& spec) {
    SpecArgs out;
    const auto colon = spec.find(':');
    out.head = spec.substr(0, colon);
    if (colon == std::string::npos) return out;
    std::stringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            out.positional.push_back(item);
        else
            out.named[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

StructuringFunction parse_se(const std::string& spec, double M) {
    const SpecArgs a = split_spec(spec);
    if (a.head == "point") return StructuringFunction({{0, 0, a.num("value", 0.0)}});
    if (a.head == "disk") {
        if (!a.named.count("r")) throw ConfigError("disk needs r=");
        return make_disk(a.integer("r", 1), a.has("flat") ? 0.0 : a.num("value", 0.0));
    }
    if (a.head == "hemisphere") return make_half_sphere(a.integer("r", 3), a.num("base", 0.0), a.num("scale", 1.0), M);
    if (a.head == "ring") return make_ring(a.integer("inner", 6), a.integer("outer", 7), a.num("value", 40.0));
    if (a.head == "gaussring") {
        GaussianRingParams p;
        p.gauss_radius = a.integer("radius", p.gauss_radius);
        p.sigma = a.num("sigma", p.sigma);
        p.peak = a.num("peak", p.peak);
        p.base = a.num("base", p.base);
        p.ring_inner = a.integer("inner", p.ring_inner);
        p.ring_outer = a.integer("outer", p.ring_outer);
        p.ring_value = a.num("ring", p.ring_value);
        return make_gaussian_ring(p, M);
    }
    if (a.head == "line") return make_hline(a.integer("len", 3), a.num("value", 0.0));
    if (a.head == "bump") {
        const int r = a.integer("r", 10);
        const auto prof = fixtures::bump_profile(r);
        std::vector<Tap> taps;
        for (int i = 0; i < static_cast<int>(prof.size()); ++i) taps.push_back({i - r, 0, prof[i]});
        return StructuringFunction(std::move(taps));
    }
    if (a.head == "file") {
        if (a.positional.empty()) throw ConfigError("file: needs a path");
        const GreyImage img = io::load_grey(a.positional.front(), M);
        return sf_from_image(img, a.integer("ox", img.width() / 2), a.integer("oy", img.height() / 2));
    }
    throw ConfigError("unknown structuring function '" + a.head + "'");
}

// Side restrictions for the bump detector: the `width` outermost columns of
// the support on each side.
std::pair<StructuringFunction, StructuringFunction> split_sides(const StructuringFunction& b, int width) {
    const auto box = b.bounding_box();
    std::vector<Tap> l, r;
    for (const Tap& t : b.taps()) {
        if (t.dx < box.min_dx + width) l.push_back(t);
        if (t.dx > box.max_dx - width) r.push_back(t);
    }
    if (l.empty() || r.empty()) throw GeometryError("side width leaves an empty side");
    return {StructuringFunction(std::move(l)), StructuringFunction(std::move(r))};
}

// --- output ---------------------------------------------------------------

bool is_float_path(const std::string& path) { return fs::path(path).extension() == ".f32"; }

void save_map(const std::string& path, const GreyImage& img, const std::string& scale, bool invert) {
    io::save_grey(path, img, io::parse_scale_mode(scale), invert);
}

// --- commands -------------------------------------------------------------

struct OpArgs {
    std::string name, se, se2, left, right, in, out, scale = "clamp";
    double M = kDefaultM;
    double p = 0.85;
    std::size_t k = 0;
    int side_width = 3;
    bool max = false, invert = false, classical = false;
};

GreyImage run_op(const OpArgs& a, const GreyImage& f) {
    const auto se = [&] {
        if (a.se.empty()) throw ConfigError("op " + a.name + " needs --se");
        return parse_se(a.se, a.M);
    };
    const std::string& n = a.name;
    if (n == "erode") return morph::classical_erode(f, se());
    if (n == "dilate") return morph::classical_dilate(f, se());
    if (n == "open") return morph::classical_open(f, se());
    if (n == "close") return morph::classical_close(f, se());
    if (n == "log-erode") return morph::log_erode(f, se());
    if (n == "log-dilate") return morph::log_dilate(f, se());
    if (n == "log-open") return morph::log_open(f, se());
    if (n == "log-close") return morph::log_close(f, se());
    if (n == "rank") return a.max ? morph::rank_max(f, se(), {a.k}) : morph::rank_min(f, se(), {a.k});
    if (n == "log-rank") return a.max ? morph::log_rank_max(f, se(), {a.k}) : morph::log_rank_min(f, se(), {a.k});
    if (n == "asplund") return asplund::asplund_map(f, se());
    if (n == "asplund-tol")
        return a.classical ? asplund::classical_tol_map(f, se(), a.p) : asplund::asplund_map_tol(f, se(), a.p);
    if (n == "gradient") return asplund::classical_gradient(f, se());
    if (n == "lip-gradient") return asplund::lip_gradient(f, se());
    if (n == "tophat") return residue::top_hat(f, se());
    if (n == "lip-tophat") return residue::lip_top_hat(f, se());
    if (n == "ext-tophat") return residue::extended_top_hat(f, se());
    if (n == "ext-lip-tophat") return residue::extended_lip_top_hat(f, se());
    if (n == "bump") {
        const StructuringFunction b = se();
        if (a.left.empty() != a.right.empty()) throw ConfigError("bump needs both --left and --right or neither");
        if (!a.left.empty()) return residue::bump_detector(f, b, parse_se(a.left, a.M), parse_se(a.right, a.M));
        const auto [l, r] = split_sides(b, a.side_width);
        return residue::bump_detector(f, b, l, r);
    }
    if (n == "diff-open") {
        if (a.se2.empty()) throw ConfigError("diff-open needs --se2");
        const StructuringFunction b = se(), br = parse_se(a.se2, a.M);
        return a.classical ? residue::diff_openings(f, b, br) : residue::diff_log_openings(f, b, br);
    }
    throw ConfigError("unknown operator '" + n + "'");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

BinaryMask resolve_zoi(const std::string& zoi, const RgbImage& rgb, const vessel::PipelineConfig& cfg) {
    if (zoi.empty() || zoi == "auto") return vessel::estimate_zoi(rgb, cfg.zoi_floor, cfg.zoi_close_radius);
    if (zoi == "full") return BinaryMask(rgb.width, rgb.height, true);
    BinaryMask m = io::load_mask(zoi);
    if (m.width() != rgb.width || m.height() != rgb.height) throw GeometryError("ZOI mask size differs from image");
    return m;
}

int selftest() {
    // The optimized kernels against the naive oracle on a small seeded set.
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> val(0.0, 255.0), sfv(-40.0, 120.0);
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        GreyImage f(12, 10);
        for (double& v : f.samples()) v = val(rng);
        std::vector<Tap> taps;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx)
                if (rng() % 3 != 0 || (dx == 0 && dy == 0)) taps.push_back({dx, dy, sfv(rng)});
        const StructuringFunction b(std::move(taps));
        const std::size_t k = rng() % b.size();
        worst = std::max({worst, max_abs_diff(morph::log_dilate(f, b), oracle::naive_log_dilate(f, b)),
                          max_abs_diff(morph::log_erode(f, b), oracle::naive_log_erode(f, b)),
                          max_abs_diff(morph::log_rank_min(f, b, {k}), oracle::naive_log_rank_min(f, b, k)),
                          max_abs_diff(asplund::asplund_map(f, b), oracle::naive_asplund(f, b))});
    }
    const bool ok = worst <= 1e-9;
    std::cout << "selftest " << (ok ? "ok" : "FAILED") << ": max deviation " << worst << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logarithmic mathematical morphology"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);

    // op
    OpArgs op;
    auto* op_cmd = app.add_subcommand("op", "Apply one operator to an image");
    op_cmd->add_option("name", op.name, "Operator")->required();
    op_cmd->add_option("input", op.in)->required();
    op_cmd->add_option("output", op.out)->required();
    op_cmd->add_option("--se", op.se, "Structuring function spec");
    op_cmd->add_option("--se2", op.se2, "Second structuring function (diff-open)");
    op_cmd->add_option("--left", op.left, "Left restriction (bump)");
    op_cmd->add_option("--right", op.right, "Right restriction (bump)");
    op_cmd->add_option("--side-width", op.side_width, "Columns per side when --left/--right are omitted");
    op_cmd->add_option("--k", op.k, "Rank tolerance");
    op_cmd->add_flag("--max", op.max, "Rank maximum instead of minimum");
    op_cmd->add_option("--p", op.p, "Tolerance fraction (asplund-tol)");
    op_cmd->add_flag("--classical", op.classical, "Classical variant (asplund-tol, diff-open)");
    op_cmd->add_option("--M", op.M, "Upper bound of the grey scale");
    op_cmd->add_option("--scale", op.scale, "8-bit output scaling: clamp|minmax");
    op_cmd->add_flag("--invert", op.invert, "Read/write 8-bit data as (M-1) - value");

    // probe gen
    auto* probe_cmd = app.add_subcommand("probe", "Vessel probes")->require_subcommand(1);
    auto* probe_gen = probe_cmd->add_subcommand("gen", "Rasterize a probe to a float plane");
    int probe_w = 9, probe_l = 15;
    double probe_theta = 0.0, probe_center = 10.0, probe_side = 0.0;
    std::string probe_out;
    probe_gen->add_option("--width", probe_w);
    probe_gen->add_option("--length", probe_l);
    probe_gen->add_option("--theta", probe_theta, "Orientation in degrees");
    probe_gen->add_option("--center", probe_center);
    probe_gen->add_option("--side", probe_side);
    probe_gen->add_option("output", probe_out)->required();

    // fixture gen
    auto* fixture_cmd = app.add_subcommand("fixture", "Synthetic inputs")->require_subcommand(1);
    auto* fixture_gen = fixture_cmd->add_subcommand("gen", "Write a seeded fixture into a directory");
    std::string fixture_kind, fixture_dir;
    std::uint64_t seed = 1;
    int fixture_size = 0;
    double fixture_c = 80.0, fixture_rot = 0.0;
    fixture_gen->add_option("kind", fixture_kind)->required()->check(
        CLI::IsMember({"spiral-drift", "bump-signal", "fundus-phantom"}));
    fixture_gen->add_option("outdir", fixture_dir)->required();
    fixture_gen->add_option("--seed", seed);
    fixture_gen->add_option("--size", fixture_size, "Side (images) or length (bump-signal)");
    fixture_gen->add_option("--c", fixture_c, "bump-signal: LIP shift of the second bump");
    fixture_gen->add_option("--rotation", fixture_rot, "fundus-phantom: rotation in degrees");

    // darken
    auto* darken_cmd = app.add_subcommand("darken", "Radial LIP darkening of an 8-bit image");
    double i0 = 230.0;
    std::string darken_in, darken_out, darken_zoi = "auto";
    darken_cmd->add_option("--i0", i0);
    darken_cmd->add_option("--zoi", darken_zoi, "auto|full|mask file");
    darken_cmd->add_option("input", darken_in)->required();
    darken_cmd->add_option("output", darken_out)->required();

    // vessel seg
    auto* vessel_cmd = app.add_subcommand("vessel", "Vessel segmentation")->require_subcommand(1);
    auto* seg_cmd = vessel_cmd->add_subcommand("seg", "Segment vessels in a fundus image");
    std::string seg_config, seg_in, seg_out, seg_zoi = "auto", seg_map;
    seg_cmd->add_option("--config", seg_config, "Pipeline configuration file");
    seg_cmd->add_option("input", seg_in)->required();
    seg_cmd->add_option("--zoi", seg_zoi, "auto|full|mask file");
    seg_cmd->add_option("--out", seg_out, "Output mask")->required();
    seg_cmd->add_option("--map", seg_map, "Also write the vesselness map (.f32 keeps exact values)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluation")->require_subcommand(1);
    auto* metrics_cmd = eval_cmd->add_subcommand("metrics", "Metrics of a mask against ground truth");
    std::string m_mask, m_gt, m_zoi, m_map, m_out, m_name;
    bool m_full = false;
    metrics_cmd->add_option("mask", m_mask)->required();
    metrics_cmd->add_option("truth", m_gt)->required();
    metrics_cmd->add_option("--zoi", m_zoi, "Restrict to this field-of-view mask");
    metrics_cmd->add_option("--map", m_map, "Vesselness map for the AUC");
    metrics_cmd->add_flag("--full-frame", m_full, "Count every pixel even when --zoi is given");
    metrics_cmd->add_option("--name", m_name, "Row label");
    metrics_cmd->add_option("--out", m_out, "CSV output (default stdout)");

    auto* drive_cmd = eval_cmd->add_subcommand("drive", "Initial vs darkened run on a DRIVE-style test set");
    std::string d_root, d_config, d_out;
    double d_i0 = 230.0;
    bool d_full = false;
    drive_cmd->add_option("root", d_root)->required();
    drive_cmd->add_option("--config", d_config);
    drive_cmd->add_option("--i0", d_i0);
    drive_cmd->add_flag("--full-frame", d_full);
    drive_cmd->add_option("--out", d_out, "Per-image CSV");

    auto* selftest_cmd = app.add_subcommand("selftest", "Check the kernels against the naive reference");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        std::cerr << "error: usage: " << msg << "\n";
        return 2;
    }

    try {
        set_thread_count(threads);

        if (*op_cmd) {
            const GreyImage f = io::load_grey(op.in, op.M, op.invert);
            const GreyImage out = run_op(op, f);
            save_map(op.out, out, op.scale, op.invert);
        } else if (*probe_gen) {
            const auto probe = vessel::build_probe(probe_theta * std::numbers::pi / 180.0, probe_w, probe_l,
                                                   probe_center, probe_side);
            const auto r = sf_to_image(probe.combined());
            if (is_float_path(probe_out))
                io::write_float_plane(probe_out, r.image);
            else
                io::save_grey(probe_out, r.image, io::ScaleMode::clamp);
            std::cout << "origin=" << r.origin_x << "," << r.origin_y << " taps=" << probe.combined().size() << "\n";
        } else if (*fixture_gen) {
            fs::create_directories(fixture_dir);
            const fs::path dir(fixture_dir);
            if (fixture_kind == "spiral-drift") {
                const auto s = fixtures::spiral_drift(fixture_size ? fixture_size : 128, seed);
                io::write_float_plane((dir / "clean.f32").string(), s.clean);
                io::write_float_plane((dir / "plane.f32").string(), s.plane);
                io::write_float_plane((dir / "drifted.f32").string(), s.drifted);
                io::save_grey((dir / "drifted.png").string(), s.drifted, io::ScaleMode::clamp, true);
            } else if (fixture_kind == "bump-signal") {
                const auto s = fixtures::bump_signal(fixture_size ? fixture_size : 240, seed, fixture_c);
                io::write_float_plane((dir / "clean.f32").string(), s.clean);
                io::write_float_plane((dir / "noisy.f32").string(), s.noisy);
                std::ostringstream csv;
                csv.precision(17);
                csv << "x,clean,noisy\n";
                for (int x = 0; x < s.clean.width(); ++x) csv << x << "," << s.clean(x, 0) << "," << s.noisy(x, 0) << "\n";
                write_text((dir / "signal.csv").string(), csv.str());
            } else {
                const auto s = fixtures::fundus_phantom(fixture_size ? fixture_size : 64, seed, fixture_rot);
                io::save_rgb((dir / "image.png").string(), s.rgb);
                io::save_mask((dir / "vessels.png").string(), s.vessels);
                io::save_mask((dir / "zoi.png").string(), s.zoi);
            }
        } else if (*darken_cmd) {
            const io::Raster raster = io::read_raster(darken_in);
            const RgbImage rgb = io::load_rgb(darken_in);
            const auto cfg = vessel::PipelineConfig::defaults();
            const auto params = eval::fit_zoi_circle(resolve_zoi(darken_zoi, rgb, cfg), i0);
            const GreyImage c = eval::darkening_function(params, rgb.width, rgb.height);
            const RgbImage dark = eval::darken_rgb(rgb, c);
            if (raster.channels == 1)
                io::save_grey(darken_out, GreyImage(dark.width, dark.height, dark.r), io::ScaleMode::clamp);
            else
                io::save_rgb(darken_out, dark);
        } else if (*seg_cmd) {
            const auto cfg = seg_config.empty() ? vessel::PipelineConfig::defaults() : vessel::load_config(seg_config);
            const RgbImage rgb = io::load_rgb(seg_in);
            const BinaryMask zoi = resolve_zoi(seg_zoi, rgb, cfg);
            const GreyImage e = vessel::vesselness(luminance_image(rgb, cfg.M), cfg);
            io::save_mask(seg_out, vessel::segment(e, zoi, cfg.threshold_fraction));
            if (!seg_map.empty()) save_map(seg_map, e, "minmax", false);
        } else if (*metrics_cmd) {
            const BinaryMask mask = io::load_mask(m_mask), truth = io::load_mask(m_gt);
            if (!mask.same_shape(truth)) throw GeometryError("mask and ground truth differ in size");
            BinaryMask region(mask.width(), mask.height(), true);
            if (!m_zoi.empty() && !m_full) region = io::load_mask(m_zoi);
            if (!region.same_shape(mask)) throw GeometryError("ZOI mask size differs from the mask");
            auto metrics = eval::compute_metrics(mask, truth, region);
            metrics.auc = std::nan("");
            if (!m_map.empty()) {
                const GreyImage map = io::load_grey(m_map);
                if (!truth.matches(map)) throw GeometryError("map size differs from the mask");
                metrics.auc = eval::auc(map, truth, region);
            }
            std::ostringstream csv;
            eval::write_metrics_table(csv, {{m_name.empty() ? fs::path(m_mask).stem().string() : m_name, metrics}});
            write_text(m_out, csv.str());
        } else if (*drive_cmd) {
            drive::Options opts;
            if (!d_config.empty()) opts.config = vessel::load_config(d_config);
            opts.darkening_intensity = d_i0;
            opts.full_frame = d_full;
            const auto s = drive::evaluate(d_root, opts);
            std::vector<eval::MetricsRow> rows;
            for (const auto& r : s.images) {
                rows.push_back({r.name + ":initial", r.initial});
                rows.push_back({r.name + ":darkened", r.darkened});
            }
            std::ostringstream csv;
            eval::write_metrics_table(csv, rows);
            write_text(d_out, csv.str());
            std::cout << "images=" << s.images.size() << " mean_auc_initial=" << s.mean_auc_initial
                      << " mean_auc_darkened=" << s.mean_auc_darkened
                      << " relative_auc_diff=" << s.relative_auc_diff << "\n";
        } else if (*selftest_cmd) {
            return selftest();
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
