// numpy bindings. Images are 2-D float64 arrays (row = y); colour images are
// (h, w, 3) arrays; masks are boolean arrays. Structuring functions are
// StructuringFunction objects built from (dx, dy, value) triples or the
// named generators.

#include "lmm/asplund.hpp"
#include "lmm/error.hpp"
#include "lmm/eval.hpp"
#include "lmm/fixtures.hpp"
#include "lmm/morphology.hpp"
#include "lmm/parallel.hpp"
#include "lmm/residues.hpp"
#include "lmm/vessel.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <sstream>

namespace py = pybind11;
using namespace lmm;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;
using Mask = py::array_t<bool, py::array::c_style | py::array::forcecast>;

GreyImage to_image(const Array& a, double M) {
    if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
    const int h = static_cast<int>(a.shape(0)), w = static_cast<int>(a.shape(1));
    std::vector<double> v(a.data(), a.data() + a.size());
    return GreyImage(w, h, std::move(v), M);
}

py::array_t<double> from_image(const GreyImage& img) {
    py::array_t<double> out({img.height(), img.width()});
    std::memcpy(out.mutable_data(), img.samples().data(), img.size() * sizeof(double));
    return out;
}

BinaryMask to_mask(const Mask& a) {
    if (a.ndim() != 2) throw py::value_error("expected a 2-D mask");
    BinaryMask m(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    for (py::ssize_t i = 0; i < a.size(); ++i) m.set(static_cast<std::size_t>(i), a.data()[i]);
    return m;
}

py::array_t<bool> from_mask(const BinaryMask& m) {
    py::array_t<bool> out({m.height(), m.width()});
    for (std::size_t i = 0; i < m.size(); ++i) out.mutable_data()[i] = m.at(i);
    return out;
}

RgbImage to_rgb(const Array& a) {
    if (a.ndim() != 3 || a.shape(2) != 3) throw py::value_error("expected an (h, w, 3) array");
    RgbImage rgb(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    for (std::size_t i = 0; i < rgb.size(); ++i) {
        rgb.r[i] = a.data()[3 * i];
        rgb.g[i] = a.data()[3 * i + 1];
        rgb.b[i] = a.data()[3 * i + 2];
    }
    return rgb;
}

py::array_t<double> from_rgb(const RgbImage& rgb) {
    py::array_t<double> out({rgb.height, rgb.width, 3});
    double* d = out.mutable_data();
    for (std::size_t i = 0; i < rgb.size(); ++i) d[3 * i] = rgb.r[i], d[3 * i + 1] = rgb.g[i], d[3 * i + 2] = rgb.b[i];
    return out;
}

using SfOp = GreyImage (*)(const GreyImage&, const StructuringFunction&);

void def_sf_op(py::module_& m, const char* name, SfOp op, const char* doc) {
    m.def(
        name, [op](const Array& f, const StructuringFunction& b, double M) { return from_image(op(to_image(f, M), b)); },
        py::arg("f"), py::arg("b"), py::arg("M") = kDefaultM, doc);
}

using RankOp = GreyImage (*)(const GreyImage&, const StructuringFunction&, morph::RankIndex);

void def_rank_op(py::module_& m, const char* name, RankOp op) {
    m.def(
        name,
        [op](const Array& f, const StructuringFunction& b, std::size_t k, double M) {
            return from_image(op(to_image(f, M), b, {k}));
        },
        py::arg("f"), py::arg("b"), py::arg("k"), py::arg("M") = kDefaultM);
}

}  // namespace

PYBIND11_MODULE(_lmm, m) {
    m.doc() = "Logarithmic mathematical morphology";

    static py::exception<Error> base(m, "LmmError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(base, (e.code() + ": " + e.what()).c_str());
        }
    });

    m.attr("DEFAULT_M") = kDefaultM;
    m.def("set_thread_count", &set_thread_count, py::arg("n"));

    // LIP scalars
    m.def("lip_add", [](double a, double b, double M) { return lip::add(a, b, M); }, py::arg("a"), py::arg("b"),
          py::arg("M") = kDefaultM);
    m.def("lip_sub", [](double a, double b, double M) { return lip::sub(a, b, M); }, py::arg("a"), py::arg("b"),
          py::arg("M") = kDefaultM);
    m.def("lip_negate", [](double a, double M) { return lip::negate(a, M); }, py::arg("a"), py::arg("M") = kDefaultM);
    m.def("xi", [](double a, double M) { return lip::xi(a, M); }, py::arg("a"), py::arg("M") = kDefaultM);
    m.def("xi_inv", [](double v, double M) { return lip::xi_inv(v, M); }, py::arg("v"), py::arg("M") = kDefaultM);

    // images
    m.def("lip_add_constant", [](const Array& f, double c, double M) { return from_image(lip_add_constant(to_image(f, M), c)); },
          py::arg("f"), py::arg("c"), py::arg("M") = kDefaultM);
    m.def("lip_add_images",
          [](const Array& f, const Array& g, double M) { return from_image(lip_add_images(to_image(f, M), to_image(g, M))); },
          py::arg("f"), py::arg("g"), py::arg("M") = kDefaultM);
    m.def("negate_image", [](const Array& f, double M) { return from_image(negate_image(to_image(f, M))); },
          py::arg("f"), py::arg("M") = kDefaultM);
    m.def("luminance", [](const Array& rgb, double M) { return from_image(luminance_image(to_rgb(rgb), M)); },
          py::arg("rgb"), py::arg("M") = kDefaultM, "Luminance of a conventional 8-bit colour image in the LIP scale.");

    // structuring functions
    py::class_<StructuringFunction>(m, "StructuringFunction")
        .def(py::init([](const std::vector<std::tuple<int, int, double>>& taps) {
                 std::vector<Tap> t;
                 for (const auto& [dx, dy, v] : taps) t.push_back({dx, dy, v});
                 return StructuringFunction(std::move(t));
             }),
             py::arg("taps"), "From (dx, dy, value) triples.")
        .def_static("flat", &StructuringFunction::flat, py::arg("offsets"))
        .def_property_readonly("taps",
                               [](const StructuringFunction& b) {
                                   std::vector<std::tuple<int, int, double>> out;
                                   for (const Tap& t : b.taps()) out.emplace_back(t.dx, t.dy, t.value);
                                   return out;
                               })
        .def("__len__", &StructuringFunction::size)
        .def_property_readonly("sup", &StructuringFunction::sup)
        .def_property_readonly("inf", &StructuringFunction::inf)
        .def("__repr__", [](const StructuringFunction& b) {
            return "<StructuringFunction taps=" + std::to_string(b.size()) + ">";
        });
    m.def("reflect", &reflect, py::arg("b"));
    m.def("disk", &make_disk, py::arg("radius"), py::arg("value") = 0.0);
    m.def("half_sphere", &make_half_sphere, py::arg("radius"), py::arg("base"), py::arg("scale") = 1.0,
          py::arg("M") = kDefaultM);
    m.def("ring", &make_ring, py::arg("inner"), py::arg("outer"), py::arg("value"));
    m.def("hline", &make_hline, py::arg("length"), py::arg("value") = 0.0);
    m.def(
        "gaussian_ring",
        [](int gauss_radius, double sigma, double peak, double base, int ring_inner, int ring_outer, double ring_value,
           double M) {
            return make_gaussian_ring({gauss_radius, sigma, peak, base, ring_inner, ring_outer, ring_value}, M);
        },
        py::arg("gauss_radius") = 3, py::arg("sigma") = 1.5, py::arg("peak") = 60.0, py::arg("base") = 0.0,
        py::arg("ring_inner") = 6, py::arg("ring_outer") = 7, py::arg("ring_value") = 40.0, py::arg("M") = kDefaultM);

    // morphology
    def_sf_op(m, "dilate", &morph::classical_dilate, "Classical dilation.");
    def_sf_op(m, "erode", &morph::classical_erode, "Classical erosion.");
    def_sf_op(m, "open", &morph::classical_open, "Classical opening.");
    def_sf_op(m, "close", &morph::classical_close, "Classical closing.");
    def_sf_op(m, "log_dilate", &morph::log_dilate, "Logarithmic dilation.");
    def_sf_op(m, "log_erode", &morph::log_erode, "Logarithmic erosion.");
    def_sf_op(m, "log_open", &morph::log_open, "Logarithmic opening.");
    def_sf_op(m, "log_close", &morph::log_close, "Logarithmic closing.");
    def_rank_op(m, "rank_min", &morph::rank_min);
    def_rank_op(m, "rank_max", &morph::rank_max);
    def_rank_op(m, "log_rank_min", &morph::log_rank_min);
    def_rank_op(m, "log_rank_max", &morph::log_rank_max);

    // Asplund
    def_sf_op(m, "asplund", &asplund::asplund_map, "Map of Asplund distances to the probe.");
    def_sf_op(m, "lip_gradient", &asplund::lip_gradient, "LIP gradient (flat structuring element).");
    def_sf_op(m, "gradient", &asplund::classical_gradient, "Classical morphological gradient.");
    m.def("asplund_tol",
          [](const Array& f, const StructuringFunction& b, double p, double M) {
              return from_image(asplund::asplund_map_tol(to_image(f, M), b, p));
          },
          py::arg("f"), py::arg("b"), py::arg("p"), py::arg("M") = kDefaultM);
    m.def("classical_tol",
          [](const Array& f, const StructuringFunction& b, double p, double M) {
              return from_image(asplund::classical_tol_map(to_image(f, M), b, p));
          },
          py::arg("f"), py::arg("b"), py::arg("p"), py::arg("M") = kDefaultM);

    // residues
    def_sf_op(m, "top_hat", &residue::top_hat, "f - opening.");
    def_sf_op(m, "lip_top_hat", &residue::lip_top_hat, "f ⊟ opening.");
    def_sf_op(m, "ext_top_hat", &residue::extended_top_hat, "Extended top-hat R_b.");
    def_sf_op(m, "ext_lip_top_hat", &residue::extended_lip_top_hat, "Extended LIP top-hat.");
    m.def("bump_detector",
          [](const Array& f, const StructuringFunction& b, const StructuringFunction& left,
             const StructuringFunction& right, double M) {
              return from_image(residue::bump_detector(to_image(f, M), b, left, right));
          },
          py::arg("f"), py::arg("b"), py::arg("left"), py::arg("right"), py::arg("M") = kDefaultM);
    m.def("diff_log_openings",
          [](const Array& f, const StructuringFunction& b, const StructuringFunction& br, double M) {
              return from_image(residue::diff_log_openings(to_image(f, M), b, br));
          },
          py::arg("f"), py::arg("b"), py::arg("b_r"), py::arg("M") = kDefaultM);
    m.def("diff_openings",
          [](const Array& f, const StructuringFunction& b, const StructuringFunction& br, double M) {
              return from_image(residue::diff_openings(to_image(f, M), b, br));
          },
          py::arg("f"), py::arg("b"), py::arg("b_r"), py::arg("M") = kDefaultM);

    // vessels
    py::class_<vessel::PipelineConfig>(m, "PipelineConfig")
        .def(py::init(&vessel::PipelineConfig::defaults))
        .def_static("parse", [](const std::string& text) {
            std::istringstream in(text);
            return vessel::parse_config(in);
        })
        .def_readwrite("orientations", &vessel::PipelineConfig::orientations)
        .def_readwrite("k", &vessel::PipelineConfig::k)
        .def_readwrite("threshold_fraction", &vessel::PipelineConfig::threshold_fraction)
        .def_readwrite("center_intensity", &vessel::PipelineConfig::center_intensity)
        .def_readwrite("side_intensity", &vessel::PipelineConfig::side_intensity)
        .def_readwrite("M", &vessel::PipelineConfig::M)
        .def_property(
            "probes",
            [](const vessel::PipelineConfig& c) {
                std::vector<std::pair<int, int>> out;
                for (const auto& p : c.probes) out.emplace_back(p.width, p.length);
                return out;
            },
            [](vessel::PipelineConfig& c, const std::vector<std::pair<int, int>>& v) {
                c.probes.clear();
                for (const auto& [w, l] : v) c.probes.push_back({w, l});
            })
        .def("__str__", &vessel::format_config);
    m.def("vesselness",
          [](const Array& f, const vessel::PipelineConfig& config) {
              config.validate();
              return from_image(vessel::vesselness(to_image(f, config.M), config));
          },
          py::arg("f"), py::arg("config") = vessel::PipelineConfig::defaults());
    m.def("segment",
          [](const Array& map, const Mask& zoi, double fraction) {
              return from_mask(vessel::segment(to_image(map, kDefaultM), to_mask(zoi), fraction));
          },
          py::arg("map"), py::arg("zoi"), py::arg("fraction") = 0.12);
    m.def("estimate_zoi", [](const Array& rgb) { return from_mask(vessel::estimate_zoi(to_rgb(rgb))); }, py::arg("rgb"));

    // evaluation
    m.def("darken",
          [](const Array& rgb, const Mask& zoi, double intensity) {
              const RgbImage img = to_rgb(rgb);
              const auto params = eval::fit_zoi_circle(to_mask(zoi), intensity);
              return from_rgb(eval::darken_rgb(img, eval::darkening_function(params, img.width, img.height)));
          },
          py::arg("rgb"), py::arg("zoi"), py::arg("intensity") = 230.0);
    m.def("auc",
          [](const Array& map, const Mask& truth, const Mask& region) {
              return eval::auc(to_image(map, kDefaultM), to_mask(truth), to_mask(region));
          },
          py::arg("map"), py::arg("truth"), py::arg("region"));
    m.def("metrics",
          [](const Mask& mask, const Mask& truth, const Mask& region) {
              const auto s = eval::compute_metrics(to_mask(mask), to_mask(truth), to_mask(region));
              py::dict d;
              d["tp"] = s.tp, d["fp"] = s.fp, d["tn"] = s.tn, d["fn"] = s.fn;
              d["acc"] = s.acc, d["se"] = s.se, d["sp"] = s.sp;
              return d;
          },
          py::arg("mask"), py::arg("truth"), py::arg("region"));

    // fixtures
    m.def("spiral_drift",
          [](int size, std::uint64_t seed, double drift_max) {
              const auto s = fixtures::spiral_drift(size, seed, drift_max);
              return py::make_tuple(from_image(s.clean), from_image(s.plane), from_image(s.drifted));
          },
          py::arg("size") = 128, py::arg("seed") = 1, py::arg("drift_max") = 150.0);
    m.def("fundus_phantom",
          [](int size, std::uint64_t seed, double rotation) {
              const auto s = fixtures::fundus_phantom(size, seed, rotation);
              return py::make_tuple(from_rgb(s.rgb), from_mask(s.vessels), from_mask(s.zoi));
          },
          py::arg("size") = 64, py::arg("seed") = 1, py::arg("rotation_deg") = 0.0);
}
