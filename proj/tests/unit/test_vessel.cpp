#include "doctest.h"

#include "../support.hpp"
#include "lmm/error.hpp"
#include "lmm/eval.hpp"
#include "lmm/fixtures.hpp"
#include "lmm/morphology.hpp"
#include "lmm/vessel.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

using namespace lmm;
using namespace lmm::vessel;

namespace {

std::set<std::pair<int, int>> support(const StructuringFunction& b) {
    std::set<std::pair<int, int>> s;
    for (const auto& t : b.taps()) s.insert({t.dx, t.dy});
    return s;
}

PipelineConfig small_config() {
    PipelineConfig c = PipelineConfig::defaults();
    c.probes = {{5, 9}};
    c.orientations = 6;
    return c;
}

}  // namespace

TEST_CASE("probe geometry") {
    const auto p = build_probe(0.0, 6, 7);
    for (const auto& t : p.center.taps()) CHECK(t.dy == 0);
    for (const auto& t : p.left.taps()) CHECK(t.dy == 3);
    for (const auto& t : p.right.taps()) CHECK(t.dy == -3);
    CHECK(p.center.size() == 7);
    CHECK(p.combined().size() == 21);
    CHECK(*p.center.at(0, 0) == 10.0);
    CHECK(*p.left.at(0, 3) == 0.0);

    const auto q = build_probe(std::numbers::pi / 2, 6, 7);
    for (const auto* pair : {&p, &q}) CHECK(pair->center.size() == 7);
    std::set<std::pair<int, int>> transposed;
    for (auto [x, y] : support(p.combined())) transposed.insert({-y, x});
    CHECK(transposed == support(q.combined()));

    for (int i = 0; i < 18; ++i) {
        const auto r = build_probe(2 * std::numbers::pi * i / 18, 9, 15);
        CHECK(r.center.size() == 15);
        CHECK(r.left.size() == 15);
        CHECK(r.right.size() == 15);
    }
    CHECK_THROWS_AS(build_probe(0.0, 1, 7), GeometryError);
    CHECK_THROWS_AS(build_probe(0.0, 4, 1), GeometryError);
    CHECK_THROWS_AS(build_probe(0.0, 4, 7, 0.0, 5.0), GeometryError);
}

TEST_CASE("grave_c") {
    std::mt19937_64 rng(6);
    const auto p = build_probe(0.7, 5, 9);
    const GreyImage f = test::random_image(rng, 20, 20);
    const auto g0 = grave_c(f, p, 0);
    const auto expected = morph::pointwise_min(morph::log_erode(f, p.center),
                                               morph::pointwise_min(morph::log_erode(f, p.left), morph::log_erode(f, p.right)));
    CHECK(test::identical(g0, expected));
    const GreyImage c(30, 30, 80.0);
    for (double s : test::interior(grave_c(c, p, 1), 12)) CHECK(s == lip::sub(80.0, 10.0, 256.0));

    const auto d = left_right_detectors(f, p, 1);
    for (double s : d.left.samples()) CHECK(s >= 0.0);
    for (double s : d.right.samples()) CHECK(s >= 0.0);
}

TEST_CASE("aligned ridge versus perpendicular ridge") {
    GreyImage f(31, 31, 40.0);
    for (int x = 0; x < 31; ++x) f(x, 15) = lip::add(40.0, 10.0, 256.0);
    const auto along = build_probe(0.0, 6, 9);
    const auto across = build_probe(std::numbers::pi / 2, 6, 9);
    const auto a = left_right_detectors(f, along, 0);
    const auto b = left_right_detectors(f, across, 0);
    // Centre segment on the ridge, starting at x = 11.
    CHECK(a.left(11, 15) <= 1e-9);
    CHECK(a.right(11, 15) <= 1e-9);
    CHECK(std::max(b.left(15, 11), b.right(15, 11)) > 5.0);
}

TEST_CASE("vesselness reductions") {
    PipelineConfig one = small_config();
    one.orientations = 1;
    std::mt19937_64 rng(2);
    const GreyImage f = test::random_image(rng, 24, 24);
    const auto probe = build_probe(0.0, 5, 9);
    CHECK(test::identical(vesselness(f, one), oriented_detector(f, probe, one.rank_for(one.probes[0]))));
    // With every probe tap on the grid, a constant image gives the constant
    // center - side contrast.
    const GreyImage c(40, 40, 100.0);
    const auto flat = test::interior(vesselness(c, small_config()), 12);
    CHECK(flat.size() == 16 * 16);
    for (double s : flat) CHECK(s == doctest::Approx(10.0).epsilon(1e-12));
    PipelineConfig bad = small_config();
    bad.probes.clear();
    CHECK_THROWS_AS(vesselness(f, bad), ConfigError);
    CHECK_THROWS_AS(vesselness(GreyImage(4, 4, 0.0, 100.0), small_config()), DomainError);
}

TEST_CASE("vesselness is invariant under LIP addition") {
    const auto ph = fixtures::fundus_phantom(48, 3);
    const GreyImage f = luminance_image(ph.rgb);
    const auto cfg = small_config();
    const auto e = vesselness(f, cfg);
    for (double c : {-200.0, 200.0}) CHECK(test::diff(vesselness(lip_add_constant(f, c), cfg), e) <= 1e-6);
}

TEST_CASE("segment") {
    std::mt19937_64 rng(10);
    const GreyImage map = test::random_image(rng, 30, 20);
    BinaryMask zoi(30, 20);
    for (int y = 2; y < 18; ++y)
        for (int x = 3; x < 25; ++x) zoi.set(x, y, true);
    CHECK(segment(map, zoi, 0.0).count() == 0);
    CHECK(segment(map, zoi, 1.0) == zoi);
    const auto m12 = segment(map, zoi, 0.12);
    CHECK(m12.count() == static_cast<std::size_t>(std::llround(0.12 * zoi.count())));
    const auto m10 = segment(map, zoi, 0.10);
    for (std::size_t i = 0; i < m10.size(); ++i)
        if (m10.at(i)) CHECK(m12.at(i));
    double worst_in = -1e9, best_out = 1e9;
    for (std::size_t i = 0; i < m12.size(); ++i) {
        if (!zoi.at(i)) continue;
        if (m12.at(i)) worst_in = std::max(worst_in, map.samples()[i]);
        else best_out = std::min(best_out, map.samples()[i]);
    }
    CHECK(worst_in <= best_out);

    // Ties resolve in scan order.
    const GreyImage flat(10, 1, 5.0);
    const auto t = segment(flat, BinaryMask(10, 1, true), 0.3);
    CHECK(t.at(0));
    CHECK(t.at(2));
    CHECK_FALSE(t.at(3));
}

TEST_CASE("zone of interest") {
    RgbImage full(20, 15, 200.0);
    CHECK(estimate_zoi(full).count() == 300);
    const auto ph = fixtures::fundus_phantom(64, 1);
    const auto zoi = estimate_zoi(ph.rgb);
    CHECK(eval::dice(zoi, ph.zoi) > 0.98);
    CHECK_THROWS_AS(estimate_zoi(RgbImage(5, 5, 0.0)), DomainError);
    CHECK_THROWS_AS(estimate_zoi(RgbImage()), DomainError);
}

TEST_CASE("config parsing") {
    std::istringstream in(
        "# test\nprobe = 5,11\nprobe=9,15\norientations=12\nk=auto\nthreshold_fraction=0.1\nM=256\n");
    const auto c = parse_config(in);
    REQUIRE(c.probes.size() == 2);
    CHECK(c.probes[1] == ProbeSize{9, 15});
    CHECK(c.orientations == 12);
    CHECK_FALSE(c.k.has_value());
    CHECK(c.threshold_fraction == 0.1);
    std::istringstream round(format_config(c));
    const auto d = parse_config(round);
    CHECK(d.probes == c.probes);
    CHECK(d.orientations == c.orientations);

    std::istringstream unknown("colour=red\n");
    CHECK_THROWS_AS(parse_config(unknown), ConfigError);
    std::istringstream bad_fraction("threshold_fraction=1.5\n");
    CHECK_THROWS_AS(parse_config(bad_fraction), ConfigError);
    std::istringstream bad_k("probe=5,11\nk=20\n");
    CHECK_THROWS_AS(parse_config(bad_k), ConfigError);
    std::istringstream empty("");
    CHECK(parse_config(empty).probes == PipelineConfig::defaults().probes);
    CHECK_THROWS_AS(load_config("/nonexistent/config.cfg"), IoError);
}

TEST_CASE("default ranks") {
    const auto c = PipelineConfig::defaults();
    CHECK(c.rank_for({5, 11}) == 1);
    CHECK(c.rank_for({13, 21}) == 1);
    CHECK(c.rank_for({5, 9}) == 0);
}
