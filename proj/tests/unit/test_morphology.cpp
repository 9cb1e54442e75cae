#include "doctest.h"

#include "../support.hpp"
#include "lmm/error.hpp"
#include "lmm/morphology.hpp"
#include "lmm/oracle.hpp"
#include "lmm/parallel.hpp"

#include <random>

using namespace lmm;
using namespace lmm::morph;

TEST_CASE("constant images are fixed by flat operators") {
    const GreyImage c(7, 5, 42.0);
    const auto B = make_disk(2);
    for (const auto& out : {classical_dilate(c, B), classical_erode(c, B), log_dilate(c, B), log_erode(c, B),
                            log_open(c, B), log_close(c, B)})
        CHECK(test::identical(out, c));
}

TEST_CASE("single peak spreads over the flat window") {
    GreyImage f(7, 7, 0.0);
    f(3, 3) = 100.0;
    const auto sq = StructuringFunction::flat({{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {0, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}});
    const auto d = classical_dilate(f, sq);
    for (int y = 0; y < 7; ++y)
        for (int x = 0; x < 7; ++x) CHECK(d(x, y) == ((std::abs(x - 3) <= 1 && std::abs(y - 3) <= 1) ? 100.0 : 0.0));
}

TEST_CASE("kernels match the naive oracle") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const GreyImage f = test::random_image(rng, 8 + i % 5, 6 + i % 7, -100.0, 255.0);
        const auto b = test::random_sf(rng, 2);
        CHECK(test::identical(classical_dilate(f, b), oracle::naive_classical_dilate(f, b)));
        CHECK(test::identical(classical_erode(f, b), oracle::naive_classical_erode(f, b)));
        CHECK(test::diff(log_dilate(f, b), oracle::naive_log_dilate(f, b)) <= 1e-9);
        CHECK(test::diff(log_erode(f, b), oracle::naive_log_erode(f, b)) <= 1e-9);
        const std::size_t k = rng() % 3;
        if (k < b.size()) {
            CHECK(test::identical(rank_min(f, b, {k}), oracle::naive_rank_min(f, b, k)));
            CHECK(test::identical(rank_max(f, b, {k}), oracle::naive_rank_max(f, b, k)));
            CHECK(test::diff(log_rank_min(f, b, {k}), oracle::naive_log_rank_min(f, b, k)) <= 1e-9);
            CHECK(test::diff(log_rank_max(f, b, {k}), oracle::naive_log_rank_max(f, b, k)) <= 1e-9);
        }
    }
}

TEST_CASE("log operators stay below M") {
    GreyImage f(6, 6, 250.0);
    f(2, 2) = 255.9;
    const auto b = with_constant_value(make_disk(2), 200.0);
    for (double s : test::values(log_dilate(f, b))) CHECK(s <= 256.0);
    bool over = false;
    for (double s : test::values(classical_dilate(f, b))) over = over || s > 256.0;
    CHECK(over);
}

TEST_CASE("sentinel conventions") {
    GreyImage f(3, 1, 10.0);
    f(0, 0) = kNegInf;
    f(2, 0) = 256.0;
    const auto b = make_hline(1);
    const auto d = log_dilate(f, b);
    CHECK(d(0, 0) == kNegInf);
    CHECK(d(2, 0) == 256.0);
    const auto e = log_erode(f, b);
    CHECK(e(0, 0) == kNegInf);
    CHECK(e(2, 0) == 256.0);
    // A tap that never lands on the grid leaves the neutral values.
    const StructuringFunction far({{10, 0, 5.0}});
    CHECK(log_erode(f, far)(1, 0) == 256.0);
    CHECK(log_dilate(f, far)(1, 0) == kNegInf);
}

TEST_CASE("rank filters") {
    // Window values {3, 1, 2}: second smallest is 2.
    const GreyImage f(3, 1, std::vector<double>{3, 1, 2});
    const auto line = StructuringFunction::flat({{-1, 0}, {0, 0}, {1, 0}});
    CHECK(rank_min(f, line, {1})(1, 0) == 2.0);
    CHECK(rank_max(f, line, {1})(1, 0) == 2.0);
    CHECK(rank_max(f, line, {0})(1, 0) == 3.0);
    CHECK_THROWS_AS(rank_min(f, line, {3}), RankError);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const GreyImage g = test::random_image(rng, 10, 9);
        const auto b = test::random_sf(rng, 2, -30, 100, 4);
        CHECK(test::identical(rank_min(g, b, {0}), classical_erode(g, b)));
        CHECK(test::identical(rank_max(g, b, {0}), classical_dilate(g, b)));
        CHECK(test::identical(log_rank_min(g, b, {0}), log_erode(g, b)));
        CHECK(test::identical(log_rank_max(g, b, {0}), log_dilate(g, b)));
        const auto z1 = log_rank_min(g, b, {1}), z2 = log_rank_min(g, b, {2});
        const auto e = log_erode(g, b);
        auto a0 = e.samples(), a1 = z1.samples(), a2 = z2.samples();
        for (std::size_t j = 0; j < a0.size(); ++j) {
            CHECK(a0[j] <= a1[j]);
            CHECK(a1[j] <= a2[j]);
        }
    }
}

TEST_CASE("openings and closings") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const GreyImage f = test::random_image(rng, 12, 12, -200.0, 250.0);
        const auto b = test::random_sf(rng, 2, -20, 80);
        const auto o = log_open(f, b);
        const auto c = log_close(f, b);
        CHECK(test::diff(log_open(o, b), o) <= 1e-9);
        CHECK(test::diff(log_close(c, b), c) <= 1e-9);
        auto fs = f.samples(), os = o.samples(), cs = c.samples();
        for (std::size_t j = 0; j < fs.size(); ++j) {
            CHECK(os[j] <= fs[j] + 1e-9);
            CHECK(cs[j] >= fs[j] - 1e-9);
        }
        const auto co = classical_open(f, b);
        for (std::size_t j = 0; j < fs.size(); ++j) CHECK(co.samples()[j] <= fs[j] + 1e-9);
    }
}

TEST_CASE("output does not depend on the thread count") {
    std::mt19937_64 rng(1);
    const GreyImage f = test::random_image(rng, 40, 37);
    const auto b = test::random_sf(rng, 3);
    set_thread_count(1);
    const auto one = log_open(f, b);
    const auto r1 = log_rank_min(f, b, {1});
    set_thread_count(4);
    CHECK(test::identical(log_open(f, b), one));
    CHECK(test::identical(log_rank_min(f, b, {1}), r1));
    set_thread_count(0);
}

TEST_CASE("binary operators") {
    BinaryMask m(7, 7);
    m.set(3, 3, true);
    const auto cross = make_disk(1);
    const auto d = binary_dilate(m, cross);
    CHECK(d.count() == 5);
    CHECK(binary_erode(d, cross).count() == 1);
    BinaryMask full(5, 5, true);
    CHECK(binary_erode(full, make_disk(2)).count() == 25);
    BinaryMask gap(9, 3, true);
    gap.set(4, 1, false);
    CHECK(binary_close(gap, cross).count() == 27);
}
