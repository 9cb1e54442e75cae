#include "doctest.h"

#include "../support.hpp"
#include "lmm/error.hpp"
#include "lmm/image.hpp"
#include "lmm/structuring.hpp"

#include <algorithm>
#include <random>

using namespace lmm;

TEST_CASE("negate_image") {
    GreyImage zero(4, 3, 0.0);
    CHECK(test::identical(negate_image(zero), zero));
    GreyImage half(4, 3, 128.0);
    for (double s : test::values(negate_image(half))) CHECK(s == -256.0);
    std::mt19937_64 rng(3);
    const GreyImage f = test::random_image(rng, 9, 7, -500, 250);
    CHECK(test::diff(negate_image(negate_image(f)), f) <= 1e-9);
}

TEST_CASE("image construction and bounds") {
    CHECK_THROWS(GreyImage(2, 2, std::vector<double>(3)));
    GreyImage f(3, 3, 1.0);
    CHECK(f.within_bound());
    f(1, 1) = 257.0;
    CHECK_FALSE(f.within_bound());
    f(1, 1) = kNegInf;
    CHECK(f.within_bound());
}

TEST_CASE("reflect") {
    const auto disk = make_disk(2);
    CHECK(reflect(disk).same_as(disk));
    const StructuringFunction one({{1, 0, 5.0}});
    const auto r = reflect(one);
    REQUIRE(r.size() == 1);
    CHECK(r.taps()[0] == Tap{-1, 0, 5.0});
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        const auto b = test::random_sf(rng);
        CHECK(reflect(reflect(b)).same_as(b));
        CHECK(reflect(lip_negate_sf(b)).same_as(lip_negate_sf(reflect(b))));
    }
}

TEST_CASE("lip_negate_sf") {
    const auto b = with_constant_value(make_disk(1), 128.0);
    const auto nb = lip_negate_sf(b);
    for (const auto& t : nb.taps()) CHECK(t.value == -256.0);
    const auto z = make_disk(1);
    CHECK(lip_negate_sf(z).same_as(z));
    CHECK_THROWS_AS(lip_negate_sf(StructuringFunction({{0, 0, 256.0}})), SingularityError);
}

TEST_CASE("structuring function validation") {
    CHECK_THROWS_AS(StructuringFunction(std::vector<Tap>{}), DomainError);
    CHECK_THROWS_AS(StructuringFunction({{0, 0, 1.0}, {0, 0, 2.0}}), DomainError);
    CHECK_THROWS_AS(StructuringFunction({{0, 0, kNegInf}}), DomainError);
    CHECK(make_disk(1).is_flat());
    CHECK_FALSE(with_constant_value(make_disk(1), 3.0).is_flat());
}

TEST_CASE("generators") {
    const auto cross = make_disk(1);
    CHECK(cross.size() == 5);
    CHECK(cross.contains(0, 0));
    CHECK(cross.contains(-1, 0));
    CHECK_FALSE(cross.contains(1, 1));
    CHECK_THROWS_AS(make_disk(0), GeometryError);

    const auto hemi = make_half_sphere(16, 127.0, 2.0);
    CHECK(*hemi.at(0, 0) == doctest::Approx(127.0 + 32.0));
    CHECK(*hemi.at(16, 0) == doctest::Approx(127.0));
    CHECK(hemi.size() == make_disk(16).size());
    CHECK_THROWS_AS(make_half_sphere(4, 250.0, 3.0), DomainError);

    CHECK_THROWS_AS(make_ring(3, 3, 1.0), GeometryError);
    const auto ring = make_ring(2, 3, 7.0);
    CHECK_FALSE(ring.contains(0, 0));
    CHECK(ring.contains(3, 0));
    CHECK(reflect(ring).same_as(ring));

    const auto gr = make_gaussian_ring({});
    CHECK(*gr.at(0, 0) == doctest::Approx(60.0));
    CHECK(gr.contains(7, 0));
    CHECK(reflect(gr).same_as(gr));
    for (const auto* b : {&cross, &hemi, &ring, &gr}) {
        const auto box = b->bounding_box();
        for (const auto& t : b->taps()) {
            CHECK(t.dx >= box.min_dx);
            CHECK(t.dx <= box.max_dx);
            CHECK(t.dy >= box.min_dy);
            CHECK(t.dy <= box.max_dy);
        }
    }
}

TEST_CASE("structuring function raster round trip") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const auto b = test::random_sf(rng, 3, 0.0, 200.0);
        const auto raster = sf_to_image(b);
        // Off-support pixels become -inf and are dropped again.
        CHECK(sf_from_image(raster.image, raster.origin_x, raster.origin_y).same_as(b));
    }
    CHECK_NOTHROW(make_disk(2).require_restriction(make_disk(1)));
    CHECK_THROWS_AS(make_disk(1).require_restriction(make_disk(2)), GeometryError);
}
