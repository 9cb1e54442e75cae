#include "doctest.h"

#include "../support.hpp"
#include "lmm/asplund.hpp"
#include "lmm/error.hpp"
#include "lmm/morphology.hpp"
#include "lmm/oracle.hpp"

#include <random>

using namespace lmm;
using namespace lmm::asplund;

TEST_CASE("tolerance counts") {
    const auto t = ToleranceParams::from(0.85, 21);
    CHECK(t.n_suppr == 3);
    CHECK(t.n1 == 2);
    CHECK(t.n2 == 1);
    const auto one = ToleranceParams::from(1.0, 21);
    CHECK(one.n_suppr == 0);
    // 0.5 rounds away from zero: n_suppr = round(2.5) = 3.
    CHECK(ToleranceParams::from(0.5, 5).n_suppr == 3);
    CHECK_THROWS_AS(ToleranceParams::from(0.0, 5), DomainError);
    CHECK_THROWS_AS(ToleranceParams::from(1.5, 5), DomainError);
    CHECK_THROWS_AS(ToleranceParams::from(0.05, 5), RankError);
}

TEST_CASE("mlub and mglb") {
    std::mt19937_64 rng(17);
    const GreyImage f = test::random_image(rng, 11, 9);
    const auto B = make_disk(1);
    CHECK(test::identical(mlub(f, B), morph::classical_dilate(f, B)));
    CHECK(test::identical(mglb(f, B), morph::classical_erode(f, B)));

    for (int i = 0; i < 100; ++i) {
        const GreyImage g = test::random_image(rng, 10, 10, -50, 250);
        const auto b = test::random_sf(rng, 2);
        CHECK(test::diff(mlub(g, b), oracle::naive_mlub(g, b)) <= 1e-9);
        CHECK(test::diff(mglb(g, b), oracle::naive_mglb(g, b)) <= 1e-9);
        CHECK(test::diff(asplund_map(g, b), oracle::naive_asplund(g, b)) <= 1e-9);
        for (double s : test::values(asplund_map(g, b))) CHECK(s >= 0.0);
    }
}

TEST_CASE("probe contact gives zero distance") {
    const auto b = make_gaussian_ring({2, 1.0, 50.0, 5.0, 3, 4, 20.0});
    GreyImage f(15, 15, 0.0);
    std::mt19937_64 rng(3);
    f = test::random_image(rng, 15, 15, 0, 30);
    const double c = 37.5;
    for (const auto& t : b.taps()) f(7 + t.dx, 7 + t.dy) = lip::add(c, t.value, 256.0);
    CHECK(mlub(f, b)(7, 7) == doctest::Approx(c).epsilon(1e-12));
    CHECK(mglb(f, b)(7, 7) == doctest::Approx(c).epsilon(1e-12));
    CHECK(asplund_map(f, b)(7, 7) <= 1e-9);
}

TEST_CASE("flat and constant probes give the LIP gradient") {
    std::mt19937_64 rng(23);
    const auto B = make_disk(2);
    for (int i = 0; i < 20; ++i) {
        const GreyImage f = test::random_image(rng, 12, 12);
        CHECK(test::identical(asplund_map(f, B), lip_gradient(f, B)));
        CHECK(test::diff(asplund_map(f, with_constant_value(B, 35.0)), lip_gradient(f, B)) <= 1e-9);
    }
    CHECK_THROWS_AS(lip_gradient(GreyImage(3, 3), with_constant_value(B, 1.0)), DomainError);
}

TEST_CASE("gradients of a step edge") {
    GreyImage f(8, 3, 40.0);
    for (int y = 0; y < 3; ++y)
        for (int x = 4; x < 8; ++x) f(x, y) = 100.0;
    const auto B = make_disk(1);
    const auto g = classical_gradient(f, B);
    const auto lg = lip_gradient(f, B);
    CHECK(g(3, 1) == 60.0);
    CHECK(lg(3, 1) == doctest::Approx(60.0 / (1.0 - 40.0 / 256.0)).epsilon(1e-14));
    CHECK(g(0, 1) == 0.0);
    for (double s : test::values(lip_gradient(GreyImage(5, 5, 77.0), B))) CHECK(s == 0.0);
}

TEST_CASE("flat zone constant") {
    const auto b = make_half_sphere(2, 10.0, 15.0);
    GreyImage f(20, 20, 0.0);
    std::mt19937_64 rng(1);
    f = test::random_image(rng, 20, 20, 0, 200);
    BinaryMask Y(20, 20);
    for (int y = 5; y < 15; ++y)
        for (int x = 4; x < 16; ++x) {
            f(x, y) = 120.0;
            Y.set(x, y, true);
        }
    const auto core = morph::binary_erode(Y, b);
    const double expected = lip::sub(b.sup(), b.inf(), 256.0);
    const auto asp = asplund_map(f, b);
    std::size_t n = 0;
    for (int y = 0; y < 20; ++y)
        for (int x = 0; x < 20; ++x)
            if (core(x, y)) {
                ++n;
                CHECK(asp(x, y) == doctest::Approx(expected).epsilon(1e-12));
            }
    CHECK(n == 6 * 8);
}

TEST_CASE("tolerance maps") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        const GreyImage f = test::random_image(rng, 10, 10, -20, 250);
        const auto b = test::random_sf(rng, 2, -20, 100, 8);
        CHECK(test::identical(asplund_map_tol(f, b, 1.0), asplund_map(f, b)));
        CHECK(test::diff(asplund_map_tol(f, b, 0.8), oracle::naive_asplund_tol(f, b, 0.8)) <= 1e-9);
        CHECK(test::identical(classical_tol_map(f, b, 0.8), oracle::naive_classical_tol(f, b, 0.8)));
        GreyImage shifted = f;
        for (double& v : shifted.samples()) v += 13.0;
        CHECK(test::diff(classical_tol_map(shifted, b, 0.8), classical_tol_map(f, b, 0.8)) <= 1e-9);
    }
    const auto B = make_disk(1);
    const GreyImage f = test::random_image(rng, 8, 8);
    CHECK(test::identical(classical_tol_map(f, B, 1.0), classical_gradient(f, B)));
}

TEST_CASE("illumination invariance") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 30; ++i) {
        const GreyImage f = test::random_image(rng, 12, 12, 0, 250);
        const auto b = test::random_sf(rng, 2, 0, 100, 6);
        for (double c : {-300.0, -40.0, 60.0, 200.0}) {
            const GreyImage g = lip_add_constant(f, c);
            CHECK(test::diff(asplund_map(g, b), asplund_map(f, b)) <= 1e-9);
            CHECK(test::diff(asplund_map_tol(g, b, 0.85), asplund_map_tol(f, b, 0.85)) <= 1e-9);
        }
    }
}
