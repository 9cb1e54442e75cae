#include "doctest.h"

#include "lmm/error.hpp"
#include "lmm/lip.hpp"

#include <cmath>
#include <random>

using namespace lmm;

namespace {
GreyValue v(double x) { return {x, 256.0}; }
}

TEST_CASE("lip_add laws") {
    CHECK(lip_add(v(77.5), v(0)).value == 77.5);
    CHECK(lip_add(v(128), v(128)).value == doctest::Approx(192.0).epsilon(1e-15));
    CHECK(lip_add(v(77.3), lip_negate(v(77.3))).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(lip_add(v(256), v(10)).value == 256.0);
    CHECK(lip_add(v(kNegInf), v(10)).value == kNegInf);
    CHECK_THROWS_AS(lip_add(v(256), v(kNegInf)), DomainError);
    CHECK_THROWS_AS(lip_add(v(1), GreyValue{1, 100}), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(-5 * 256.0, 255.9);
    for (int i = 0; i < 1000; ++i) {
        const double a = d(rng), b = d(rng), c = d(rng);
        const double ab_c = lip_add(lip_add(v(a), v(b)), v(c)).value;
        const double a_bc = lip_add(v(a), lip_add(v(b), v(c))).value;
        CHECK(std::abs(ab_c - a_bc) <= 1e-9 * std::max(1.0, std::abs(ab_c) / 256.0));
        CHECK(lip_add(v(a), v(b)).value == lip_add(v(b), v(a)).value);
        CHECK(std::abs(lip_sub(lip_add(v(a), v(b)), v(b)).value - a) <= 1e-9 * std::max(1.0, std::abs(a) / 256.0));
        const double lo = std::min(a, b), hi = std::max(a, b);
        CHECK(lip_add(v(lo), v(c)).value <= lip_add(v(hi), v(c)).value);
    }
}

TEST_CASE("lip_negate and lip_sub") {
    CHECK(lip_negate(v(0)).value == 0.0);
    CHECK(lip_negate(v(128)).value == -256.0);
    CHECK(lip_negate(lip_negate(v(77.3))).value == doctest::Approx(77.3).epsilon(1e-14));
    CHECK_THROWS_AS(lip_negate(v(256)), SingularityError);

    CHECK(lip_sub(v(42), v(42)).value == 0.0);
    CHECK(lip_sub(v(192), v(128)).value == 128.0);
    CHECK(lip_sub(v(42), v(0)).value == 42.0);
    CHECK_THROWS_AS(lip_sub(v(10), v(256)), SingularityError);
    CHECK(lip_sub(v(256), v(256)).value == 256.0);
    CHECK(lip_sub(v(30), v(50)).value < 0.0);
}

TEST_CASE("lip_scalar_mul") {
    CHECK(lip_scalar_mul(1.0, v(99.25)).value == doctest::Approx(99.25).epsilon(1e-14));
    CHECK(lip_scalar_mul(2.0, v(128)).value == doctest::Approx(192.0).epsilon(1e-14));
    CHECK(lip_scalar_mul(0.0, v(128)).value == 0.0);
    CHECK(lip_scalar_mul(3.0, v(256)).value == 256.0);
    CHECK(lip_scalar_mul(0.0, v(256)).value == 0.0);
    CHECK(lip_scalar_mul(2.0, v(31)).value == doctest::Approx(lip_add(v(31), v(31)).value).epsilon(1e-14));
}

TEST_CASE("xi isomorphism") {
    CHECK(xi(v(0)) == 0.0);
    CHECK(xi(v(128)) == doctest::Approx(256.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(xi(v(256)) == kPosInf);
    CHECK(xi(v(kNegInf)) == kNegInf);
    CHECK(xi_inv(kPosInf).value == 256.0);
    CHECK(xi_inv(kNegInf).value == kNegInf);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-10 * 256.0, 256.0 - 1e-6);
    std::uniform_real_distribution<double> e(-2 * 256.0, 250.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = d(rng);
        CHECK(std::abs(xi_inv(xi(v(a))).value - a) <= 1e-9 * std::max(1.0, std::abs(a) / 256.0));
        const double p = e(rng), q = e(rng);
        const double lhs = xi(lip_add(v(p), v(q)));
        CHECK(std::abs(lhs - (xi(v(p)) + xi(v(q)))) <= 1e-9 * std::max(1.0, std::abs(lhs) / 256.0));
        CHECK(xi(v(std::min(p, q))) <= xi(v(std::max(p, q))));
    }
}

TEST_CASE("luminance") {
    CHECK(luminance(255, 255, 255).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(luminance(0, 0, 0).value == 255.0);
    CHECK(luminance(100, 150, 50).value == doctest::Approx(131.35).epsilon(1e-12));
    CHECK_THROWS_AS(luminance(256, 0, 0), DomainError);
    CHECK_THROWS_AS(luminance(-1, 0, 0), DomainError);
}

TEST_CASE("unchecked conventions") {
    const double M = 256.0;
    CHECK(lip::add_dilation(kNegInf, M, M) == kNegInf);
    CHECK(lip::add_dilation(M, 3, M) == M);
    CHECK(lip::sub_erosion(M, kNegInf, M) == M);
    CHECK(lip::sub_erosion(3, kNegInf, M) == M);
    CHECK(lip::sub_erosion(kNegInf, 3, M) == kNegInf);
    CHECK(lip::contrast(M, M, M) == M);
    CHECK(lip::contrast(kNegInf, kNegInf, M) == M);
    CHECK(lip::contrast(12, 12, M) == 0.0);
    CHECK(lip::negate_extended(M, M) == kNegInf);
}
