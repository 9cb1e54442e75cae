#include "lmm/asplund.hpp"

#include "lmm/error.hpp"

#include <cmath>
#include <string>

namespace lmm::asplund {
namespace {

StructuringFunction classical_mirror(const StructuringFunction& b) {
    std::vector<Tap> taps = reflect(b).taps();
    for (Tap& t : taps) t.value = -t.value;
    return StructuringFunction(std::move(taps));
}

void require_flat(const StructuringFunction& B) {
    if (!B.is_flat()) throw DomainError("gradient requires a flat structuring element");
}

}  // namespace

ToleranceParams ToleranceParams::from(double p, std::size_t support_size) {
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("tolerance p must lie in (0, 1]");
    ToleranceParams t;
    t.p = p;
    t.n_suppr = static_cast<std::size_t>(std::round((1.0 - p) * static_cast<double>(support_size)));
    t.n1 = static_cast<std::size_t>(std::round(static_cast<double>(t.n_suppr) / 2.0));
    t.n2 = t.n_suppr - t.n1;
    if (t.n_suppr >= support_size)
        throw RankError("tolerance discards " + std::to_string(t.n_suppr) + " of " +
                        std::to_string(support_size) + " support points");
    return t;
}

GreyImage mlub(const GreyImage& f, const StructuringFunction& b) {
    return morph::log_dilate(f, lip_negate_sf(reflect(b), f.M()));
}

GreyImage mglb(const GreyImage& f, const StructuringFunction& b) { return morph::log_erode(f, b); }

GreyImage contrast_map(const GreyImage& upper, const GreyImage& lower) {
    if (!upper.same_shape(lower)) throw DomainError("image shapes differ");
    GreyImage out = upper;
    const double M = upper.M();
    auto dst = out.samples();
    auto lo = lower.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = lip::contrast(dst[i], lo[i], M);
    return out;
}

GreyImage asplund_map(const GreyImage& f, const StructuringFunction& b) {
    return contrast_map(mlub(f, b), mglb(f, b));
}

GreyImage asplund_map_tol(const GreyImage& f, const StructuringFunction& b, double p) {
    const auto tol = ToleranceParams::from(p, b.size());
    const GreyImage upper = morph::log_rank_max(f, lip_negate_sf(reflect(b), f.M()), {tol.n1});
    const GreyImage lower = morph::log_rank_min(f, b, {tol.n2});
    return contrast_map(upper, lower);
}

GreyImage classical_tol_map(const GreyImage& f, const StructuringFunction& b, double p) {
    const auto tol = ToleranceParams::from(p, b.size());
    GreyImage out = morph::rank_max(f, classical_mirror(b), {tol.n1});
    const GreyImage lower = morph::rank_min(f, b, {tol.n2});
    auto dst = out.samples();
    auto lo = lower.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        if (dst[i] == kNegInf && lo[i] == kPosInf) dst[i] = kPosInf;  // empty window
        else dst[i] = dst[i] == lo[i] ? 0.0 : dst[i] - lo[i];
    }
    return out;
}

GreyImage classical_gradient(const GreyImage& f, const StructuringFunction& B) {
    require_flat(B);
    GreyImage out = morph::classical_dilate(f, B);
    const GreyImage lower = morph::classical_erode(f, B);
    auto dst = out.samples();
    auto lo = lower.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = dst[i] == lo[i] ? 0.0 : dst[i] - lo[i];
    return out;
}

GreyImage lip_gradient(const GreyImage& f, const StructuringFunction& B) {
    require_flat(B);
    return contrast_map(morph::classical_dilate(f, B), morph::classical_erode(f, B));
}

}  // namespace lmm::asplund
