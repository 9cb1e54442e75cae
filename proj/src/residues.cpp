#include "lmm/residues.hpp"

#include "lmm/error.hpp"
#include "lmm/morphology.hpp"

namespace lmm::residue {
namespace {

void require_flat(const StructuringFunction& B) {
    if (!B.is_flat()) throw DomainError("top-hat requires a flat structuring element");
}

}  // namespace

GreyImage difference(const GreyImage& a, const GreyImage& b) {
    if (!a.same_shape(b)) throw DomainError("image shapes differ");
    GreyImage out = a;
    auto dst = out.samples();
    auto src = b.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = dst[i] == src[i] ? 0.0 : dst[i] - src[i];
    return out;
}

GreyImage lip_difference(const GreyImage& a, const GreyImage& b) {
    if (!a.same_shape(b)) throw DomainError("image shapes differ");
    GreyImage out = a;
    const double M = a.M();
    auto dst = out.samples();
    auto src = b.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = lip::residue(dst[i], src[i], M);
    return out;
}

GreyImage top_hat(const GreyImage& f, const StructuringFunction& B) {
    require_flat(B);
    return difference(f, morph::classical_open(f, B));
}

GreyImage bottom_hat(const GreyImage& f, const StructuringFunction& B) {
    require_flat(B);
    return difference(morph::classical_close(f, B), f);
}

GreyImage lip_top_hat(const GreyImage& f, const StructuringFunction& B) {
    require_flat(B);
    return lip_difference(f, morph::classical_open(f, B));
}

GreyImage extended_top_hat(const GreyImage& f, const StructuringFunction& b) {
    return difference(f, morph::classical_open(f, b));
}

GreyImage extended_lip_top_hat(const GreyImage& f, const StructuringFunction& b) {
    return lip_difference(f, morph::log_open(f, b));
}

GreyImage bump_side(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& side) {
    b.require_restriction(side);
    return lip_difference(morph::log_erode(f, side), morph::log_erode(f, b));
}

GreyImage bump_detector(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& left,
                        const StructuringFunction& right) {
    b.require_restriction(left);
    b.require_restriction(right);
    const GreyImage contact = morph::log_erode(f, b);
    return morph::pointwise_max(lip_difference(morph::log_erode(f, left), contact),
                                lip_difference(morph::log_erode(f, right), contact));
}

GreyImage diff_log_openings(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& b_r) {
    return lip_difference(morph::log_open(f, b), morph::log_open(f, b_r));
}

GreyImage diff_openings(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& b_r) {
    return difference(morph::classical_open(f, b), morph::classical_open(f, b_r));
}

}  // namespace lmm::residue
