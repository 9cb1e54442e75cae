#pragma once

// Brute-force reference implementations. They evaluate the
// definitions literally, pixel by pixel, and share no kernel code with the
// optimized operators. Images are limited to 64x64.

#include "lmm/image.hpp"
#include "lmm/structuring.hpp"

#include <cstddef>

namespace lmm::oracle {

inline constexpr int kMaxSide = 64;

GreyImage naive_classical_dilate(const GreyImage& f, const StructuringFunction& b);
GreyImage naive_classical_erode(const GreyImage& f, const StructuringFunction& b);
GreyImage naive_log_dilate(const GreyImage& f, const StructuringFunction& b);
GreyImage naive_log_erode(const GreyImage& f, const StructuringFunction& b);

/// Sort-based k-th minimum / maximum with the library's border rule (k clamped
/// to the gathered window size minus one).
GreyImage naive_rank_min(const GreyImage& f, const StructuringFunction& b, std::size_t k);
GreyImage naive_rank_max(const GreyImage& f, const StructuringFunction& b, std::size_t k);
GreyImage naive_log_rank_min(const GreyImage& f, const StructuringFunction& b, std::size_t k);
GreyImage naive_log_rank_max(const GreyImage& f, const StructuringFunction& b, std::size_t k);

// Logarithmic operators computed as xi^-1 ∘ classical ∘ xi.
GreyImage xi_log_dilate(const GreyImage& f, const StructuringFunction& b);
GreyImage xi_log_erode(const GreyImage& f, const StructuringFunction& b);
GreyImage xi_log_rank_min(const GreyImage& f, const StructuringFunction& b, std::size_t k);
GreyImage xi_log_rank_max(const GreyImage& f, const StructuringFunction& b, std::size_t k);

/// xi applied to the values of a structuring function.
StructuringFunction xi_sf(const StructuringFunction& b, double M);

// Asplund maps from their definitions (no reflection or negated probe).
GreyImage naive_mlub(const GreyImage& f, const StructuringFunction& b);
GreyImage naive_mglb(const GreyImage& f, const StructuringFunction& b);
GreyImage naive_asplund(const GreyImage& f, const StructuringFunction& b);
GreyImage naive_asplund_tol(const GreyImage& f, const StructuringFunction& b, double p);
GreyImage naive_classical_tol(const GreyImage& f, const StructuringFunction& b, double p);

/// Side detector in its contact form: inf over the side's taps of
/// f(x+h) ⊟ [side(h) ⊞ mglb_b(f)(x)].
GreyImage naive_bump_side(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& side);

/// Mann-Whitney estimate of the AUC for "low map value = positive":
/// mean over positive/negative pairs of [s_pos > s_neg] + 0.5 [s_pos = s_neg].
double auc_mann_whitney(const GreyImage& map, const BinaryMask& truth, const BinaryMask& region);

/// (M-1) - floor((M-1-f) ⊞ c), clamped to [0, M-1], for one integer value.
int darken_scalar(int f, double c, double M);

}  // namespace lmm::oracle
