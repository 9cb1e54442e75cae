#pragma once

// Residue operators: top-hats and their extensions, bump detectors and
// differences of openings. The logarithmic ones are unchanged when a constant
// is LIP-added to the image; the classical ones only under ordinary addition.

#include "lmm/image.hpp"
#include "lmm/structuring.hpp"

namespace lmm::residue {

/// f - γ_B(f) for a flat B.
GreyImage top_hat(const GreyImage& f, const StructuringFunction& B);
/// φ_B(f) - f for a flat B.
GreyImage bottom_hat(const GreyImage& f, const StructuringFunction& B);
/// f ⊟ γ_B(f) for a flat B (classical and logarithmic openings coincide).
GreyImage lip_top_hat(const GreyImage& f, const StructuringFunction& B);

/// R_b(f) = f - γ_b(f) with the classical opening by a possibly non-flat b.
GreyImage extended_top_hat(const GreyImage& f, const StructuringFunction& b);
/// R^⊞_b(f) = f ⊟ γ^⊞_b(f).
GreyImage extended_lip_top_hat(const GreyImage& f, const StructuringFunction& b);

/// Left (or right) detector ε^⊞_{side}(f) ⊟ ε^⊞_b(f), where `side` is the
/// restriction of the probe b to its left (or right) sub-support.
GreyImage bump_side(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& side);
inline GreyImage bump_left(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& left) {
    return bump_side(f, b, left);
}
inline GreyImage bump_right(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& right) {
    return bump_side(f, b, right);
}

/// E(b, f): pointwise sup of the left and right detectors. Bumps similar
/// to the probe show up as deep minima.
GreyImage bump_detector(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& left,
                        const StructuringFunction& right);

/// G^⊞_b(f) = γ^⊞_b(f) ⊟ γ^⊞_{b_r}(f).
GreyImage diff_log_openings(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& b_r);
/// G_b(f) = γ_b(f) - γ_{b_r}(f).
GreyImage diff_openings(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& b_r);

/// Pointwise a - b, exactly 0 on equality (also for equal infinities).
GreyImage difference(const GreyImage& a, const GreyImage& b);
/// Pointwise a ⊟ b, exactly 0 on equality.
GreyImage lip_difference(const GreyImage& a, const GreyImage& b);

}  // namespace lmm::residue
