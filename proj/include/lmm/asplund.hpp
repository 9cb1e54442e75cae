#pragma once

// Maps of LIP-additive Asplund distances and the morphological gradients
// they extend.

#include "lmm/image.hpp"
#include "lmm/morphology.hpp"
#include "lmm/structuring.hpp"

#include <cstddef>

namespace lmm::asplund {

/// Number of extreme window samples discarded by a tolerance p:
/// n_suppr = round((1 - p) · #D_b), n1 = round(n_suppr / 2), n2 = n_suppr - n1,
/// with round() half away from zero.
struct ToleranceParams {
    double p = 1.0;
    std::size_t n_suppr = 0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;

    /// Throws DomainError when p is outside (0, 1] and RankError when the
    /// discarded samples would exhaust the support.
    static ToleranceParams from(double p, std::size_t support_size);
};

/// Map of least upper bounds: sup{ f(x+h) ⊟ b(h) }, computed as the
/// logarithmic dilation by ⊟b̄.
GreyImage mlub(const GreyImage& f, const StructuringFunction& b);

/// Map of greatest lower bounds: the logarithmic erosion by b.
GreyImage mglb(const GreyImage& f, const StructuringFunction& b);

/// mlub ⊟ mglb, with M where mlub = M or mglb = -inf and 0 where both agree.
GreyImage asplund_map(const GreyImage& f, const StructuringFunction& b);

/// Tolerant variant: the n1-th maximum by ⊟b̄ LIP-minus the n2-th minimum
/// by b.
GreyImage asplund_map_tol(const GreyImage& f, const StructuringFunction& b, double p);

/// Classical counterpart A_{b,p}: rank_max(f, -b̄, n1) - rank_min(f, b, n2).
GreyImage classical_tol_map(const GreyImage& f, const StructuringFunction& b, double p);

/// δ_B(f) - ε_B(f).
GreyImage classical_gradient(const GreyImage& f, const StructuringFunction& B);

/// δ_B(f) ⊟ ε_B(f) with the classical dilation and erosion by the flat B.
GreyImage lip_gradient(const GreyImage& f, const StructuringFunction& B);

/// Pointwise upper ⊟ lower under the Asplund conventions.
GreyImage contrast_map(const GreyImage& upper, const GreyImage& lower);

}  // namespace lmm::asplund
