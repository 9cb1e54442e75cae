#pragma once

// Logarithmic Image Processing (LIP) arithmetic on the bounded grey scale
// ]-inf, M]. The scale is inverted: 0 is white (full transmittance) and M is
// black (no light passes).

#include <cmath>
#include <limits>

namespace lmm {

inline constexpr double kDefaultM = 256.0;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

/// Extended grey value tagged with the bound M of its scale. Values lie in
/// [-inf, M]; M and -inf are representable sentinels.
struct GreyValue {
    double value = 0.0;
    double M = kDefaultM;

    bool is_upper() const noexcept { return value == M; }
    bool is_lower() const noexcept { return value == kNegInf; }
};

// Checked scalar laws. They reject operands from different scales and any
// sentinel combination the algebra leaves undefined.
GreyValue lip_add(GreyValue a, GreyValue b);
GreyValue lip_negate(GreyValue a);
GreyValue lip_sub(GreyValue a, GreyValue b);
GreyValue lip_scalar_mul(double lambda, GreyValue a);

/// xi(a) = -M ln(1 - a/M); maps M to +inf and -inf to -inf.
double xi(GreyValue a);
/// xi_inv(v) = M (1 - exp(-v/M)); maps +inf to M and -inf to -inf.
GreyValue xi_inv(double v, double M = kDefaultM);

/// Luminance of an RGB triple expressed in the (inverted) LIP scale:
/// M - 1 - (0.299 r + 0.587 g + 0.114 b).
GreyValue luminance(double r, double g, double b, double M = kDefaultM);

namespace lip {

// Unchecked kernels on raw doubles, used inside the image operators. Callers
// are responsible for the per-operator sentinel conventions.

inline double add(double a, double b, double M) noexcept { return a + b - a * b / M; }
inline double sub(double a, double b, double M) noexcept { return (a - b) / (1.0 - b / M); }
inline double negate(double a, double M) noexcept { return -a / (1.0 - a / M); }

inline double xi(double a, double M) noexcept {
    if (a == M) return kPosInf;
    return -M * std::log1p(-a / M);
}

inline double xi_inv(double v, double M) noexcept {
    if (v == kPosInf) return M;
    if (v == kNegInf) return kNegInf;
    return -M * std::expm1(-v / M);
}

/// f ⊞ b under the dilation convention (-inf absorbs, then M absorbs).
inline double add_dilation(double f, double b, double M) noexcept {
    if (f == kNegInf || b == kNegInf) return kNegInf;
    if (f == M || b == M) return M;
    return add(f, b, M);
}

/// f ⊟ b under the erosion convention (M when f = M or b = -inf).
inline double sub_erosion(double f, double b, double M) noexcept {
    if (f == M || b == kNegInf) return M;
    if (b == M || f == kNegInf) return kNegInf;
    return sub(f, b, M);
}

/// Pointwise negation extended to the sentinels: -inf <-> M.
inline double negate_extended(double a, double M) noexcept {
    if (a == M) return kNegInf;
    if (a == kNegInf) return M;
    return negate(a, M);
}

/// Contrast `upper ⊟ lower` of a pair with upper >= lower, following the
/// Asplund conventions: M when upper = M or lower = -inf, 0 when equal.
inline double contrast(double upper, double lower, double M) noexcept {
    if (upper == M || lower == kNegInf) return M;
    // No on-grid sample at all: nothing matches, report the largest distance.
    if (upper == kNegInf && lower == M) return M;
    // Equal bounds, or rounding putting the upper bound a hair below.
    if (!(upper > lower)) return 0.0;
    return sub(upper, lower, M);
}

/// Residue `a ⊟ b` of two maps that may coincide: exactly 0 on equality,
/// otherwise the erosion-side extension of ⊟.
inline double residue(double a, double b, double M) noexcept {
    if (a == b) return 0.0;
    return sub_erosion(a, b, M);
}

}  // namespace lip
}  // namespace lmm
