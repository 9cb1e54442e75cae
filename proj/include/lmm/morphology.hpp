#pragma once

// Classical (functional) and logarithmic grey-level morphology.
//
// Conventions: dilations are sup{ f(x-h) op b(h) }, erosions are
// inf{ f(x+h) op b(h) }. Offsets falling off the grid are skipped, which is
// the same as padding with the neutral element of the reduction (-inf for
// suprema, +inf for classical infima, M for logarithmic infima).

#include "lmm/image.hpp"
#include "lmm/structuring.hpp"

#include <cstddef>

namespace lmm::morph {

/// Number of extremal window samples discarded by a rank filter; k = 0
/// selects the extremum itself.
struct RankIndex {
    std::size_t k = 0;
};

GreyImage classical_dilate(const GreyImage& f, const StructuringFunction& b);
GreyImage classical_erode(const GreyImage& f, const StructuringFunction& b);
GreyImage classical_open(const GreyImage& f, const StructuringFunction& b);
GreyImage classical_close(const GreyImage& f, const StructuringFunction& b);

GreyImage log_dilate(const GreyImage& f, const StructuringFunction& b);
GreyImage log_erode(const GreyImage& f, const StructuringFunction& b);
GreyImage log_open(const GreyImage& f, const StructuringFunction& b);
GreyImage log_close(const GreyImage& f, const StructuringFunction& b);

// Rank filters. k must be smaller than the support size (RankError
// otherwise). When the border shrinks the gathered window to n <= k samples,
// k is clamped to n - 1.
GreyImage rank_min(const GreyImage& f, const StructuringFunction& b, RankIndex k);
GreyImage rank_max(const GreyImage& f, const StructuringFunction& b, RankIndex k);
GreyImage log_rank_min(const GreyImage& f, const StructuringFunction& b, RankIndex k);
GreyImage log_rank_max(const GreyImage& f, const StructuringFunction& b, RankIndex k);

GreyImage pointwise_min(const GreyImage& a, const GreyImage& b);
GreyImage pointwise_max(const GreyImage& a, const GreyImage& b);

// Binary morphology on masks, using only the support of `domain`. Off-grid
// pixels count as set for erosion and unset for dilation.
BinaryMask binary_erode(const BinaryMask& m, const StructuringFunction& domain);
BinaryMask binary_dilate(const BinaryMask& m, const StructuringFunction& domain);
BinaryMask binary_close(const BinaryMask& m, const StructuringFunction& domain);

}  // namespace lmm::morph
