#include "lmm/morphology.hpp"

#include "lmm/error.hpp"
#include "lmm/parallel.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace lmm::morph {
namespace {

// Source offset sign: dilations read f(x - h), erosions read f(x + h).
constexpr int kDilation = -1;
constexpr int kErosion = +1;

struct ClassicalAdd {
    double operator()(double f, double b, double) const noexcept { return f == kNegInf ? kNegInf : f + b; }
};
struct ClassicalSub {
    double operator()(double f, double b, double) const noexcept { return f == kPosInf ? kPosInf : f - b; }
};
struct LogAdd {
    double operator()(double f, double b, double M) const noexcept { return lip::add_dilation(f, b, M); }
};
struct LogSub {
    double operator()(double f, double b, double M) const noexcept { return lip::sub_erosion(f, b, M); }
};

struct Min {
    double operator()(double acc, double v) const noexcept { return v < acc ? v : acc; }
};
struct Max {
    double operator()(double acc, double v) const noexcept { return v > acc ? v : acc; }
};

// Tap-major sweep: for every tap, fold the shifted row into the output row.
template <class Combine, class Reduce>
GreyImage sweep(const GreyImage& f, const StructuringFunction& b, int sign, double neutral,
                Combine combine, Reduce reduce) {
    const int W = f.width();
    const int H = f.height();
    const double M = f.M();
    GreyImage out(W, H, neutral, M);
    parallel_rows(H, [&](int y0, int y1) {
        for (const Tap& t : b.taps()) {
            const int ox = sign * t.dx;
            const int oy = sign * t.dy;
            const int xb = std::max(0, -ox);
            const int xe = std::min(W, W - ox);
            if (xb >= xe) continue;
            for (int y = y0; y < y1; ++y) {
                const int sy = y + oy;
                if (sy < 0 || sy >= H) continue;
                const double* src = f.row(sy).data() + ox;
                double* dst = out.row(y).data();
                for (int x = xb; x < xe; ++x) dst[x] = reduce(dst[x], combine(src[x], t.value, M));
            }
        }
    });
    return out;
}

template <class Combine, class Reduce, class Compare>
GreyImage rank_sweep(const GreyImage& f, const StructuringFunction& b, int sign, double neutral,
                     Combine combine, Reduce reduce, Compare order, RankIndex rank) {
    if (rank.k >= b.size())
        throw RankError("rank k=" + std::to_string(rank.k) + " must be < support size " + std::to_string(b.size()));
    const int W = f.width();
    const int H = f.height();
    const double M = f.M();
    GreyImage out(W, H, neutral, M);
    const auto& taps = b.taps();
    parallel_rows(H, [&](int y0, int y1) {
        std::vector<double> window(taps.size());
        for (int y = y0; y < y1; ++y) {
            double* dst = out.row(y).data();
            for (int x = 0; x < W; ++x) {
                std::size_t n = 0;
                for (const Tap& t : taps) {
                    const int sx = x + sign * t.dx;
                    const int sy = y + sign * t.dy;
                    if (sx < 0 || sy < 0 || sx >= W || sy >= H) continue;
                    window[n++] = combine(f(sx, sy), t.value, M);
                }
                if (n == 0) continue;
                const std::size_t k = std::min(rank.k, n - 1);
                if (k == 0) {
                    double acc = neutral;
                    for (std::size_t i = 0; i < n; ++i) acc = reduce(acc, window[i]);
                    dst[x] = acc;
                } else {
                    std::nth_element(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(k),
                                     window.begin() + static_cast<std::ptrdiff_t>(n), order);
                    dst[x] = window[k];
                }
            }
        }
    });
    return out;
}

GreyImage pointwise(const GreyImage& a, const GreyImage& b, const std::function<double(double, double)>& op) {
    if (!a.same_shape(b)) throw DomainError("image shapes differ");
    GreyImage out = a;
    auto dst = out.samples();
    auto src = b.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = op(dst[i], src[i]);
    return out;
}

}  // namespace

GreyImage classical_dilate(const GreyImage& f, const StructuringFunction& b) {
    return sweep(f, b, kDilation, kNegInf, ClassicalAdd{}, Max{});
}

GreyImage classical_erode(const GreyImage& f, const StructuringFunction& b) {
    return sweep(f, b, kErosion, kPosInf, ClassicalSub{}, Min{});
}

GreyImage classical_open(const GreyImage& f, const StructuringFunction& b) {
    return classical_dilate(classical_erode(f, b), b);
}

GreyImage classical_close(const GreyImage& f, const StructuringFunction& b) {
    return classical_erode(classical_dilate(f, b), b);
}

GreyImage log_dilate(const GreyImage& f, const StructuringFunction& b) {
    return sweep(f, b, kDilation, kNegInf, LogAdd{}, Max{});
}

GreyImage log_erode(const GreyImage& f, const StructuringFunction& b) {
    return sweep(f, b, kErosion, f.M(), LogSub{}, Min{});
}

GreyImage log_open(const GreyImage& f, const StructuringFunction& b) { return log_dilate(log_erode(f, b), b); }

GreyImage log_close(const GreyImage& f, const StructuringFunction& b) { return log_erode(log_dilate(f, b), b); }

GreyImage rank_min(const GreyImage& f, const StructuringFunction& b, RankIndex k) {
    return rank_sweep(f, b, kErosion, kPosInf, ClassicalSub{}, Min{}, std::less<double>{}, k);
}

GreyImage rank_max(const GreyImage& f, const StructuringFunction& b, RankIndex k) {
    return rank_sweep(f, b, kDilation, kNegInf, ClassicalAdd{}, Max{}, std::greater<double>{}, k);
}

GreyImage log_rank_min(const GreyImage& f, const StructuringFunction& b, RankIndex k) {
    return rank_sweep(f, b, kErosion, f.M(), LogSub{}, Min{}, std::less<double>{}, k);
}

GreyImage log_rank_max(const GreyImage& f, const StructuringFunction& b, RankIndex k) {
    return rank_sweep(f, b, kDilation, kNegInf, LogAdd{}, Max{}, std::greater<double>{}, k);
}

GreyImage pointwise_min(const GreyImage& a, const GreyImage& b) {
    return pointwise(a, b, [](double x, double y) { return y < x ? y : x; });
}

GreyImage pointwise_max(const GreyImage& a, const GreyImage& b) {
    return pointwise(a, b, [](double x, double y) { return y > x ? y : x; });
}

BinaryMask binary_erode(const BinaryMask& m, const StructuringFunction& domain) {
    BinaryMask out(m.width(), m.height());
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x) {
            bool all = true;
            for (const Tap& t : domain.taps()) {
                const int sx = x + t.dx;
                const int sy = y + t.dy;
                if (m.contains(sx, sy) && !m(sx, sy)) {
                    all = false;
                    break;
                }
            }
            out.set(x, y, all);
        }
    return out;
}

BinaryMask binary_dilate(const BinaryMask& m, const StructuringFunction& domain) {
    BinaryMask out(m.width(), m.height());
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x) {
            bool any = false;
            for (const Tap& t : domain.taps()) {
                const int sx = x - t.dx;
                const int sy = y - t.dy;
                if (m.contains(sx, sy) && m(sx, sy)) {
                    any = true;
                    break;
                }
            }
            out.set(x, y, any);
        }
    return out;
}

BinaryMask binary_close(const BinaryMask& m, const StructuringFunction& domain) {
    return binary_erode(binary_dilate(m, domain), domain);
}

}  // namespace lmm::morph
