#include "lmm/oracle.hpp"

#include "lmm/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lmm::oracle {
namespace {

void guard(const GreyImage& f) {
    if (f.width() > kMaxSide || f.height() > kMaxSide)
        throw DomainError("oracle is limited to " + std::to_string(kMaxSide) + "x" + std::to_string(kMaxSide) +
                          " images");
}

// f ⊞ b with: -inf when either is -inf, otherwise M when either is M.
double plus(double f, double b, double M) {
    if (f == -INFINITY || b == -INFINITY) return -INFINITY;
    if (f == M || b == M) return M;
    return f + b - f * b / M;
}

// f ⊟ b with: M when f = M or b = -inf, otherwise -inf when b = M or f = -inf.
double minus(double f, double b, double M) {
    if (f == M || b == -INFINITY) return M;
    if (b == M || f == -INFINITY) return -INFINITY;
    return (f - b) / (1.0 - b / M);
}

// Window values at (x, y): reads f(x + sign·h) for each tap inside the grid.
template <class Op>
std::vector<double> window(const GreyImage& f, const StructuringFunction& b, int x, int y, int sign, Op op) {
    std::vector<double> out;
    for (const Tap& t : b.taps()) {
        const int sx = x + sign * t.dx;
        const int sy = y + sign * t.dy;
        if (sx < 0 || sy < 0 || sx >= f.width() || sy >= f.height()) continue;
        out.push_back(op(f(sx, sy), t.value));
    }
    return out;
}

// k-th element of the sorted window (ascending, or descending when `max`).
template <class Op>
GreyImage ranked(const GreyImage& f, const StructuringFunction& b, int sign, std::size_t k, bool max, double empty,
                 Op op) {
    guard(f);
    if (k >= b.size()) throw RankError("rank must be < support size");
    GreyImage out(f.width(), f.height(), empty, f.M());
    for (int y = 0; y < f.height(); ++y)
        for (int x = 0; x < f.width(); ++x) {
            auto w = window(f, b, x, y, sign, op);
            if (w.empty()) continue;
            std::sort(w.begin(), w.end());
            if (max) std::reverse(w.begin(), w.end());
            out(x, y) = w[std::min(k, w.size() - 1)];
        }
    return out;
}

struct Tolerance {
    std::size_t n1, n2;
};

Tolerance tolerance(double p, std::size_t n) {
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("tolerance p must lie in (0, 1]");
    const auto suppr = static_cast<std::size_t>(std::round((1.0 - p) * static_cast<double>(n)));
    if (suppr >= n) throw RankError("tolerance discards the whole support");
    const auto n1 = static_cast<std::size_t>(std::round(suppr / 2.0));
    return {n1, suppr - n1};
}

double contrast(double upper, double lower, double M) {
    if (upper == M || lower == -INFINITY) return M;
    if (upper == -INFINITY && lower == M) return M;
    if (upper <= lower) return 0.0;
    return (upper - lower) / (1.0 - lower / M);
}

GreyImage xi_of(const GreyImage& f) {
    GreyImage out = f;
    const double M = f.M();
    for (double& v : out.samples()) v = v == M ? INFINITY : -M * std::log(1.0 - v / M);
    return out;
}

GreyImage xi_inv_of(const GreyImage& v, double M) {
    GreyImage out(v.width(), v.height(), 0.0, M);
    for (int y = 0; y < v.height(); ++y)
        for (int x = 0; x < v.width(); ++x) {
            const double s = v(x, y);
            out(x, y) = s == INFINITY ? M : (s == -INFINITY ? -INFINITY : M * (1.0 - std::exp(-s / M)));
        }
    return out;
}

}  // namespace

GreyImage naive_classical_dilate(const GreyImage& f, const StructuringFunction& b) {
    return ranked(f, b, -1, 0, true, -INFINITY, [](double v, double s) { return v == -INFINITY ? v : v + s; });
}

GreyImage naive_classical_erode(const GreyImage& f, const StructuringFunction& b) {
    return ranked(f, b, +1, 0, false, INFINITY, [](double v, double s) { return v == INFINITY ? v : v - s; });
}

GreyImage naive_log_dilate(const GreyImage& f, const StructuringFunction& b) {
    const double M = f.M();
    return ranked(f, b, -1, 0, true, -INFINITY, [M](double v, double s) { return plus(v, s, M); });
}

GreyImage naive_log_erode(const GreyImage& f, const StructuringFunction& b) {
    const double M = f.M();
    return ranked(f, b, +1, 0, false, M, [M](double v, double s) { return minus(v, s, M); });
}

GreyImage naive_rank_min(const GreyImage& f, const StructuringFunction& b, std::size_t k) {
    return ranked(f, b, +1, k, false, INFINITY, [](double v, double s) { return v == INFINITY ? v : v - s; });
}

GreyImage naive_rank_max(const GreyImage& f, const StructuringFunction& b, std::size_t k) {
    return ranked(f, b, -1, k, true, -INFINITY, [](double v, double s) { return v == -INFINITY ? v : v + s; });
}

GreyImage naive_log_rank_min(const GreyImage& f, const StructuringFunction& b, std::size_t k) {
    const double M = f.M();
    return ranked(f, b, +1, k, false, M, [M](double v, double s) { return minus(v, s, M); });
}

GreyImage naive_log_rank_max(const GreyImage& f, const StructuringFunction& b, std::size_t k) {
    const double M = f.M();
    return ranked(f, b, -1, k, true, -INFINITY, [M](double v, double s) { return plus(v, s, M); });
}

StructuringFunction xi_sf(const StructuringFunction& b, double M) {
    std::vector<Tap> taps = b.taps();
    for (Tap& t : taps) t.value = t.value == M ? INFINITY : -M * std::log(1.0 - t.value / M);
    return StructuringFunction(std::move(taps));
}

GreyImage xi_log_dilate(const GreyImage& f, const StructuringFunction& b) {
    return xi_inv_of(naive_classical_dilate(xi_of(f), xi_sf(b, f.M())), f.M());
}

GreyImage xi_log_erode(const GreyImage& f, const StructuringFunction& b) {
    // Off-grid samples contribute +inf in the classical domain, i.e. M.
    return xi_inv_of(naive_classical_erode(xi_of(f), xi_sf(b, f.M())), f.M());
}

GreyImage xi_log_rank_min(const GreyImage& f, const StructuringFunction& b, std::size_t k) {
    return xi_inv_of(naive_rank_min(xi_of(f), xi_sf(b, f.M()), k), f.M());
}

GreyImage xi_log_rank_max(const GreyImage& f, const StructuringFunction& b, std::size_t k) {
    return xi_inv_of(naive_rank_max(xi_of(f), xi_sf(b, f.M()), k), f.M());
}

GreyImage naive_mlub(const GreyImage& f, const StructuringFunction& b) {
    const double M = f.M();
    // sup over h of f(x+h) ⊟ b(h); an empty window leaves -inf.
    return ranked(f, b, +1, 0, true, -INFINITY, [M](double v, double s) { return minus(v, s, M); });
}

GreyImage naive_mglb(const GreyImage& f, const StructuringFunction& b) { return naive_log_erode(f, b); }

GreyImage naive_asplund(const GreyImage& f, const StructuringFunction& b) {
    const GreyImage up = naive_mlub(f, b);
    const GreyImage lo = naive_mglb(f, b);
    GreyImage out = up;
    for (int y = 0; y < f.height(); ++y)
        for (int x = 0; x < f.width(); ++x) out(x, y) = contrast(up(x, y), lo(x, y), f.M());
    return out;
}

GreyImage naive_asplund_tol(const GreyImage& f, const StructuringFunction& b, double p) {
    const auto tol = tolerance(p, b.size());
    const double M = f.M();
    const GreyImage up = ranked(f, b, +1, tol.n1, true, -INFINITY, [M](double v, double s) { return minus(v, s, M); });
    const GreyImage lo = naive_log_rank_min(f, b, tol.n2);
    GreyImage out = up;
    for (int y = 0; y < f.height(); ++y)
        for (int x = 0; x < f.width(); ++x) out(x, y) = contrast(up(x, y), lo(x, y), M);
    return out;
}

GreyImage naive_classical_tol(const GreyImage& f, const StructuringFunction& b, double p) {
    const auto tol = tolerance(p, b.size());
    const GreyImage up =
        ranked(f, b, +1, tol.n1, true, -INFINITY, [](double v, double s) { return v == INFINITY ? v : v - s; });
    const GreyImage lo = naive_rank_min(f, b, tol.n2);
    GreyImage out = up;
    for (int y = 0; y < f.height(); ++y)
        for (int x = 0; x < f.width(); ++x) out(x, y) = up(x, y) == -INFINITY && lo(x, y) == INFINITY ? INFINITY
                             : up(x, y) == lo(x, y)                   ? 0.0
                                                                      : up(x, y) - lo(x, y);
    return out;
}

GreyImage naive_bump_side(const GreyImage& f, const StructuringFunction& b, const StructuringFunction& side) {
    guard(f);
    const double M = f.M();
    const GreyImage c2 = naive_mglb(f, b);
    GreyImage out(f.width(), f.height(), 0.0, M);
    for (int y = 0; y < f.height(); ++y)
        for (int x = 0; x < f.width(); ++x) {
            double acc = M;
            for (const Tap& t : side.taps()) {
                const int sx = x + t.dx;
                const int sy = y + t.dy;
                if (!f.contains(sx, sy)) continue;
                acc = std::min(acc, minus(f(sx, sy), plus(t.value, c2(x, y), M), M));
            }
            out(x, y) = acc;
        }
    return out;
}

double auc_mann_whitney(const GreyImage& map, const BinaryMask& truth, const BinaryMask& region) {
    guard(map);
    std::vector<double> pos, neg;
    for (int y = 0; y < map.height(); ++y)
        for (int x = 0; x < map.width(); ++x) {
            if (!region(x, y)) continue;
            (truth(x, y) ? pos : neg).push_back(-map(x, y));
        }
    if (pos.empty() || neg.empty()) throw DomainError("AUC needs both classes");
    double wins = 0.0;
    for (double p : pos)
        for (double n : neg) wins += p > n ? 1.0 : (p == n ? 0.5 : 0.0);
    return wins / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

int darken_scalar(int f, double c, double M) {
    const double a = (M - 1.0) - f;
    const double s = a + c - a * c / M;
    const double out = (M - 1.0) - std::floor(s);
    return static_cast<int>(std::min(M - 1.0, std::max(0.0, out)));
}

}  // namespace lmm::oracle
