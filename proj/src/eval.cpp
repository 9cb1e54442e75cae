#include "lmm/eval.hpp"

#include "lmm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <ostream>

namespace lmm::eval {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? kNaN : static_cast<double>(num) / static_cast<double>(den);
}

void write_value(std::ostream& out, double v) {
    if (std::isnan(v))
        out << "nan";
    else
        out << v;
}

}  // namespace

void DarkeningParams::validate(double M) const {
    if (!(radius > 0.0)) throw DomainError("ZOI radius must be > 0");
    if (!(intensity >= 0.0 && intensity < M)) throw DomainError("darkening intensity must lie in [0, M)");
}

GreyImage darkening_function(const DarkeningParams& p, int width, int height, double M) {
    p.validate(M);
    GreyImage out(width, height, 0.0, M);
    const double scale = p.radius / 4.0;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const double rho = std::hypot(x - p.center_x, y - p.center_y);
            out(x, y) = p.intensity * (1.0 - std::exp(-rho / scale));
        }
    return out;
}

GreyImage darken_channel(const GreyImage& channel, const GreyImage& c_dk) {
    if (!channel.same_shape(c_dk)) throw DomainError("channel and darkening function shapes differ");
    const double M = channel.M();
    const double top = M - 1.0;
    GreyImage out = channel;
    auto dst = out.samples();
    auto c = c_dk.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        const double f = dst[i];
        if (!(f >= 0.0 && f <= top) || f != std::floor(f))
            throw DomainError("channel values must be integers in [0, M-1]");
        if (!(c[i] < M)) throw DomainError("darkening values must be < M");
        const double a = top - f;
        const double v = top - std::floor(lip::add(a, c[i], M));
        dst[i] = std::clamp(v, 0.0, top);
    }
    return out;
}

RgbImage darken_rgb(const RgbImage& rgb, const GreyImage& c_dk) {
    RgbImage out = rgb;
    for (auto* plane : {&out.r, &out.g, &out.b}) {
        GreyImage channel(rgb.width, rgb.height, *plane, c_dk.M());
        auto dark = darken_channel(channel, c_dk);
        plane->assign(dark.samples().begin(), dark.samples().end());
    }
    return out;
}

DarkeningParams fit_zoi_circle(const BinaryMask& zoi, double intensity) {
    double sx = 0.0, sy = 0.0;
    std::size_t n = 0;
    for (int y = 0; y < zoi.height(); ++y)
        for (int x = 0; x < zoi.width(); ++x)
            if (zoi(x, y)) sx += x, sy += y, ++n;
    if (n == 0) throw DomainError("empty ZOI");
    return {sx / n, sy / n, std::sqrt(static_cast<double>(n) / std::numbers::pi), intensity};
}

SegMetrics compute_metrics(const BinaryMask& mask, const BinaryMask& truth, const BinaryMask& region) {
    if (!mask.same_shape(truth) || !mask.same_shape(region)) throw DomainError("mask dimensions differ");
    SegMetrics m;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (!region.at(i)) continue;
        const bool p = mask.at(i);
        const bool t = truth.at(i);
        if (p && t) ++m.tp;
        else if (p) ++m.fp;
        else if (t) ++m.fn;
        else ++m.tn;
    }
    m.acc = ratio(m.tp + m.tn, m.tp + m.tn + m.fp + m.fn);
    m.se = ratio(m.tp, m.tp + m.fn);
    m.sp = ratio(m.tn, m.tn + m.fp);
    m.auc = kNaN;
    return m;
}

double auc(const GreyImage& map, const BinaryMask& truth, const BinaryMask& region) {
    if (!truth.matches(map) || !region.matches(map)) throw DomainError("mask and map dimensions differ");
    struct Sample {
        double score;
        bool positive;
    };
    std::vector<Sample> samples;
    samples.reserve(region.count());
    std::size_t positives = 0;
    const auto values = map.samples();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!region.at(i)) continue;
        if (std::isnan(values[i])) throw DomainError("map contains NaN");
        samples.push_back({-values[i], truth.at(i)});
        positives += truth.at(i) ? 1 : 0;
    }
    const std::size_t negatives = samples.size() - positives;
    if (positives == 0 || negatives == 0) throw DomainError("AUC needs both positive and negative pixels");
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.score > b.score; });

    double area = 0.0;
    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < samples.size();) {
        std::size_t j = i;
        std::size_t dtp = 0, dfp = 0;
        while (j < samples.size() && samples[j].score == samples[i].score) {
            samples[j].positive ? ++dtp : ++dfp;
            ++j;
        }
        area += static_cast<double>(dfp) * (static_cast<double>(tp) + static_cast<double>(dtp) / 2.0);
        tp += dtp;
        fp += dfp;
        i = j;
    }
    return area / (static_cast<double>(positives) * static_cast<double>(negatives));
}

double relative_auc_diff(double auc_initial, double auc_dark) {
    if (!(auc_initial > 0.0)) throw DomainError("initial AUC must be > 0");
    return std::abs(auc_initial - auc_dark) / auc_initial;
}

double dice(const BinaryMask& a, const BinaryMask& b) {
    if (!a.same_shape(b)) throw DomainError("mask dimensions differ");
    std::size_t both = 0;
    for (std::size_t i = 0; i < a.size(); ++i) both += (a.at(i) && b.at(i)) ? 1 : 0;
    const std::size_t total = a.count() + b.count();
    return total == 0 ? 1.0 : 2.0 * static_cast<double>(both) / static_cast<double>(total);
}

SegMetrics mean_metrics(const std::vector<SegMetrics>& rows) {
    SegMetrics m;
    if (rows.empty()) return m;
    for (const auto& r : rows) {
        m.tp += r.tp, m.fp += r.fp, m.tn += r.tn, m.fn += r.fn;
        m.acc += r.acc, m.se += r.se, m.sp += r.sp, m.auc += r.auc;
    }
    const double n = static_cast<double>(rows.size());
    m.acc /= n, m.se /= n, m.sp /= n, m.auc /= n;
    return m;
}

void write_metrics_table(std::ostream& out, const std::vector<MetricsRow>& rows) {
    const auto old_flags = out.flags();
    const auto old_precision = out.precision(6);
    out << std::fixed;
    auto line = [&out](const std::string& name, const SegMetrics& m) {
        out << name << ',';
        write_value(out, m.auc);
        out << ',';
        write_value(out, m.acc);
        out << ',';
        write_value(out, m.se);
        out << ',';
        write_value(out, m.sp);
        out << ',' << m.tp << ',' << m.fp << ',' << m.tn << ',' << m.fn << '\n';
    };
    out << "image,AUC,Acc,Se,Sp,TP,FP,TN,FN\n";
    std::vector<SegMetrics> all;
    for (const auto& r : rows) {
        line(r.name, r.metrics);
        all.push_back(r.metrics);
    }
    if (rows.size() > 1) line("mean", mean_metrics(all));
    out.flags(old_flags);
    out.precision(old_precision);
}

}  // namespace lmm::eval
