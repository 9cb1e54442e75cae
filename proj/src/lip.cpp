#include "lmm/lip.hpp"

#include "lmm/error.hpp"

#include <string>

namespace lmm {
namespace {

void check_scale(const GreyValue& a) {
    if (!(a.M > 0.0) || !std::isfinite(a.M)) throw DomainError("LIP bound M must be a positive real");
    if (std::isnan(a.value) || a.value > a.M)
        throw DomainError("grey value " + std::to_string(a.value) + " outside [-inf, M]");
}

void check_pair(const GreyValue& a, const GreyValue& b) {
    check_scale(a);
    check_scale(b);
    if (a.M != b.M) throw DomainError("operands belong to different LIP scales");
}

}  // namespace

GreyValue lip_add(GreyValue a, GreyValue b) {
    check_pair(a, b);
    const double M = a.M;
    const bool upper = a.is_upper() || b.is_upper();
    const bool lower = a.is_lower() || b.is_lower();
    if (upper && lower) throw DomainError("M ⊞ -inf is undefined");
    if (upper) return {M, M};
    if (lower) return {kNegInf, M};
    return {lip::add(a.value, b.value, M), M};
}

GreyValue lip_negate(GreyValue a) {
    check_scale(a);
    if (a.is_upper()) throw SingularityError("negation of M diverges to -inf");
    if (a.is_lower()) return {a.M, a.M};
    return {lip::negate(a.value, a.M), a.M};
}

GreyValue lip_sub(GreyValue a, GreyValue b) {
    check_pair(a, b);
    const double M = a.M;
    if (b.is_upper()) {
        if (a.is_upper()) return {M, M};
        throw SingularityError("LIP subtraction of M");
    }
    if (a.is_upper()) return {M, M};
    if (a.is_lower() && b.is_lower()) throw DomainError("-inf ⊟ -inf is undefined");
    if (a.is_lower()) return {kNegInf, M};
    if (b.is_lower()) return {M, M};
    return {lip::sub(a.value, b.value, M), M};
}

GreyValue lip_scalar_mul(double lambda, GreyValue a) {
    check_scale(a);
    if (std::isnan(lambda)) throw DomainError("scalar is NaN");
    const double M = a.M;
    if (a.is_upper()) return {lambda > 0.0 ? M : (lambda == 0.0 ? 0.0 : kNegInf), M};
    if (a.is_lower()) {
        if (lambda == 0.0) return {0.0, M};
        return {lambda > 0.0 ? kNegInf : M, M};
    }
    if (lambda == 1.0) return a;
    // M - M (1 - a/M)^lambda, written through log1p/expm1 for accuracy.
    return {-M * std::expm1(lambda * std::log1p(-a.value / M)), M};
}

double xi(GreyValue a) {
    check_scale(a);
    return lip::xi(a.value, a.M);
}

GreyValue xi_inv(double v, double M) {
    if (std::isnan(v)) throw DomainError("xi_inv of NaN");
    if (!(M > 0.0) || !std::isfinite(M)) throw DomainError("LIP bound M must be a positive real");
    return {lip::xi_inv(v, M), M};
}

GreyValue luminance(double r, double g, double b, double M) {
    const double hi = M - 1.0;
    for (double c : {r, g, b})
        if (!(c >= 0.0 && c <= hi)) throw DomainError("channel value outside [0, M-1]");
    return {hi - (0.299 * r + 0.587 * g + 0.114 * b), M};
}

}  // namespace lmm
