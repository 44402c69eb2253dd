#include "means.hpp"

#include <cmath>

namespace quadcert {
namespace means {

namespace {

void require_positive(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("mean requires positive arguments");
}

void require_ordered(double a, double b) {
    if (!(0.0 < a && a < b))
        throw std::domain_error("requires 0 < a < b");
}

} // namespace

double mean_value(MeanKind kind, double a, double b, double p) {
    switch (kind) {
        case MeanKind::Arithmetic:
            if (!(a >= 0.0) || !(b >= 0.0))
                throw std::domain_error("arithmetic mean requires a, b >= 0");
            return 0.5 * (a + b);
        case MeanKind::Geometric:
            if (!(a >= 0.0) || !(b >= 0.0))
                throw std::domain_error("geometric mean requires a, b >= 0");
            return std::sqrt(a * b);
        case MeanKind::Harmonic:
            require_positive(a, b);
            return 2.0 * a * b / (a + b);
        case MeanKind::Logarithmic:
            require_positive(a, b);
            if (a == b) return a;
            // log1p form keeps full precision on narrow intervals
            return (b - a) / std::log1p((b - a) / a);
        case MeanKind::Identric:
            require_positive(a, b);
            if (a == b) return a;
            return std::exp((b * std::log(b) - a * std::log(a)) / (b - a) - 1.0);
        case MeanKind::PLogarithmic:
            require_positive(a, b);
            if (p == -1.0 || p == 0.0)
                throw std::domain_error(
                    "p-logarithmic mean is undefined at p in {-1, 0}; those "
                    "cases are the logarithmic and identric means");
            if (a == b) return a;
            return std::pow((std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) /
                                ((p + 1.0) * (b - a)),
                            1.0 / p);
    }
    throw std::logic_error("unknown mean kind");
}

bool GapBound::holds() const {
    return std::abs(gap) <= bound * (1.0 + 1e-9) + 1e-15;
}

namespace {

GapBound prop1_with_constant(int n, double a, double b, double denom) {
    if (n <= 2) throw std::domain_error("prop1 requires n > 2");
    require_ordered(a, b);
    const double an = std::pow(a, double(n));
    const double bn = std::pow(b, double(n));
    const double A = 0.5 * (a + b);
    const double lnn = (std::pow(b, double(n) + 1.0) - std::pow(a, double(n) + 1.0)) /
                       ((double(n) + 1.0) * (b - a));
    const double gap = (an + bn) / 6.0 + (2.0 / 3.0) * std::pow(A, double(n)) - lnn;
    const double bound = double(n) * (double(n) - 1.0) * (b - a) * (b - a) / denom *
                         (std::pow(a, double(n) - 2.0) + std::pow(b, double(n) - 2.0));
    return GapBound{gap, bound};
}

} // namespace

GapBound prop1_gap(int n, double a, double b) {
    return prop1_with_constant(n, a, b, 162.0);
}

GapBound prop1_gap_printed_constant(int n, double a, double b) {
    return prop1_with_constant(n, a, b, 168.0);
}

Prop2Result prop2_gaps(double a, double b, const PowerExponent& q) {
    require_ordered(a, b);
    const double inv_l = std::log1p((b - a) / a) / (b - a);
    const double inv_a = 2.0 / (a + b);
    const double inv_h = (a + b) / (2.0 * a * b);
    const EndpointCurvature curv(2.0 / (a * a * a), 2.0 / (b * b * b));
    const double width = b - a;
    Prop2Result r;
    r.midpoint = GapBound{inv_l - inv_a,
                          bound_power_mean(width, curv, q, LambdaRule(0.0)).value};
    r.trapezoid = GapBound{inv_l - inv_h,
                           bound_power_mean(width, curv, q, LambdaRule(1.0)).value};
    return r;
}

GapBound prop3_gap(double a, double b, const PowerExponent& q) {
    require_ordered(a, b);
    const double inv_l = std::log1p((b - a) / a) / (b - a);
    const double inv_a = 2.0 / (a + b);
    const double inv_h = (a + b) / (2.0 * a * b);
    const EndpointCurvature curv(2.0 / (a * a * a), 2.0 / (b * b * b));
    const double gap = inv_h / 3.0 + 2.0 * inv_a / 3.0 - inv_l;
    const double bound =
        bound_power_mean(b - a, curv, q, LambdaRule(1.0 / 3.0)).value;
    return GapBound{gap, bound};
}

} // namespace means
} // namespace quadcert
