#include "rule.hpp"

#include <cmath>

namespace quadcert {

double kernel_k(double t, const LambdaRule& rule) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("kernel argument t must lie in [0,1]");
    const double lam = rule.lambda;
    if (t <= 0.5)
        return 0.5 * t * (t - lam);
    return 0.5 * (1.0 - t) * (1.0 - lam - t);
}

double rule_value(double fa, double fm, double fb, const LambdaRule& rule) {
    const double lam = rule.lambda;
    return lam * 0.5 * (fa + fb) + (1.0 - lam) * fm;
}

double abs_kernel_mass(const LambdaRule& rule) {
    const double lam = rule.lambda;
    if (rule.regime == Regime::Low)
        return lam * lam * lam / 3.0 + (1.0 - 3.0 * lam) / 24.0;
    return (3.0 * lam - 1.0) / 24.0;
}

MomentCoefficients moment_coefficients(const LambdaRule& rule) {
    const double lam = rule.lambda;
    MomentCoefficients c{};
    if (rule.regime == Regime::Low) {
        const double lam3 = lam * lam * lam;
        c.a1 = lam3 * lam / 6.0 + (3.0 - 8.0 * lam) / 192.0;
        c.b1 = (2.0 - lam) * lam3 / 6.0 + (5.0 - 16.0 * lam) / 192.0;
        const double om = 1.0 - lam;
        c.a2 = (1.0 + lam) * om * om * om / 6.0 + (48.0 * lam - 27.0) / 192.0;
        c.b2 = c.a1;
    } else {
        c.a1 = (8.0 * lam - 3.0) / 192.0;
        c.b1 = (16.0 * lam - 5.0) / 192.0;
        c.a2 = c.b1;
        c.b2 = c.a1;
    }
    return c;
}

ErrorBound bound_first_order(double width, const EndpointCurvature& curv,
                             const LambdaRule& rule) {
    if (!(width > 0.0))
        throw std::domain_error("interval width must be positive");
    const double lam = rule.lambda;
    double value;
    BoundBranch branch;
    if (rule.regime == Regime::Low) {
        const double lam3 = lam * lam * lam;
        const double om = 1.0 - lam;
        const double ca = lam3 * lam + (1.0 + lam) * om * om * om + (5.0 * lam - 3.0) / 4.0;
        const double cb = lam3 * lam + (2.0 - lam) * lam3 + (1.0 - 3.0 * lam) / 4.0;
        value = width * width / 12.0 * (ca * curv.d2a + cb * curv.d2b);
        branch = BoundBranch::LowFirstOrder;
    } else {
        value = width * width * (3.0 * lam - 1.0) / 48.0 * (curv.d2a + curv.d2b);
        branch = BoundBranch::HighFirstOrder;
    }
    return ErrorBound{value, lam, 1.0, width, branch};
}

ErrorBound bound_power_mean(double width, const EndpointCurvature& curv,
                            const PowerExponent& q, const LambdaRule& rule) {
    if (!(width > 0.0))
        throw std::domain_error("interval width must be positive");
    const double mass = abs_kernel_mass(rule);
    const MomentCoefficients c = moment_coefficients(rule);
    const double qa = std::pow(curv.d2a, q.q);
    const double qb = std::pow(curv.d2b, q.q);
    const double inv_q = 1.0 / q.q;
    const double bracket = std::pow(c.a1 * qa + c.b1 * qb, inv_q) +
                           std::pow(c.a2 * qa + c.b2 * qb, inv_q);
    const double value =
        0.5 * width * width * std::pow(mass, 1.0 - inv_q) * bracket;
    const BoundBranch branch = (rule.regime == Regime::Low)
                                   ? BoundBranch::LowPowerMean
                                   : BoundBranch::HighPowerMean;
    return ErrorBound{value, rule.lambda, q.q, width, branch};
}

namespace {

double bound_at(double lam, double width, const EndpointCurvature& curv,
                const PowerExponent& q, bool first_order) {
    LambdaRule rule(lam);
    return first_order ? bound_first_order(width, curv, rule).value
                       : bound_power_mean(width, curv, q, rule).value;
}

} // namespace

LambdaRule best_lambda(double width, const EndpointCurvature& curv,
                       const PowerExponent& q, bool first_order) {
    if (!(width > 0.0))
        throw std::domain_error("interval width must be positive");
    constexpr int kGrid = 1024;
    int best = 0;
    double best_val = bound_at(0.0, width, curv, q, first_order);
    for (int i = 1; i <= kGrid; ++i) {
        const double v =
            bound_at(double(i) / kGrid, width, curv, q, first_order);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    // Trisection on the winning cell and its neighbors.
    double lo = std::max(0.0, double(best - 1) / kGrid);
    double hi = std::min(1.0, double(best + 1) / kGrid);
    while (hi - lo > 1e-9) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (bound_at(m1, width, curv, q, first_order) <=
            bound_at(m2, width, curv, q, first_order))
            hi = m2;
        else
            lo = m1;
    }
    return LambdaRule(lo);
}

} // namespace quadcert
