#pragma once

#include <stdexcept>

namespace quadcert {

/// Regime of the three-point rule parameter: the closed-form coefficients
/// change shape at lambda = 1/2 (both branches agree there).
enum class Regime { Low, High };

/// One member of the lambda-parameterized rule family
///   Q_lambda = lambda * (f(a)+f(b))/2 + (1-lambda) * f((a+b)/2),
/// approximating the interval mean of f. lambda = 0 is the midpoint rule,
/// lambda = 1 the trapezoid rule, lambda = 1/3 Simpson's rule.
struct LambdaRule {
    double lambda;
    Regime regime;

    explicit LambdaRule(double lam) : lambda(lam) {
        if (!(lam >= 0.0 && lam <= 1.0))
            throw std::domain_error("lambda must lie in [0,1]");
        regime = (lam > 0.5) ? Regime::High : Regime::Low;
    }

    LambdaRule(double lam, Regime reg) : lambda(lam), regime(reg) {
        if (!(lam >= 0.0 && lam <= 1.0))
            throw std::domain_error("lambda must lie in [0,1]");
        if (lam < 0.5 && reg == Regime::High)
            throw std::invalid_argument("High regime requires lambda >= 1/2");
        if (lam > 0.5 && reg == Regime::Low)
            throw std::invalid_argument("Low regime requires lambda <= 1/2");
    }
};

struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b))
            throw std::domain_error("interval requires a < b");
    }
    double width() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
};

/// |f''| sampled at the two interval endpoints.
struct EndpointCurvature {
    double d2a;
    double d2b;

    EndpointCurvature(double a_, double b_) : d2a(a_), d2b(b_) {
        if (!(d2a >= 0.0) || !(d2b >= 0.0))
            throw std::domain_error("endpoint curvatures must be nonnegative");
    }
};

struct PowerExponent {
    double q;

    explicit PowerExponent(double q_) : q(q_) {
        if (!(q >= 1.0))
            throw std::domain_error("power exponent q must be >= 1");
    }
};

enum class BoundBranch { LowFirstOrder, HighFirstOrder, LowPowerMean, HighPowerMean };

/// A certified nonnegative bound on |interval mean of f - Q_lambda|,
/// valid whenever |f''| (first-order) or |f''|^q (power-mean) is convex
/// on the interval.
struct ErrorBound {
    double value;
    double lambda;
    double q;      // 1 for the first-order family
    double width;
    BoundBranch branch;
};

/// Coefficients of |f''(a)|^q and |f''(b)|^q in the two half-interval
/// moment integrals of the kernel. a1 always equals b2.
struct MomentCoefficients {
    double a1;
    double b1;
    double a2;
    double b2;
};

/// Peano-type kernel of the rule identity: piecewise quadratic on [0,1],
/// symmetric about t = 1/2, with interior roots at lambda and 1-lambda.
double kernel_k(double t, const LambdaRule& rule);

/// Q_lambda from the three sampled values.
double rule_value(double fa, double fm, double fb, const LambdaRule& rule);

/// Integral of |t(t-lambda)| over [0,1/2]; equal for both kernel halves.
double abs_kernel_mass(const LambdaRule& rule);

MomentCoefficients moment_coefficients(const LambdaRule& rule);

/// First-order bound: linear in the endpoint curvatures, valid when |f''|
/// is convex on the interval.
ErrorBound bound_first_order(double width, const EndpointCurvature& curv,
                             const LambdaRule& rule);

/// Power-mean bound, parameterized by q >= 1; collapses exactly to the
/// first-order bound at q = 1.
ErrorBound bound_power_mean(double width, const EndpointCurvature& curv,
                            const PowerExponent& q, const LambdaRule& rule);

/// Minimizer of the selected bound over lambda in [0,1]: dense grid scan
/// (step 1/1024) refined by trisection on the winning cell; ties go to
/// the smaller lambda.
LambdaRule best_lambda(double width, const EndpointCurvature& curv,
                       const PowerExponent& q, bool first_order);

} // namespace quadcert
