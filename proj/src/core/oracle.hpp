#pragma once

#include <string>
#include <vector>

#include "expr.hpp"
#include "rule.hpp"

namespace quadcert {

struct BudgetError : std::runtime_error {
    double best_estimate;
    BudgetError(double best)
        : std::runtime_error("oracle evaluation budget exhausted"),
          best_estimate(best) {}
};

/// High-accuracy reference value. est_error is a Richardson-style
/// estimate, not a certificate.
struct RefResult {
    double value;
    double est_error;
    long evaluations;
    bool converged;
};

struct OracleOptions {
    double tol = 1e-12;
    long budget = 1'000'000;
};

/// Adaptive bisection with a fixed-order local rule and Richardson error
/// estimation. Deterministic for fixed inputs; on budget exhaustion the
/// report carries the best estimate with converged = false.
RefResult reference_integral(const std::function<double(double)>& f,
                             const Interval& iv, double tol,
                             long budget = 1'000'000);

/// Interval mean of f minus Q_lambda. Uses the exact mean when the spec
/// carries one, otherwise the numeric reference.
double rule_gap(const IntegrandSpec& spec, const Interval& iv,
                const LambdaRule& rule, const OracleOptions& opt = {});

/// (b-a)^2 * integral over [0,1] of k(t) f''(ta+(1-t)b), integrated
/// panel-by-panel with splits at the kernel roots and t = 1/2.
double identity_rhs(const IntegrandSpec& spec, const Interval& iv,
                    const LambdaRule& rule, const OracleOptions& opt = {});

/// rule_gap minus identity_rhs; vanishes (up to oracle error) for every
/// twice-differentiable f.
double identity_residual(const IntegrandSpec& spec, const Interval& iv,
                         const LambdaRule& rule, const OracleOptions& opt = {});

/// Brute-force value of (b-a)^2 * integral of |k(t)| |f''(ta+(1-t)b)|;
/// sits between |rule_gap| and the theorem bounds when |f''| is convex.
double kernel_bound_oracle(const IntegrandSpec& spec, const Interval& iv,
                           const LambdaRule& rule, const OracleOptions& opt = {});

struct CoefficientCheck {
    std::string name;
    double closed_form;
    double numeric;
    double deviation;
};

struct CoefficientReport {
    std::vector<CoefficientCheck> checks;
    double max_deviation;
    bool pass;
};

/// Integrates every half-interval kernel moment numerically and compares
/// against the closed forms of moment_coefficients and abs_kernel_mass.
CoefficientReport verify_coefficients(const LambdaRule& rule, double tol = 1e-12,
                                      const OracleOptions& opt = {});

struct CorpusEntry {
    IntegrandSpec spec;
    Interval iv;
    bool convex_f;
    bool convex_abs_d2;
};

/// The fixed verification corpus: x^2..x^5 on [0,1], 1/x on [1,2],
/// exp on [0,1], -ln on [1,2]. All have convex f and convex |f''|.
const std::vector<CorpusEntry>& corpus();

} // namespace quadcert
