#pragma once

#include <vector>

#include "expr.hpp"
#include "rule.hpp"

namespace quadcert {

enum class LambdaPolicy { Fixed, PerCellBest };

/// One cell of the composite partition. q_value and bound are on integral
/// scale (the per-interval-mean quantities times the cell width).
struct Cell {
    Interval iv;
    double q_value;
    double bound;
    double lambda;
};

/// Result of certified composite integration: the value, a theorem-backed
/// total error bound (conditional on |f''| convexity on the parent
/// interval), and the per-cell records in left-to-right order.
struct Certificate {
    double value;
    double total_bound;
    std::vector<Cell> cells;
    LambdaPolicy policy;
    double q;
    long evaluations;
    bool converged;
};

/// Greedy refinement: repeatedly bisects the cell with the largest bound
/// until the total certified bound drops to tol or the cell budget (2^16)
/// is reached. Deterministic for fixed inputs.
Certificate integrate_certified(const IntegrandSpec& fn, const Interval& iv,
                                double tol, LambdaPolicy policy,
                                const LambdaRule& fixed_rule,
                                const PowerExponent& q);

} // namespace quadcert
