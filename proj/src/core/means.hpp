#pragma once

#include "rule.hpp"

namespace quadcert {
namespace means {

enum class MeanKind { Arithmetic, Geometric, Harmonic, Logarithmic, Identric, PLogarithmic };

/// Closed-form special means. p is only consulted for PLogarithmic and
/// must avoid {-1, 0} exactly (those cases are the logarithmic and
/// identric means).
double mean_value(MeanKind kind, double a, double b, double p = 1.0);

struct GapBound {
    double gap;
    double bound;
    bool holds() const;
};

/// Simpson rule applied to x^n: |(1/3)A(a^n,b^n) + (2/3)A^n(a,b) - L_n^n|
/// bounded by n(n-1)(b-a)^2/162 (a^{n-2} + b^{n-2}).
GapBound prop1_gap(int n, double a, double b);

/// Same gap with the 1/168 constant as printed alongside the Simpson
/// proposition; emitted for comparison only.
GapBound prop1_gap_printed_constant(int n, double a, double b);

struct Prop2Result {
    GapBound midpoint;  // 1/L - 1/A
    GapBound trapezoid; // 1/L - 1/H
};

/// Power-mean midpoint/trapezoid bounds applied to f(x) = 1/x.
Prop2Result prop2_gaps(double a, double b, const PowerExponent& q);

/// Power-mean Simpson bound applied to f(x) = 1/x:
/// (1/3)/H + (2/3)/A - 1/L against the 59/133 coefficient bound.
GapBound prop3_gap(double a, double b, const PowerExponent& q);

} // namespace means
} // namespace quadcert
