#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace quadcert {

struct EvalError : std::runtime_error {
    double x;
    EvalError(const std::string& msg, double x_)
        : std::runtime_error(msg + " at x = " + std::to_string(x_)), x(x_) {}
};

/// Order-2 jet: value, first and second derivative, propagated through
/// arithmetic by the truncated Taylor rules.
struct Jet2 {
    double v;
    double d1;
    double d2;

    static Jet2 constant(double c) { return {c, 0.0, 0.0}; }
    static Jet2 variable(double x) { return {x, 1.0, 0.0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

inline Jet2 operator-(const Jet2& a) { return {-a.v, -a.d1, -a.d2}; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double w = a.v / b.v;
    const double w1 = (a.d1 - w * b.d1) / b.v;
    const double w2 = (a.d2 - 2.0 * w1 * b.d1 - w * b.d2) / b.v;
    return {w, w1, w2};
}

/// Lifts a scalar function with known g, g', g'' at a.v through the chain
/// rule: (g(a))'' = g''(a) a'^2 + g'(a) a''.
inline Jet2 compose(double g, double g1, double g2, const Jet2& a) {
    return {g, g1 * a.d1, g2 * a.d1 * a.d1 + g1 * a.d2};
}

inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return compose(e, e, e, a);
}

inline Jet2 log(const Jet2& a, double x) {
    if (!(a.v > 0.0)) throw EvalError("ln of nonpositive value", x);
    return compose(std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v), a);
}

inline Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(s, c, -s, a);
}

inline Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(c, -s, -c, a);
}

inline Jet2 sqrt(const Jet2& a, double x) {
    if (!(a.v > 0.0)) throw EvalError("sqrt of nonpositive value", x);
    const double r = std::sqrt(a.v);
    return compose(r, 0.5 / r, -0.25 / (r * a.v), a);
}

// abs is differentiable away from 0 with |u|' = sign(u) u'.
inline Jet2 abs(const Jet2& a, double x) {
    if (a.v == 0.0) throw EvalError("abs is not differentiable at 0", x);
    const double s = a.v > 0.0 ? 1.0 : -1.0;
    return {s * a.v, s * a.d1, s * a.d2};
}

/// Constant-exponent power via sign-aware u^p rules.
inline Jet2 pow(const Jet2& a, double p, double x) {
    if (p == 0.0) return Jet2::constant(1.0);
    if (p == 1.0) return a;
    if (a.v == 0.0) {
        if (p < 0.0) throw EvalError("division by zero in power", x);
        // u^p at u=0: derivatives vanish for p > 2; p in (0,2] handled below.
        if (p > 2.0) return {0.0, 0.0, 0.0};
    }
    if (a.v < 0.0 && p != std::floor(p))
        throw EvalError("fractional power of negative value", x);
    const double g = std::pow(a.v, p);
    const double g1 = p * std::pow(a.v, p - 1.0);
    const double g2 = p * (p - 1.0) * std::pow(a.v, p - 2.0);
    return compose(g, g1, g2, a);
}

} // namespace quadcert
