#include "oracle.hpp"

#include <algorithm>
#include <cmath>

namespace quadcert {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    long budget;
    long evals = 0;
    double est_error = 0.0;
    bool converged = true;

    double eval(double x) {
        ++evals;
        return f(x);
    }

    // Classic adaptive Simpson with Richardson correction (S2-S1)/15.
    double refine(double a, double b, double fa, double fm, double fb,
                  double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        if (evals + 2 > budget) {
            converged = false;
            est_error += tol;
            return whole;
        }
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double h = b - a;
        const double left = h / 12.0 * (fa + 4.0 * flm + fm);
        const double right = h / 12.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
            if (depth <= 0 && std::abs(delta) > 15.0 * tol) converged = false;
            est_error += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               refine(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
};

RefResult integrate_panel(const std::function<double(double)>& f, double a,
                          double b, double tol, long budget) {
    SimpsonState st{f, budget};
    const double m = 0.5 * (a + b);
    const double fa = st.eval(a);
    const double fm = st.eval(m);
    const double fb = st.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double value = st.refine(a, b, fa, fm, fb, whole, tol, 52);
    return RefResult{value, st.est_error, st.evals, st.converged};
}

double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, double tol, const OracleOptions& opt,
                          long& evals) {
    const RefResult r = integrate_panel(f, a, b, tol, opt.budget - evals);
    evals += r.evaluations;
    if (!r.converged) throw BudgetError(r.value);
    return r.value;
}

// Interior breakpoints of |k|: the kernel roots lambda, 1-lambda, and the
// branch seam at 1/2.
std::vector<double> kernel_panels(double lambda) {
    std::vector<double> pts{0.0, 0.5, 1.0};
    if (lambda > 0.0 && lambda < 1.0) {
        pts.push_back(lambda);
        pts.push_back(1.0 - lambda);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double integrate_kernel_weighted(const std::function<double(double)>& g,
                                 const LambdaRule& rule, double tol,
                                 const OracleOptions& opt) {
    const std::vector<double> pts = kernel_panels(rule.lambda);
    const double panel_tol = tol / double(pts.size() - 1);
    long evals = 0;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate_or_throw(g, pts[i], pts[i + 1], panel_tol, opt, evals);
    return total;
}

double interval_mean(const IntegrandSpec& spec, const Interval& iv,
                     const OracleOptions& opt) {
    if (spec.has_exact()) return spec.exact_mean(iv.a, iv.b);
    const RefResult r = reference_integral(spec.f, iv, opt.tol * iv.width(), opt.budget);
    if (!r.converged) throw BudgetError(r.value / iv.width());
    return r.value / iv.width();
}

} // namespace

RefResult reference_integral(const std::function<double(double)>& f,
                             const Interval& iv, double tol, long budget) {
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
    return integrate_panel(f, iv.a, iv.b, tol, budget);
}

double rule_gap(const IntegrandSpec& spec, const Interval& iv,
                const LambdaRule& rule, const OracleOptions& opt) {
    const double fa = spec.f(iv.a);
    const double fm = spec.f(iv.midpoint());
    const double fb = spec.f(iv.b);
    return interval_mean(spec, iv, opt) - rule_value(fa, fm, fb, rule);
}

double identity_rhs(const IntegrandSpec& spec, const Interval& iv,
                    const LambdaRule& rule, const OracleOptions& opt) {
    if (!spec.d2) throw std::invalid_argument("integrand lacks f''");
    const double w2 = iv.width() * iv.width();
    auto g = [&](double t) {
        return kernel_k(t, rule) * spec.d2(t * iv.a + (1.0 - t) * iv.b);
    };
    return w2 * integrate_kernel_weighted(g, rule, opt.tol, opt);
}

double identity_residual(const IntegrandSpec& spec, const Interval& iv,
                         const LambdaRule& rule, const OracleOptions& opt) {
    return rule_gap(spec, iv, rule, opt) - identity_rhs(spec, iv, rule, opt);
}

double kernel_bound_oracle(const IntegrandSpec& spec, const Interval& iv,
                           const LambdaRule& rule, const OracleOptions& opt) {
    if (!spec.d2) throw std::invalid_argument("integrand lacks f''");
    const double w2 = iv.width() * iv.width();
    auto g = [&](double t) {
        return std::abs(kernel_k(t, rule)) *
               std::abs(spec.d2(t * iv.a + (1.0 - t) * iv.b));
    };
    return w2 * integrate_kernel_weighted(g, rule, opt.tol, opt);
}

CoefficientReport verify_coefficients(const LambdaRule& rule, double tol,
                                      const OracleOptions& opt) {
    const double lam = rule.lambda;
    auto half1 = [lam](double t) { return std::abs(t * (t - lam)); };
    auto half2 = [lam](double t) {
        return std::abs((1.0 - t) * (1.0 - lam - t));
    };

    auto moment = [&](auto&& weight_fn, bool first_half) {
        const double lo = first_half ? 0.0 : 0.5;
        const double hi = first_half ? 0.5 : 1.0;
        const double split = first_half ? lam : 1.0 - lam;
        long evals = 0;
        auto g = [&](double t) {
            return (first_half ? half1(t) : half2(t)) * weight_fn(t);
        };
        if (split > lo && split < hi)
            return integrate_or_throw(g, lo, split, 0.5 * opt.tol, opt, evals) +
                   integrate_or_throw(g, split, hi, 0.5 * opt.tol, opt, evals);
        return integrate_or_throw(g, lo, hi, opt.tol, opt, evals);
    };

    auto t_weight = [](double t) { return t; };
    auto one_minus_t = [](double t) { return 1.0 - t; };
    auto unit = [](double) { return 1.0; };

    const MomentCoefficients c = moment_coefficients(rule);
    const double mass = abs_kernel_mass(rule);

    CoefficientReport report;
    auto add = [&](const std::string& name, double closed, double numeric) {
        report.checks.push_back(
            CoefficientCheck{name, closed, numeric, std::abs(closed - numeric)});
    };
    add("a1", c.a1, moment(t_weight, true));
    add("b1", c.b1, moment(one_minus_t, true));
    add("a2", c.a2, moment(t_weight, false));
    add("b2", c.b2, moment(one_minus_t, false));
    add("mass_first_half", mass, moment(unit, true));
    add("mass_second_half", mass, moment(unit, false));

    report.max_deviation = 0.0;
    for (const auto& chk : report.checks)
        report.max_deviation = std::max(report.max_deviation, chk.deviation);
    report.pass = report.max_deviation < tol;
    return report;
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        for (int n = 2; n <= 5; ++n)
            v.push_back(CorpusEntry{make_builtin("power(" + std::to_string(n) + ")").integrand,
                                    Interval(0.0, 1.0), true, true});
        v.push_back(CorpusEntry{make_builtin("reciprocal").integrand,
                                Interval(1.0, 2.0), true, true});
        v.push_back(CorpusEntry{make_builtin("exp").integrand, Interval(0.0, 1.0),
                                true, true});
        IntegrandSpec neg_ln;
        neg_ln.f = [](double x) { return -std::log(x); };
        neg_ln.d2 = [](double x) { return 1.0 / (x * x); };
        neg_ln.exact_mean = [](double a, double b) {
            return 1.0 - (b * std::log(b) - a * std::log(a)) / (b - a);
        };
        neg_ln.label = "-ln";
        v.push_back(CorpusEntry{neg_ln, Interval(1.0, 2.0), true, true});
        return v;
    }();
    return entries;
}

} // namespace quadcert
