#include "quadcert/quadcert.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "core/composite.hpp"
#include "core/expr.hpp"
#include "core/means.hpp"
#include "core/oracle.hpp"
#include "core/reports.hpp"
#include "core/rule.hpp"

using namespace quadcert;

struct qc_function {
    FunctionSpec spec;
};

struct qc_certificate {
    Certificate cert;
};

namespace {

long g_eval_budget = [] {
    if (const char* env = std::getenv("QUADCERT_EVAL_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 1'000'000L;
}();

OracleOptions default_options() {
    OracleOptions opt;
    opt.budget = g_eval_budget;
    return opt;
}

void write_error(char* errbuf, size_t errlen, const char* msg) {
    if (!errbuf || errlen == 0) return;
    std::strncpy(errbuf, msg, errlen - 1);
    errbuf[errlen - 1] = '\0';
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Translates the core's exception idiom into status codes.
template <typename Fn>
qc_status guarded(Fn&& fn, char* errbuf = nullptr, size_t errlen = 0) {
    try {
        fn();
        return QC_OK;
    } catch (const ParseError& e) {
        write_error(errbuf, errlen, e.what());
        return QC_ERR_PARSE;
    } catch (const EvalError& e) {
        write_error(errbuf, errlen, e.what());
        return QC_ERR_EVAL;
    } catch (const BudgetError& e) {
        write_error(errbuf, errlen, e.what());
        return QC_ERR_BUDGET;
    } catch (const std::domain_error& e) {
        write_error(errbuf, errlen, e.what());
        return QC_ERR_DOMAIN;
    } catch (const std::exception& e) {
        write_error(errbuf, errlen, e.what());
        return QC_ERR_INVALID;
    }
}

} // namespace

extern "C" {

qc_status qc_function_parse(const char* text, qc_function** out, char* errbuf,
                            size_t errlen) {
    if (!text || !out) return QC_ERR_INVALID;
    return guarded(
        [&] { *out = new qc_function{make_expression_function(text)}; }, errbuf,
        errlen);
}

qc_status qc_function_builtin(const char* name, qc_function** out,
                              char* errbuf, size_t errlen) {
    if (!name || !out) return QC_ERR_INVALID;
    return guarded([&] { *out = new qc_function{make_builtin(name)}; }, errbuf,
                   errlen);
}

void qc_function_free(qc_function* fn) { delete fn; }

qc_status qc_function_eval_jet(const qc_function* fn, double x, double* value,
                               double* d1, double* d2) {
    if (!fn) return QC_ERR_INVALID;
    return guarded([&] {
        if (fn->spec.expr) {
            const Jet2 j = eval_jet2(fn->spec.expr, x);
            if (value) *value = j.v;
            if (d1) *d1 = j.d1;
            if (d2) *d2 = j.d2;
        } else {
            if (value) *value = fn->spec.integrand.f(x);
            if (d1) *d1 = std::nan(""); // builtins carry f and f'' only
            if (d2) *d2 = fn->spec.integrand.d2(x);
        }
    });
}

qc_status qc_function_probe_convexity(const qc_function* fn, double a,
                                      double b, int samples, int* convex_out) {
    if (!fn || !convex_out) return QC_ERR_INVALID;
    return guarded([&] {
        const Interval iv(a, b);
        auto g = [&](double x) { return std::abs(fn->spec.integrand.d2(x)); };
        *convex_out = convexity_probe(g, iv, samples > 0 ? samples : 256) ? 1 : 0;
    });
}

qc_status qc_kernel(double t, double lambda, double* out) {
    if (!out) return QC_ERR_INVALID;
    return guarded([&] { *out = kernel_k(t, LambdaRule(lambda)); });
}

qc_status qc_rule_value(double fa, double fm, double fb, double lambda,
                        double* out) {
    if (!out) return QC_ERR_INVALID;
    return guarded([&] { *out = rule_value(fa, fm, fb, LambdaRule(lambda)); });
}

qc_status qc_abs_kernel_mass(double lambda, double* out) {
    if (!out) return QC_ERR_INVALID;
    return guarded([&] { *out = abs_kernel_mass(LambdaRule(lambda)); });
}

qc_status qc_moment_coefficients(double lambda, double out[4]) {
    if (!out) return QC_ERR_INVALID;
    return guarded([&] {
        const MomentCoefficients c = moment_coefficients(LambdaRule(lambda));
        out[0] = c.a1;
        out[1] = c.b1;
        out[2] = c.a2;
        out[3] = c.b2;
    });
}

qc_status qc_bound_first_order(double width, double d2a, double d2b,
                               double lambda, double* out) {
    if (!out) return QC_ERR_INVALID;
    return guarded([&] {
        *out = bound_first_order(width, EndpointCurvature(d2a, d2b),
                                 LambdaRule(lambda))
                   .value;
    });
}

qc_status qc_bound_power_mean(double width, double d2a, double d2b, double q,
                              double lambda, double* out) {
    if (!out) return QC_ERR_INVALID;
    return guarded([&] {
        *out = bound_power_mean(width, EndpointCurvature(d2a, d2b),
                                PowerExponent(q), LambdaRule(lambda))
                   .value;
    });
}

qc_status qc_best_lambda(double d2a, double d2b, double q, int first_order,
                         double* out) {
    if (!out) return QC_ERR_INVALID;
    return guarded([&] {
        *out = best_lambda(1.0, EndpointCurvature(d2a, d2b),
                           PowerExponent(q >= 1.0 ? q : 1.0), first_order != 0)
                   .lambda;
    });
}

qc_status qc_integrate(const qc_function* fn, double a, double b, double tol,
                       double lambda, int lambda_auto, double q,
                       qc_certificate** out, char* errbuf, size_t errlen) {
    if (!fn || !out) return QC_ERR_INVALID;
    return guarded(
        [&] {
            const Interval iv(a, b);
            const LambdaPolicy policy =
                lambda_auto ? LambdaPolicy::PerCellBest : LambdaPolicy::Fixed;
            const LambdaRule rule(lambda_auto ? 1.0 / 3.0 : lambda);
            *out = new qc_certificate{integrate_certified(
                fn->spec.integrand, iv, tol, policy, rule, PowerExponent(q))};
        },
        errbuf, errlen);
}

void qc_certificate_free(qc_certificate* cert) { delete cert; }

double qc_certificate_value(const qc_certificate* cert) {
    return cert->cert.value;
}

double qc_certificate_bound(const qc_certificate* cert) {
    return cert->cert.total_bound;
}

long qc_certificate_cell_count(const qc_certificate* cert) {
    return static_cast<long>(cert->cert.cells.size());
}

long qc_certificate_evaluations(const qc_certificate* cert) {
    return cert->cert.evaluations;
}

int qc_certificate_converged(const qc_certificate* cert) {
    return cert->cert.converged ? 1 : 0;
}

qc_status qc_certificate_to_json(const qc_certificate* cert, char** json_out) {
    if (!cert || !json_out) return QC_ERR_INVALID;
    return guarded([&] { *json_out = dup_string(certificate_json(cert->cert).dump()); });
}

void qc_string_free(char* s) { std::free(s); }

void qc_set_eval_budget(long budget) {
    if (budget > 0) g_eval_budget = budget;
}

qc_status qc_verify_report(const char* suite, double tol, char** json_out,
                           int* violated, char* errbuf, size_t errlen) {
    if (!suite || !json_out) return QC_ERR_INVALID;
    return guarded(
        [&] {
            bool bad = false;
            const json payload =
                verify_report(suite, tol > 0.0 ? tol : 1e-12, default_options(), bad);
            *json_out = dup_string(payload.dump());
            if (violated) *violated = bad ? 1 : 0;
        },
        errbuf, errlen);
}

qc_status qc_sweep_report(const qc_function* fn, double a, double b,
                          int grid_n, double q, char** json_out,
                          char** csv_out, char* errbuf, size_t errlen) {
    if (!fn) return QC_ERR_INVALID;
    return guarded(
        [&] {
            const SweepOutput out =
                sweep_report(fn->spec.integrand, Interval(a, b), grid_n,
                             PowerExponent(q), default_options());
            if (json_out) *json_out = dup_string(out.payload.dump());
            if (csv_out) *csv_out = dup_string(out.csv);
        },
        errbuf, errlen);
}

qc_status qc_means_report(double a, double b, int n, double q,
                          const char* prop, char** json_out, int* violated,
                          char* errbuf, size_t errlen) {
    if (!prop || !json_out) return QC_ERR_INVALID;
    return guarded(
        [&] {
            bool bad = false;
            const json payload = means_report(a, b, n, PowerExponent(q), prop, bad);
            *json_out = dup_string(payload.dump());
            if (violated) *violated = bad ? 1 : 0;
        },
        errbuf, errlen);
}

qc_status qc_mean_value(const char* kind, double p, double a, double b,
                        double* out) {
    if (!kind || !out) return QC_ERR_INVALID;
    return guarded([&] {
        using means::MeanKind;
        const std::string k = kind;
        MeanKind mk;
        if (k == "arithmetic") mk = MeanKind::Arithmetic;
        else if (k == "geometric") mk = MeanKind::Geometric;
        else if (k == "harmonic") mk = MeanKind::Harmonic;
        else if (k == "logarithmic") mk = MeanKind::Logarithmic;
        else if (k == "identric") mk = MeanKind::Identric;
        else if (k == "p-logarithmic") mk = MeanKind::PLogarithmic;
        else throw std::invalid_argument("unknown mean kind '" + k + "'");
        *out = means::mean_value(mk, a, b, p);
    });
}

} // extern "C"
