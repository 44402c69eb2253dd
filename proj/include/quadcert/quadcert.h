/* quadcert: certified quadrature with convex-|f''| error bounds.
 *
 * C API over the C++ core. All functions return qc_status; outputs are
 * written through pointers. Handles are opaque and freed with the
 * matching *_free function. Strings returned through char** are owned by
 * the caller and released with qc_string_free.
 */
#ifndef QUADCERT_H
#define QUADCERT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qc_status {
    QC_OK = 0,
    QC_ERR_DOMAIN = 1,    /* argument outside its mathematical domain */
    QC_ERR_PARSE = 2,     /* expression syntax error */
    QC_ERR_EVAL = 3,      /* evaluation error (ln of nonpositive, ...) */
    QC_ERR_BUDGET = 4,    /* oracle evaluation budget exhausted */
    QC_ERR_INVALID = 5    /* invalid argument (null pointer, bad name) */
} qc_status;

typedef struct qc_function qc_function;
typedef struct qc_certificate qc_certificate;

/* ---- functions: expression language and builtin catalog ---- */

/* Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
 * factor := atom ('^' number)?; atom := number | 'x' | ident '(' expr ')'
 * | '(' expr ')' | '-' atom. Idents: exp ln sin cos sqrt abs. */
qc_status qc_function_parse(const char* text, qc_function** out,
                            char* errbuf, size_t errlen);

/* Builtins: "power(n)", "reciprocal", "exp", "ln",
 * "monomial-sum(c0,c1,...)". */
qc_status qc_function_builtin(const char* name, qc_function** out,
                              char* errbuf, size_t errlen);

void qc_function_free(qc_function* fn);

/* Value and first/second derivative at x. Expressions propagate order-2
 * jets; builtins use their closed-form f'' and report d1 as NaN. */
qc_status qc_function_eval_jet(const qc_function* fn, double x, double* value,
                               double* d1, double* d2);

/* Midpoint-convexity probe of |f''| on [a,b]; heuristic evidence, not
 * proof. samples <= 0 selects the default (256). */
qc_status qc_function_probe_convexity(const qc_function* fn, double a,
                                      double b, int samples, int* convex_out);

/* ---- rule family and theorem bounds ---- */

qc_status qc_kernel(double t, double lambda, double* out);
qc_status qc_rule_value(double fa, double fm, double fb, double lambda,
                        double* out);
qc_status qc_abs_kernel_mass(double lambda, double* out);
/* out[4] = {a1, b1, a2, b2}. */
qc_status qc_moment_coefficients(double lambda, double out[4]);
qc_status qc_bound_first_order(double width, double d2a, double d2b,
                               double lambda, double* out);
qc_status qc_bound_power_mean(double width, double d2a, double d2b, double q,
                              double lambda, double* out);
/* Minimizing lambda for the first-order (first_order != 0) or power-mean
 * bound at the given endpoint curvatures. */
qc_status qc_best_lambda(double d2a, double d2b, double q, int first_order,
                         double* out);

/* ---- certified composite integration ---- */

/* lambda_auto != 0 selects the per-cell minimizing lambda and ignores
 * lambda. q = 1 uses the first-order bound family. */
qc_status qc_integrate(const qc_function* fn, double a, double b, double tol,
                       double lambda, int lambda_auto, double q,
                       qc_certificate** out, char* errbuf, size_t errlen);

void qc_certificate_free(qc_certificate* cert);
double qc_certificate_value(const qc_certificate* cert);
double qc_certificate_bound(const qc_certificate* cert);
long qc_certificate_cell_count(const qc_certificate* cert);
long qc_certificate_evaluations(const qc_certificate* cert);
int qc_certificate_converged(const qc_certificate* cert);
qc_status qc_certificate_to_json(const qc_certificate* cert, char** json_out);

/* ---- reports (JSON payloads) ---- */

void qc_string_free(char* s);

/* Overrides the default 10^6 oracle evaluation budget for subsequent
 * calls in this process (also settable via QUADCERT_EVAL_BUDGET). */
void qc_set_eval_budget(long budget);

/* suite: "identity" | "bounds" | "coefficients". *violated is set to 1
 * when a check fails (the call itself still returns QC_OK). */
qc_status qc_verify_report(const char* suite, double tol, char** json_out,
                           int* violated, char* errbuf, size_t errlen);

/* Gap/bound table over a uniform lambda grid of grid_n points (plus the
 * Simpson point). Either output pointer may be NULL. */
qc_status qc_sweep_report(const qc_function* fn, double a, double b,
                          int grid_n, double q, char** json_out,
                          char** csv_out, char* errbuf, size_t errlen);

/* prop: "1" | "2" | "3" | "all". n is the exponent for proposition 1. */
qc_status qc_means_report(double a, double b, int n, double q,
                          const char* prop, char** json_out, int* violated,
                          char* errbuf, size_t errlen);

/* kind: "arithmetic" "geometric" "harmonic" "logarithmic" "identric"
 * "p-logarithmic" (p consulted only for the last). */
qc_status qc_mean_value(const char* kind, double p, double a, double b,
                        double* out);

#ifdef __cplusplus
}
#endif

#endif /* QUADCERT_H */
