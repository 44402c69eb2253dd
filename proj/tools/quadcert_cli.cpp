// Command-line surface over the quadcert C API: certified integration,
// oracle verification sweeps, lambda sweeps, and special-means reports.
// Every command prints a JSON report to stdout and exits 0 (ok),
// 1 (a checked inequality was violated) or 2 (error).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadcert/quadcert.h"

using json = nlohmann::ordered_json;

namespace {

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { qc_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedFunction {
    qc_function* ptr = nullptr;
    ~OwnedFunction() { qc_function_free(ptr); }
};

int emit(const std::string& command, const json& inputs, const json& results,
         const std::string& status) {
    json report = {{"command", command},
                   {"inputs", inputs},
                   {"results", results},
                   {"status", status}};
    std::cout << report.dump(2) << "\n";
    if (status == "violated") return 1;
    if (status == "error") return 2;
    return 0;
}

int emit_error(const std::string& command, const json& inputs,
               const std::string& message) {
    return emit(command, inputs, json{{"message", message}}, "error");
}

int make_function(const std::string& expr, const std::string& builtin,
                  OwnedFunction& fn, std::string& error) {
    char errbuf[256] = {0};
    if (!expr.empty() && !builtin.empty()) {
        error = "--f and --builtin are mutually exclusive";
        return 1;
    }
    qc_status st;
    if (!expr.empty())
        st = qc_function_parse(expr.c_str(), &fn.ptr, errbuf, sizeof errbuf);
    else if (!builtin.empty())
        st = qc_function_builtin(builtin.c_str(), &fn.ptr, errbuf, sizeof errbuf);
    else {
        error = "one of --f or --builtin is required";
        return 1;
    }
    if (st != QC_OK) {
        error = errbuf;
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadcert: certified quadrature with convex-|f''| bounds"};
    app.require_subcommand(1);

    std::string expr, builtin;
    double a = 0.0, b = 1.0, tol = 1e-6, q = 1.0;
    std::string lambda_arg = "0.3333333333333333";
    bool assume_convex = false;

    auto* integrate = app.add_subcommand("integrate", "certified integration");
    integrate->add_option("--f", expr, "integrand expression in x");
    integrate->add_option("--builtin", builtin, "builtin integrand name");
    integrate->add_option("--a", a, "lower endpoint")->required();
    integrate->add_option("--b", b, "upper endpoint")->required();
    integrate->add_option("--tol", tol, "target total bound");
    integrate->add_option("--lambda", lambda_arg, "rule parameter in [0,1], or 'auto'");
    integrate->add_option("--q", q, "power-mean exponent (1 = first-order bound)");
    integrate->add_flag("--assume-convex", assume_convex,
                        "skip the |f''| convexity probe");

    std::string suite = "identity";
    double vtol = 1e-12;
    auto* verify = app.add_subcommand("verify", "oracle verification sweeps");
    verify->add_option("--suite", suite, "identity | bounds | coefficients");
    verify->add_option("--tol", vtol, "check tolerance");

    int grid_n = 11;
    std::string csv_path;
    auto* sweep = app.add_subcommand("sweep", "gap/bound table over lambda");
    sweep->add_option("--f", expr, "integrand expression in x");
    sweep->add_option("--builtin", builtin, "builtin integrand name");
    sweep->add_option("--a", a, "lower endpoint")->required();
    sweep->add_option("--b", b, "upper endpoint")->required();
    sweep->add_option("--lambda-grid", grid_n, "grid point count");
    sweep->add_option("--q", q, "power-mean exponent");
    sweep->add_option("--csv", csv_path,
                      "write CSV here ('-' prints CSV instead of JSON)");

    int prop_n = 4;
    std::string prop = "all";
    auto* means = app.add_subcommand("means", "special means and propositions");
    means->add_option("--a", a, "first argument")->required();
    means->add_option("--b", b, "second argument")->required();
    means->add_option("--n", prop_n, "exponent for proposition 1");
    means->add_option("--q", q, "power-mean exponent for propositions 2/3");
    means->add_option("--prop", prop, "1 | 2 | 3 | all");

    CLI11_PARSE(app, argc, argv);

    char errbuf[256] = {0};

    if (integrate->parsed()) {
        const json inputs = {{"f", expr},       {"builtin", builtin},
                             {"a", a},          {"b", b},
                             {"tol", tol},      {"lambda", lambda_arg},
                             {"q", q},          {"assume_convex", assume_convex}};
        OwnedFunction fn;
        std::string err;
        if (make_function(expr, builtin, fn, err))
            return emit_error("integrate", inputs, err);

        if (!assume_convex) {
            int convex = 0;
            const qc_status st =
                qc_function_probe_convexity(fn.ptr, a, b, 0, &convex);
            if (st != QC_OK)
                return emit_error("integrate", inputs,
                                  "convexity probe failed to evaluate f''");
            if (!convex)
                return emit_error("integrate", inputs,
                                  "convexity of |f''| not established");
        }

        const bool lambda_auto = lambda_arg == "auto";
        double lambda = 0.0;
        if (!lambda_auto) {
            try {
                lambda = std::stod(lambda_arg);
            } catch (const std::exception&) {
                return emit_error("integrate", inputs,
                                  "--lambda must be a number or 'auto'");
            }
        }

        qc_certificate* cert = nullptr;
        const qc_status st =
            qc_integrate(fn.ptr, a, b, tol, lambda, lambda_auto ? 1 : 0, q,
                         &cert, errbuf, sizeof errbuf);
        if (st != QC_OK) return emit_error("integrate", inputs, errbuf);
        OwnedString cert_json;
        qc_certificate_to_json(cert, &cert_json.ptr);
        const bool converged = qc_certificate_converged(cert) != 0;
        qc_certificate_free(cert);
        return emit("integrate", inputs, json::parse(cert_json.str()),
                    converged ? "ok" : "unconverged");
    }

    if (verify->parsed()) {
        const json inputs = {{"suite", suite}, {"tol", vtol}};
        OwnedString payload;
        int violated = 0;
        const qc_status st = qc_verify_report(suite.c_str(), vtol, &payload.ptr,
                                              &violated, errbuf, sizeof errbuf);
        if (st != QC_OK) return emit_error("verify", inputs, errbuf);
        return emit("verify", inputs, json::parse(payload.str()),
                    violated ? "violated" : "ok");
    }

    if (sweep->parsed()) {
        const json inputs = {{"f", expr},   {"builtin", builtin},
                             {"a", a},      {"b", b},
                             {"lambda_grid", grid_n}, {"q", q}};
        OwnedFunction fn;
        std::string err;
        if (make_function(expr, builtin, fn, err))
            return emit_error("sweep", inputs, err);
        OwnedString payload, csv;
        const qc_status st = qc_sweep_report(fn.ptr, a, b, grid_n, q,
                                             &payload.ptr, &csv.ptr, errbuf,
                                             sizeof errbuf);
        if (st != QC_OK) return emit_error("sweep", inputs, errbuf);
        if (csv_path == "-") {
            std::cout << csv.str();
            return 0;
        }
        if (!csv_path.empty()) {
            std::ofstream out(csv_path);
            if (!out) return emit_error("sweep", inputs, "cannot open CSV path");
            out << csv.str();
        }
        return emit("sweep", inputs, json::parse(payload.str()), "ok");
    }

    if (means->parsed()) {
        const json inputs = {
            {"a", a}, {"b", b}, {"n", prop_n}, {"q", q}, {"prop", prop}};
        OwnedString payload;
        int violated = 0;
        const qc_status st =
            qc_means_report(a, b, prop_n, q, prop.c_str(), &payload.ptr,
                            &violated, errbuf, sizeof errbuf);
        if (st != QC_OK) return emit_error("means", inputs, errbuf);
        return emit("means", inputs, json::parse(payload.str()),
                    violated ? "violated" : "ok");
    }

    return 2;
}
