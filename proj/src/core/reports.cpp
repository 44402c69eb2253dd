#include "reports.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "means.hpp"

namespace quadcert {

namespace {

std::vector<double> lambda_grid_11() {
    std::vector<double> g;
    for (int i = 0; i <= 10; ++i) g.push_back(double(i) / 10.0);
    return g;
}

json identity_suite(double tol, const OracleOptions& opt, bool& violated) {
    const double threshold = std::max(10.0 * tol, 1e-14);
    json cases = json::array();
    double worst = 0.0;
    for (const CorpusEntry& entry : corpus()) {
        for (double lam : lambda_grid_11()) {
            const LambdaRule rule(lam);
            const double res = identity_residual(entry.spec, entry.iv, rule, opt);
            worst = std::max(worst, std::abs(res));
            if (std::abs(res) >= threshold) violated = true;
            cases.push_back({{"function", entry.spec.label},
                             {"lambda", lam},
                             {"residual", res}});
        }
    }
    return {{"suite", "identity"},
            {"threshold", threshold},
            {"max_abs_residual", worst},
            {"cases", cases}};
}

json bounds_suite(double /*tol*/, const OracleOptions& opt, bool& violated) {
    const std::vector<double> qs{1.0, 1.5, 2.0, 3.0, 5.0};
    json cases = json::array();
    for (const CorpusEntry& entry : corpus()) {
        const EndpointCurvature curv(std::abs(entry.spec.d2(entry.iv.a)),
                                     std::abs(entry.spec.d2(entry.iv.b)));
        for (double lam : lambda_grid_11()) {
            const LambdaRule rule(lam);
            const double gap = rule_gap(entry.spec, entry.iv, rule, opt);
            const double ko = kernel_bound_oracle(entry.spec, entry.iv, rule, opt);
            const double b1 = bound_first_order(entry.iv.width(), curv, rule).value;
            const double slack = 1e-12 * std::max(1.0, b1);
            bool ok = std::abs(gap) <= ko + slack && ko <= b1 + slack;
            json pm = json::array();
            for (double qv : qs) {
                const double bq =
                    bound_power_mean(entry.iv.width(), curv, PowerExponent(qv), rule)
                        .value;
                const bool pm_ok = ko <= bq + 1e-12 * std::max(1.0, bq);
                if (!pm_ok) ok = false;
                pm.push_back({{"q", qv}, {"bound", bq}, {"holds", pm_ok}});
            }
            if (!ok) violated = true;
            cases.push_back({{"function", entry.spec.label},
                             {"lambda", lam},
                             {"gap", gap},
                             {"kernel_bound_oracle", ko},
                             {"bound_first_order", b1},
                             {"power_mean", pm},
                             {"holds", ok}});
        }
        // Hadamard double inequality for the convex corpus members.
        const double fm = entry.spec.f(entry.iv.midpoint());
        const double endpoint_avg =
            0.5 * (entry.spec.f(entry.iv.a) + entry.spec.f(entry.iv.b));
        const double mean = entry.spec.has_exact()
                                ? entry.spec.exact_mean(entry.iv.a, entry.iv.b)
                                : reference_integral(entry.spec.f, entry.iv, opt.tol,
                                                     opt.budget)
                                          .value /
                                      entry.iv.width();
        const double lower_margin = mean - fm;
        const double upper_margin = endpoint_avg - mean;
        const bool hadamard_ok = lower_margin >= -1e-12 && upper_margin >= -1e-12;
        if (entry.convex_f && !hadamard_ok) violated = true;
        cases.push_back({{"function", entry.spec.label},
                         {"check", "hadamard"},
                         {"lower_margin", lower_margin},
                         {"upper_margin", upper_margin},
                         {"holds", hadamard_ok}});
    }
    return {{"suite", "bounds"}, {"cases", cases}};
}

json coefficients_suite(double tol, const OracleOptions& opt, bool& violated) {
    json cases = json::array();
    double worst = 0.0;
    auto run = [&](const LambdaRule& rule, const char* regime) {
        const CoefficientReport rep = verify_coefficients(rule, tol, opt);
        worst = std::max(worst, rep.max_deviation);
        if (!rep.pass) violated = true;
        json checks = json::array();
        for (const CoefficientCheck& c : rep.checks)
            checks.push_back({{"name", c.name},
                              {"closed_form", c.closed_form},
                              {"numeric", c.numeric},
                              {"deviation", c.deviation}});
        cases.push_back({{"lambda", rule.lambda},
                         {"regime", regime},
                         {"max_deviation", rep.max_deviation},
                         {"pass", rep.pass},
                         {"checks", checks}});
    };
    for (double lam : lambda_grid_11())
        run(LambdaRule(lam), lam > 0.5 ? "high" : "low");
    run(LambdaRule(0.5, Regime::High), "high"); // seam from the other side
    return {{"suite", "coefficients"},
            {"tolerance", tol},
            {"max_deviation", worst},
            {"cases", cases}};
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

json verify_report(const std::string& suite, double tol,
                   const OracleOptions& opt, bool& violated) {
    violated = false;
    if (suite == "identity") return identity_suite(tol, opt, violated);
    if (suite == "bounds") return bounds_suite(tol, opt, violated);
    if (suite == "coefficients") return coefficients_suite(tol, opt, violated);
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

SweepOutput sweep_report(const IntegrandSpec& fn, const Interval& iv,
                         int grid_n, const PowerExponent& q,
                         const OracleOptions& opt) {
    if (grid_n < 2) throw std::domain_error("lambda grid needs at least 2 points");
    std::vector<double> grid;
    for (int i = 0; i < grid_n; ++i)
        grid.push_back(double(i) / double(grid_n - 1));
    grid.push_back(1.0 / 3.0); // Simpson point is always reported
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const EndpointCurvature curv(std::abs(fn.d2(iv.a)), std::abs(fn.d2(iv.b)));
    json rows = json::array();
    std::ostringstream csv;
    csv << "lambda,gap,bound_first_order,bound_power_mean,tightness\n";
    for (double lam : grid) {
        const LambdaRule rule(lam);
        const double gap = rule_gap(fn, iv, rule, opt);
        const double b1 = bound_first_order(iv.width(), curv, rule).value;
        const double bq = bound_power_mean(iv.width(), curv, q, rule).value;
        json row = {{"lambda", lam},
                    {"gap", gap},
                    {"bound_first_order", b1},
                    {"bound_power_mean", bq}};
        csv << format_double(lam) << ',' << format_double(gap) << ','
            << format_double(b1) << ',' << format_double(bq) << ',';
        if (b1 > 0.0) {
            const double tightness = std::abs(gap) / b1;
            row["tightness"] = tightness;
            csv << format_double(tightness);
        } else {
            row["tightness"] = nullptr;
        }
        csv << '\n';
        rows.push_back(row);
    }
    json payload = {{"function", fn.label},
                    {"a", iv.a},
                    {"b", iv.b},
                    {"q", q.q},
                    {"rows", rows}};
    return SweepOutput{payload, csv.str()};
}

json means_report(double a, double b, int n, const PowerExponent& q,
                  const std::string& prop, bool& violated) {
    violated = false;
    using means::MeanKind;
    json payload;
    payload["means"] = {
        {"arithmetic", means::mean_value(MeanKind::Arithmetic, a, b)},
        {"geometric", means::mean_value(MeanKind::Geometric, a, b)},
        {"harmonic", means::mean_value(MeanKind::Harmonic, a, b)},
        {"logarithmic", means::mean_value(MeanKind::Logarithmic, a, b)},
        {"identric", means::mean_value(MeanKind::Identric, a, b)}};

    auto gap_bound_json = [&](const means::GapBound& gb) {
        if (!gb.holds()) violated = true;
        return json{{"gap", gb.gap}, {"bound", gb.bound}, {"holds", gb.holds()}};
    };

    const bool all = prop == "all";
    json props;
    if (all || prop == "1") {
        const means::GapBound gb = means::prop1_gap(n, a, b);
        const means::GapBound printed = means::prop1_gap_printed_constant(n, a, b);
        json j = gap_bound_json(gb);
        j["n"] = n;
        j["bound_with_printed_168_constant"] = printed.bound;
        props["prop1"] = j;
    }
    if (all || prop == "2") {
        const means::Prop2Result r = means::prop2_gaps(a, b, q);
        props["prop2"] = {{"q", q.q},
                          {"midpoint", gap_bound_json(r.midpoint)},
                          {"trapezoid", gap_bound_json(r.trapezoid)}};
    }
    if (all || prop == "3") {
        const means::GapBound gb = means::prop3_gap(a, b, q);
        json j = gap_bound_json(gb);
        j["q"] = q.q;
        props["prop3"] = j;
    }
    if (props.empty())
        throw std::invalid_argument("prop must be 1, 2, 3 or all");
    payload["propositions"] = props;
    return payload;
}

json certificate_json(const Certificate& cert) {
    json cells = json::array();
    for (const Cell& c : cert.cells)
        cells.push_back({{"a", c.iv.a},
                         {"b", c.iv.b},
                         {"value", c.q_value},
                         {"bound", c.bound},
                         {"lambda", c.lambda}});
    return {{"value", cert.value},
            {"total_bound", cert.total_bound},
            {"cell_count", cert.cells.size()},
            {"policy", cert.policy == LambdaPolicy::Fixed ? "fixed" : "best"},
            {"q", cert.q},
            {"evaluations", cert.evaluations},
            {"converged", cert.converged},
            {"cells", cells}};
}

} // namespace quadcert
