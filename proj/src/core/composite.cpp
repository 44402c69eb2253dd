#include "composite.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace quadcert {

namespace {

constexpr std::size_t kCellBudget = 1u << 16;

struct WorkCell {
    double a, b;
    double fa, fm, fb; // f at endpoints and midpoint
    double d2a, d2b;   // |f''| at endpoints
    double lambda;
    double q_value; // integral scale
    double bound;   // integral scale
};

struct WorstFirst {
    bool operator()(const WorkCell& x, const WorkCell& y) const {
        if (x.bound != y.bound) return x.bound < y.bound;
        return x.a > y.a; // deterministic tie-break: leftmost cell first
    }
};

} // namespace

Certificate integrate_certified(const IntegrandSpec& fn, const Interval& iv,
                                double tol, LambdaPolicy policy,
                                const LambdaRule& fixed_rule,
                                const PowerExponent& q) {
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
    if (!fn.d2) throw std::invalid_argument("integrand lacks f''");

    long evaluations = 0;
    auto f = [&](double x) {
        ++evaluations;
        return fn.f(x);
    };
    auto abs_d2 = [&](double x) {
        ++evaluations;
        return std::abs(fn.d2(x));
    };

    auto finish = [&](WorkCell& c) {
        const double width = c.b - c.a;
        LambdaRule rule = fixed_rule;
        const EndpointCurvature curv(c.d2a, c.d2b);
        if (policy == LambdaPolicy::PerCellBest)
            rule = best_lambda(width, curv, q, q.q == 1.0);
        c.lambda = rule.lambda;
        c.q_value = width * rule_value(c.fa, c.fm, c.fb, rule);
        const double mean_bound =
            (q.q == 1.0) ? bound_first_order(width, curv, rule).value
                         : bound_power_mean(width, curv, q, rule).value;
        c.bound = width * mean_bound;
    };

    WorkCell root;
    root.a = iv.a;
    root.b = iv.b;
    root.fa = f(iv.a);
    root.fm = f(iv.midpoint());
    root.fb = f(iv.b);
    root.d2a = abs_d2(iv.a);
    root.d2b = abs_d2(iv.b);
    finish(root);

    std::priority_queue<WorkCell, std::vector<WorkCell>, WorstFirst> heap;
    heap.push(root);
    double total = root.bound;

    while (total > tol && heap.size() < kCellBudget) {
        const WorkCell worst = heap.top();
        if (worst.bound == 0.0) break; // nothing left to improve
        heap.pop();
        total -= worst.bound;

        const double m = 0.5 * (worst.a + worst.b);
        const double d2m = abs_d2(m);

        WorkCell left;
        left.a = worst.a;
        left.b = m;
        left.fa = worst.fa;
        left.fm = f(0.5 * (worst.a + m));
        left.fb = worst.fm;
        left.d2a = worst.d2a;
        left.d2b = d2m;
        finish(left);

        WorkCell right;
        right.a = m;
        right.b = worst.b;
        right.fa = worst.fm;
        right.fm = f(0.5 * (m + worst.b));
        right.fb = worst.fb;
        right.d2a = d2m;
        right.d2b = worst.d2b;
        finish(right);

        total += left.bound + right.bound;
        heap.push(left);
        heap.push(right);
    }

    std::vector<WorkCell> cells;
    cells.reserve(heap.size());
    while (!heap.empty()) {
        cells.push_back(heap.top());
        heap.pop();
    }
    std::sort(cells.begin(), cells.end(),
              [](const WorkCell& x, const WorkCell& y) { return x.a < y.a; });

    Certificate cert;
    cert.policy = policy;
    cert.q = q.q;
    cert.evaluations = evaluations;
    cert.value = 0.0;
    cert.total_bound = 0.0;
    cert.cells.reserve(cells.size());
    for (const WorkCell& c : cells) {
        cert.value += c.q_value;
        cert.total_bound += c.bound;
        cert.cells.push_back(Cell{Interval(c.a, c.b), c.q_value, c.bound, c.lambda});
    }
    cert.converged = cert.total_bound <= tol;
    return cert;
}

} // namespace quadcert
