#include <doctest.h>

#include <cmath>

#include "core/oracle.hpp"

using namespace quadcert;

namespace {

IntegrandSpec poly(int n) {
    return make_builtin("power(" + std::to_string(n) + ")").integrand;
}

// Same integrand but without the closed-form mean, to exercise the
// numeric reference path.
IntegrandSpec strip_exact(IntegrandSpec spec) {
    spec.exact_mean = nullptr;
    return spec;
}

} // namespace

TEST_CASE("reference integral on smooth integrands") {
    const RefResult sq =
        reference_integral([](double x) { return x * x; }, Interval(0.0, 1.0), 1e-12);
    CHECK(sq.converged);
    CHECK(sq.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const double e = std::exp(1.0);
    const RefResult rec =
        reference_integral([](double x) { return 1.0 / x; }, Interval(1.0, e), 1e-12);
    CHECK(rec.converged);
    CHECK(rec.value == doctest::Approx(1.0).epsilon(1e-11));

    // interval mean of x^n is the n-logarithmic mean to the n-th power
    for (int n : {2, 3, 4, 5}) {
        const Interval iv(0.5, 2.0);
        const RefResult r = reference_integral(
            [n](double x) { return std::pow(x, n); }, iv, 1e-12);
        const double expect = (std::pow(iv.b, n + 1) - std::pow(iv.a, n + 1)) /
                              ((n + 1.0) * iv.width()) * iv.width();
        CHECK(r.value == doctest::Approx(expect).epsilon(1e-11));
    }

    CHECK_THROWS_AS(reference_integral([](double) { return 1.0; },
                                       Interval(0.0, 1.0), 0.0),
                    std::domain_error);
}

TEST_CASE("reference integral reports budget exhaustion") {
    const RefResult r = reference_integral(
        [](double x) { return std::exp(x) * std::sin(50.0 * x); },
        Interval(0.0, 10.0), 1e-14, 50);
    CHECK_FALSE(r.converged);
    CHECK(r.evaluations <= 52);
    CHECK(std::isfinite(r.value));
}

TEST_CASE("rule gap examples") {
    const Interval unit(0.0, 1.0);
    CHECK(rule_gap(poly(2), unit, LambdaRule(0.0)) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(rule_gap(poly(3), unit, LambdaRule(1.0 / 3.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rule_gap(poly(3), unit, LambdaRule(0.5)) ==
          doctest::Approx(-1.0 / 16.0).epsilon(1e-12));
    // numeric reference path agrees with the closed form
    CHECK(rule_gap(strip_exact(poly(3)), unit, LambdaRule(0.5)) ==
          doctest::Approx(-1.0 / 16.0).epsilon(1e-10));
}

TEST_CASE("identity right-hand side examples") {
    const Interval unit(0.0, 1.0);
    CHECK(identity_rhs(poly(3), unit, LambdaRule(0.5)) ==
          doctest::Approx(-1.0 / 16.0).epsilon(1e-10));
    CHECK(identity_rhs(poly(2), unit, LambdaRule(0.0)) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-10));

    IntegrandSpec linear;
    linear.f = [](double x) { return 3.0 * x - 1.0; };
    linear.d2 = [](double) { return 0.0; };
    linear.label = "linear";
    CHECK(identity_rhs(linear, unit, LambdaRule(0.7)) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(identity_residual(linear, unit, LambdaRule(0.7)) ==
          doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("identity residual vanishes on the corpus") {
    for (const CorpusEntry& entry : corpus()) {
        for (double lam : {0.0, 0.3, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
            CAPTURE(entry.spec.label);
            CAPTURE(lam);
            const double res =
                identity_residual(entry.spec, entry.iv, LambdaRule(lam));
            CHECK(std::abs(res) < 1e-10);
        }
    }
}

TEST_CASE("kernel bound oracle") {
    const Interval unit(0.0, 1.0);
    // triple equality case: k >= 0 and f'' affine nonnegative
    const double ko = kernel_bound_oracle(poly(3), unit, LambdaRule(0.0));
    CHECK(ko == doctest::Approx(1.0 / 8.0).epsilon(1e-10));
    CHECK(std::abs(rule_gap(poly(3), unit, LambdaRule(0.0))) ==
          doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    CHECK(bound_first_order(1.0, EndpointCurvature(0.0, 6.0), LambdaRule(0.0))
              .value == doctest::Approx(1.0 / 8.0).epsilon(1e-12));

    CHECK(kernel_bound_oracle(poly(2), unit, LambdaRule(1.0)) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-10));

    IntegrandSpec linear;
    linear.f = [](double x) { return x; };
    linear.d2 = [](double) { return 0.0; };
    CHECK(kernel_bound_oracle(linear, unit, LambdaRule(0.4)) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("sandwich inequalities on the corpus") {
    for (const CorpusEntry& entry : corpus()) {
        const EndpointCurvature curv(std::abs(entry.spec.d2(entry.iv.a)),
                                     std::abs(entry.spec.d2(entry.iv.b)));
        for (double lam : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            CAPTURE(entry.spec.label);
            CAPTURE(lam);
            const LambdaRule rule(lam);
            const double gap = rule_gap(entry.spec, entry.iv, rule);
            const double ko = kernel_bound_oracle(entry.spec, entry.iv, rule);
            const double b1 = bound_first_order(entry.iv.width(), curv, rule).value;
            const double slack = 1e-10 * std::max(1.0, b1);
            CHECK(std::abs(gap) <= ko + slack);
            CHECK(ko <= b1 + slack);
            for (double q : {1.0, 1.5, 2.0, 3.0, 5.0}) {
                const double bq = bound_power_mean(entry.iv.width(), curv,
                                                   PowerExponent(q), rule)
                                      .value;
                CHECK(ko <= bq + slack);
            }
        }
    }
}

TEST_CASE("hadamard double inequality on the convex corpus") {
    for (const CorpusEntry& entry : corpus()) {
        REQUIRE(entry.convex_f);
        const double mean = entry.spec.exact_mean(entry.iv.a, entry.iv.b);
        const double fm = entry.spec.f(entry.iv.midpoint());
        const double ends =
            0.5 * (entry.spec.f(entry.iv.a) + entry.spec.f(entry.iv.b));
        CHECK(mean - fm >= -1e-12);
        CHECK(ends - mean >= -1e-12);
    }
}

TEST_CASE("coefficient verification against numeric moments") {
    const CoefficientReport third = verify_coefficients(LambdaRule(1.0 / 3.0));
    CHECK(third.pass);
    CHECK(third.checks[0].name == "a1");
    CHECK(third.checks[0].numeric ==
          doctest::Approx(59.0 / 15552.0).epsilon(1e-10));
    CHECK(third.checks[0].deviation < 1e-12);

    const CoefficientReport mid = verify_coefficients(LambdaRule(0.0));
    CHECK(mid.pass);
    for (const CoefficientCheck& c : mid.checks)
        if (c.name == "mass_first_half")
            CHECK(c.numeric == doctest::Approx(1.0 / 24.0).epsilon(1e-12));

    const CoefficientReport high = verify_coefficients(LambdaRule(0.9));
    CHECK(high.pass);
    CHECK(high.checks[0].closed_form ==
          doctest::Approx((8.0 * 0.9 - 3.0) / 192.0).epsilon(1e-12));
    CHECK(high.checks[1].closed_form ==
          doctest::Approx((16.0 * 0.9 - 5.0) / 192.0).epsilon(1e-12));
}
