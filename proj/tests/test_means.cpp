#include <doctest.h>

#include <cmath>
#include <random>

#include "core/means.hpp"
#include "core/oracle.hpp"

using namespace quadcert;
using means::MeanKind;

TEST_CASE("mean values") {
    CHECK(means::mean_value(MeanKind::Arithmetic, 1.0, 3.0) == 2.0);
    CHECK(means::mean_value(MeanKind::Geometric, 4.0, 9.0) ==
          doctest::Approx(6.0).epsilon(1e-12));
    CHECK(means::mean_value(MeanKind::Harmonic, 1.0, 1.0) == 1.0);

    const double e = std::exp(1.0);
    CHECK(means::mean_value(MeanKind::Logarithmic, 1.0, e) ==
          doctest::Approx(e - 1.0).epsilon(1e-12));
    CHECK(means::mean_value(MeanKind::Identric, 1.0, e) ==
          doctest::Approx((1.0 / e) * std::pow(std::pow(e, e), 1.0 / (e - 1.0)))
              .epsilon(1e-12));
    CHECK(means::mean_value(MeanKind::PLogarithmic, 1.0, 2.0, 3.0) ==
          doctest::Approx(std::cbrt(15.0 / 4.0)).epsilon(1e-12));

    // a = b cases
    CHECK(means::mean_value(MeanKind::Logarithmic, 2.5, 2.5) == 2.5);
    CHECK(means::mean_value(MeanKind::Identric, 2.5, 2.5) == 2.5);
    CHECK(means::mean_value(MeanKind::PLogarithmic, 2.5, 2.5, 4.0) == 2.5);
}

TEST_CASE("mean domain errors") {
    CHECK_THROWS_AS(means::mean_value(MeanKind::Harmonic, 0.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(means::mean_value(MeanKind::Logarithmic, -1.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(means::mean_value(MeanKind::PLogarithmic, 1.0, 2.0, -1.0),
                    std::domain_error);
    CHECK_THROWS_AS(means::mean_value(MeanKind::PLogarithmic, 1.0, 2.0, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(means::mean_value(MeanKind::Arithmetic, -1.0, 1.0),
                    std::domain_error);
}

TEST_CASE("mean ordering H <= G <= L <= I <= A") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int i = 0; i < 1000; ++i) {
        double a = u(rng), b = u(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const double H = means::mean_value(MeanKind::Harmonic, a, b);
        const double G = means::mean_value(MeanKind::Geometric, a, b);
        const double L = means::mean_value(MeanKind::Logarithmic, a, b);
        const double I = means::mean_value(MeanKind::Identric, a, b);
        const double A = means::mean_value(MeanKind::Arithmetic, a, b);
        const double slack = 1e-12 * A;
        CHECK(H <= G + slack);
        CHECK(G <= L + slack);
        CHECK(L <= I + slack);
        CHECK(I <= A + slack);
    }
}

TEST_CASE("p-logarithmic mean is nondecreasing in p") {
    const double grid[] = {-5.0, -2.0, -1.5, -0.5, 0.5, 1.0, 2.0, 5.0};
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> u(0.1, 9.0);
    for (int i = 0; i < 100; ++i) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        if (b - a < 1e-6) continue;
        double prev = -1.0;
        for (double p : grid) {
            const double lp = means::mean_value(MeanKind::PLogarithmic, a, b, p);
            CHECK(lp >= prev * (1.0 - 1e-12));
            prev = lp;
        }
    }
    // limits from both sides at the excluded points
    const double a = 1.0, b = 2.0, eps = 1e-4;
    const double L = means::mean_value(MeanKind::Logarithmic, a, b);
    const double I = means::mean_value(MeanKind::Identric, a, b);
    for (double s : {-eps, eps}) {
        CHECK(means::mean_value(MeanKind::PLogarithmic, a, b, -1.0 + s) ==
              doctest::Approx(L).epsilon(1e-3));
        CHECK(means::mean_value(MeanKind::PLogarithmic, a, b, s) ==
              doctest::Approx(I).epsilon(1e-3));
    }
}

TEST_CASE("proposition 1") {
    const means::GapBound cubic = means::prop1_gap(3, 1.0, 2.0);
    CHECK(cubic.gap == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(cubic.holds());

    const means::GapBound quartic = means::prop1_gap(4, 1.0, 2.0);
    CHECK(quartic.gap == doctest::Approx(1.0 / 120.0).epsilon(1e-12));
    CHECK(quartic.bound == doctest::Approx(12.0 / 162.0 * 5.0).epsilon(1e-12));
    CHECK(quartic.holds());

    const means::GapBound printed = means::prop1_gap_printed_constant(4, 1.0, 2.0);
    CHECK(printed.bound == doctest::Approx(12.0 / 168.0 * 5.0).epsilon(1e-12));

    // near-degenerate interval: both sides vanish (the gap is dominated
    // by cancellation noise well below the bound)
    const means::GapBound tiny = means::prop1_gap(4, 1.0, 1.0 + 1e-4);
    CHECK(std::abs(tiny.gap) < 1e-8);
    CHECK(tiny.bound < 1e-6);
    CHECK(tiny.holds());

    CHECK_THROWS_AS(means::prop1_gap(2, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(means::prop1_gap(4, 2.0, 1.0), std::domain_error);
}

TEST_CASE("proposition 2") {
    const means::Prop2Result r = means::prop2_gaps(1.0, 2.0, PowerExponent(1.0));
    CHECK(r.midpoint.gap ==
          doctest::Approx(std::log(2.0) - 2.0 / 3.0).epsilon(1e-12));
    CHECK(r.trapezoid.gap ==
          doctest::Approx(std::log(2.0) - 0.75).epsilon(1e-12));
    // q = 1 bounds reduce to the 3/5 and 5/11 coefficient forms
    CHECK(r.midpoint.bound ==
          doctest::Approx((3.0 * 2.0 + 5.0 * 0.25 + 5.0 * 2.0 + 3.0 * 0.25) /
                          8.0 / 48.0)
              .epsilon(1e-12));
    CHECK(r.trapezoid.bound ==
          doctest::Approx((5.0 * 2.0 + 11.0 * 0.25 + 11.0 * 2.0 + 5.0 * 0.25) /
                          16.0 / 24.0)
              .epsilon(1e-12));
    CHECK(r.midpoint.holds());
    CHECK(r.trapezoid.holds());

    const means::Prop2Result r2 = means::prop2_gaps(1.0, 2.0, PowerExponent(2.0));
    CHECK(r2.midpoint.holds());
    CHECK(r2.trapezoid.holds());
}

TEST_CASE("proposition 3") {
    const means::GapBound gb = means::prop3_gap(1.0, 2.0, PowerExponent(1.0));
    CHECK(gb.gap == doctest::Approx(0.25 + 4.0 / 9.0 - std::log(2.0)).epsilon(1e-12));
    CHECK(gb.bound == doctest::Approx(2.25 / 162.0).epsilon(1e-12));
    CHECK(gb.holds());
    CHECK(means::prop3_gap(1.0, 4.0, PowerExponent(3.0)).holds());
}

TEST_CASE("proposition contracts hold on random draws") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(0.05, 8.0);
    std::uniform_int_distribution<int> ns(3, 9);
    std::uniform_real_distribution<double> qs(1.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        if (b - a < 1e-9) continue;
        const PowerExponent q(qs(rng));
        CHECK(means::prop1_gap(ns(rng), a, b).holds());
        const means::Prop2Result r = means::prop2_gaps(a, b, q);
        CHECK(r.midpoint.holds());
        CHECK(r.trapezoid.holds());
        CHECK(means::prop3_gap(a, b, q).holds());
    }
}

TEST_CASE("proposition gaps agree with the quadrature oracle") {
    const double a = 1.0, b = 2.5;
    const IntegrandSpec x4 = make_builtin("power(4)").integrand;
    const IntegrandSpec rec = make_builtin("reciprocal").integrand;
    const Interval iv(a, b);

    CHECK(means::prop1_gap(4, a, b).gap ==
          doctest::Approx(-rule_gap(x4, iv, LambdaRule(1.0 / 3.0))).epsilon(1e-12));
    const means::Prop2Result r = means::prop2_gaps(a, b, PowerExponent(1.0));
    CHECK(r.midpoint.gap ==
          doctest::Approx(rule_gap(rec, iv, LambdaRule(0.0))).epsilon(1e-12));
    CHECK(r.trapezoid.gap ==
          doctest::Approx(rule_gap(rec, iv, LambdaRule(1.0))).epsilon(1e-12));
    CHECK(means::prop3_gap(a, b, PowerExponent(1.0)).gap ==
          doctest::Approx(-rule_gap(rec, iv, LambdaRule(1.0 / 3.0))).epsilon(1e-12));
}
