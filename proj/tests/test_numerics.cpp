#include <cmath>

#include "doctest.h"
#include "fracineq/harness.hpp"
#include "fracineq/numerics.hpp"

using namespace fracineq;

namespace {

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

}  // namespace

TEST_SUITE_BEGIN("numerics");

TEST_CASE("gamma at integers and half-integer") {
    CHECK(rel_err(gamma_fn(1.0), 1.0) <= 1e-13);
    CHECK(rel_err(gamma_fn(5.0), 24.0) <= 1e-13);
    // sqrt(pi)
    CHECK(rel_err(gamma_fn(0.5), 1.7724538509055160273) <= 1e-13);
    CHECK(rel_err(gamma_fn(2.0), 1.0) <= 1e-13);
    CHECK(rel_err(gamma_fn(10.0), 362880.0) <= 1e-13);
}

TEST_CASE("gamma domain guard") {
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(170.5), std::domain_error);
    CHECK(std::isfinite(gamma_fn(170.0)));
}

TEST_CASE("gamma recurrence property") {
    CounterRng rng(7, 0);
    for (int i = 0; i < 500; ++i) {
        const double alpha = rng.log_uniform(1e-3, 100.0);
        CHECK(rel_err(gamma_fn(alpha + 1.0), alpha * gamma_fn(alpha)) <= 1e-12);
    }
}

TEST_CASE("lower incomplete gamma basics") {
    CHECK(lower_incomplete_gamma(0.7, 0.0) == 0.0);
    CHECK(lower_incomplete_gamma(3.0, 0.0) == 0.0);
    // alpha = 1 has antiderivative 1 - e^{-z}
    CounterRng rng(11, 1);
    for (int i = 0; i < 200; ++i) {
        const double z = rng.log_uniform(1e-3, 50.0);
        CHECK(rel_err(lower_incomplete_gamma(1.0, z), -std::expm1(-z)) <= 1e-12);
    }
    // antiderivative -(t+1)e^{-t} on [0,1]
    CHECK(rel_err(lower_incomplete_gamma(2.0, 1.0), 1.0 - 2.0 / std::exp(1.0)) <= 1e-12);
}

TEST_CASE("lower incomplete gamma saturates to gamma") {
    CounterRng rng(13, 2);
    for (int i = 0; i < 100; ++i) {
        const double alpha = rng.log_uniform(0.05, 170.0);
        const double z = 50.0 + 10.0 * alpha;
        CHECK(rel_err(lower_incomplete_gamma(alpha, z), gamma_fn(alpha)) <= 1e-10);
    }
}

TEST_CASE("aux_integral_left examples") {
    const double e = std::exp(1.0);
    CHECK(aux_integral_left(2.0, 2.0, 0.7) == 0.0);
    CHECK(rel_err(aux_integral_left(1.0, e, 1.0), e - 1.0) <= 1e-12);
    // antiderivative t ln t - t on [1, e]
    CHECK(rel_err(aux_integral_left(1.0, e, 2.0), 1.0) <= 1e-12);
}

TEST_CASE("aux_integral_left large-log fallback") {
    // alpha = 1: integral is x - a; alpha = 2: t ln t - t + 1 at x = e^35
    const double x = std::exp(35.0);
    CHECK(rel_err(aux_integral_left(1.0, x, 1.0), x - 1.0) <= 1e-9);
    CHECK(rel_err(aux_integral_left(1.0, x, 2.0), 34.0 * x + 1.0) <= 1e-9);
}

TEST_CASE("aux_integral_right examples") {
    const double e = std::exp(1.0);
    CHECK(aux_integral_right(3.0, 3.0, 1.3) == 0.0);
    CHECK(rel_err(aux_integral_right(1.0, e, 1.0), e - 1.0) <= 1e-12);
    // equals e * gamma(2, 1)
    CHECK(rel_err(aux_integral_right(1.0, e, 2.0), e - 2.0) <= 1e-12);
}

TEST_CASE("aux integrals agree with the substituted quadrature route") {
    CounterRng rng(17, 3);
    QuadConfig tight;
    tight.abs_tol = 1e-13;
    tight.rel_tol = 1e-12;
    for (int i = 0; i < 150; ++i) {
        const double a = rng.log_uniform(0.05, 50.0);
        const double x = a * rng.log_uniform(1.01, 50.0);
        const double alpha = rng.uniform(0.2, 3.0);
        const double L = std::log(x / a);

        const double left_ref =
            a * integrate_log_singular([](double u) { return std::exp(u); }, L, alpha, tight)
                    .value;
        CHECK(rel_err(aux_integral_left(a, x, alpha), left_ref) <= 1e-9);

        const double right_ref =
            x * integrate_log_singular([](double u) { return std::exp(-u); }, L, alpha, tight)
                    .value;
        CHECK(rel_err(aux_integral_right(a, x, alpha), right_ref) <= 1e-9);
    }
}

TEST_CASE("aux integrals are monotone in the moving endpoint") {
    CounterRng rng(19, 4);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.log_uniform(0.05, 50.0);
        const double alpha = rng.uniform(0.2, 3.0);
        const double x1 = a * rng.log_uniform(1.0, 40.0);
        const double x2 = x1 * rng.log_uniform(1.0, 5.0);
        CHECK(aux_integral_left(a, x1, alpha) <= aux_integral_left(a, x2, alpha) * (1.0 + 1e-12));
        const double b = x2 * rng.log_uniform(1.0, 5.0);
        CHECK(aux_integral_right(x2, b, alpha) <=
              aux_integral_right(x1, b, alpha) * (1.0 + 1e-12));
    }
}

TEST_CASE("integrate_adaptive closed forms") {
    const double e = std::exp(1.0);
    QuadResult q = integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0);
    CHECK(rel_err(q.value, 1.0) <= 1e-12);
    CHECK(q.error_estimate >= 0.0);

    q = integrate_adaptive([](double t) { return t; }, 0.0, 2.0);
    CHECK(rel_err(q.value, 2.0) <= 1e-12);

    q = integrate_adaptive([](double t) { return 1.0 / t; }, 1.0, e);
    CHECK(rel_err(q.value, 1.0) <= 1e-11);
    CHECK(std::fabs(q.value - 1.0) <= std::max(1e-10, q.error_estimate));
}

TEST_CASE("integrate_adaptive degenerate and invalid input") {
    QuadResult q = integrate_adaptive([](double t) { return t * t; }, 2.0, 2.0);
    CHECK(q.value == 0.0);
    CHECK_THROWS_AS(integrate_adaptive([](double t) { return t; }, 1.0, 0.0),
                    std::invalid_argument);
    QuadConfig bad;
    bad.abs_tol = -1.0;
    CHECK_THROWS_AS(integrate_adaptive([](double t) { return t; }, 0.0, 1.0, bad),
                    std::invalid_argument);
}

TEST_CASE("integrate_adaptive reports non-convergence with a best estimate") {
    QuadConfig cramped;
    cramped.max_subdivisions = 3;
    cramped.abs_tol = 1e-14;
    cramped.rel_tol = 1e-14;
    try {
        integrate_adaptive([](double t) { return std::sin(1e6 * t); }, 0.0, 1.0, cramped);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& err) {
        CHECK(err.best().subdivisions_used <= 3);
        CHECK(std::isfinite(err.best().value));
    }
}

TEST_CASE("integrate_log_singular power rule") {
    CounterRng rng(23, 5);
    QuadConfig tight;
    tight.abs_tol = 1e-13;
    tight.rel_tol = 1e-13;
    for (const double alpha : {0.3, 0.5, 1.0, 1.7, 2.0, 3.0}) {
        for (int i = 0; i < 20; ++i) {
            const double L = rng.log_uniform(0.01, 5.0);
            const double want = std::pow(L, alpha) / alpha;
            const double got =
                integrate_log_singular([](double) { return 1.0; }, L, alpha, tight).value;
            CHECK(rel_err(got, want) <= 1e-11);
        }
    }
    CHECK(rel_err(integrate_log_singular([](double) { return 1.0; }, 1.0, 0.5).value, 2.0) <=
          1e-12);
}

TEST_CASE("integrate_log_singular matches the incomplete gamma") {
    const double got =
        integrate_log_singular([](double u) { return std::exp(-u); }, 1.0, 2.0).value;
    CHECK(rel_err(got, lower_incomplete_gamma(2.0, 1.0)) <= 1e-11);
}

TEST_CASE("integrate_power_kernel lower limit") {
    // int_{1/2}^{2} u^{a-1} du for singular and regular orders
    for (const double alpha : {0.4, 1.0, 2.5}) {
        const double want = (std::pow(2.0, alpha) - std::pow(0.5, alpha)) / alpha;
        const double got =
            integrate_power_kernel([](double) { return 1.0; }, 0.5, 2.0, alpha).value;
        CHECK(rel_err(got, want) <= 1e-11);
    }
}

TEST_SUITE_END();
