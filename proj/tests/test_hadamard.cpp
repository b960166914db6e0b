#include <cmath>

#include "doctest.h"
#include "fracineq/hadamard.hpp"
#include "fracineq/harness.hpp"

using namespace fracineq;

namespace {

const double kE = std::exp(1.0);

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

FunctionSpec reciprocal_composition(const FunctionSpec& f) {
    FunctionSpec g = f;
    g.name = f.name + "(1/t)";
    const auto eval = f.eval;
    g.eval = [eval](double t) { return eval(1.0 / t); };
    g.deriv = nullptr;
    g.analytic_lipschitz = nullptr;
    g.domain_floor = 0.0;
    g.domain_ceil = std::numeric_limits<double>::infinity();
    return g;
}

std::vector<FunctionSpec> duality_catalog() {
    // functions whose reciprocal composition stays finite on (0, 1]
    return {builtin(Builtin::Identity), builtin(Builtin::Power, 2.0),
            builtin(Builtin::Recip), builtin(Builtin::Log)};
}

}  // namespace

TEST_SUITE_BEGIN("hadamard");

TEST_CASE("operator closed forms") {
    const FunctionSpec id = builtin(Builtin::Identity);
    const FunctionSpec p2 = builtin(Builtin::Power, 2.0);
    const FunctionSpec lg = builtin(Builtin::Log);

    // constants: kernel mass (ln(b/a))^alpha / Gamma(alpha+1) on both sides
    const FunctionSpec c3 = builtin(Builtin::Const, 3.0);
    for (const double alpha : {0.5, 1.0, 2.0, 2.7}) {
        const double want = 3.0 * std::pow(std::log(4.0), alpha) / gamma_fn(alpha + 1.0);
        CHECK(rel_err(j_plus(c3, alpha, 1.0, 4.0).value, want) <= 1e-10);
        CHECK(rel_err(j_minus(c3, alpha, 1.0, 4.0).value, want) <= 1e-10);
    }

    CHECK(rel_err(j_plus(id, 1.0, 1.0, kE).value, kE - 1.0) <= 1e-10);
    CHECK(rel_err(j_minus(id, 1.0, 1.0, kE).value, kE - 1.0) <= 1e-10);
    CHECK(rel_err(j_plus(p2, 1.0, 1.0, kE).value, 3.1945280494653248) <= 1e-10);
    CHECK(rel_err(j_minus(lg, 1.0, 1.0, kE).value, 0.5) <= 1e-10);
}

TEST_CASE("degenerate evaluation point gives an exact zero") {
    const FunctionSpec id = builtin(Builtin::Identity);
    CHECK(j_plus(id, 0.7, 4.0, 4.0).value == 0.0);
    CHECK(j_minus(id, 0.7, 4.0, 4.0).value == 0.0);
    CHECK(j_plus(id, 0.7, 4.0, 4.0).error == 0.0);
}

TEST_CASE("operator domain errors") {
    const FunctionSpec id = builtin(Builtin::Identity);
    CHECK_THROWS_AS(j_plus(id, 1.0, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(j_minus(id, 1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("composite examples") {
    const FunctionSpec id = builtin(Builtin::Identity);
    const FunctionSpec p2 = builtin(Builtin::Power, 2.0);
    const FunctionSpec lg = builtin(Builtin::Log);
    GeometricInterval iv(1.0, kE);
    const double sqrt_e = std::sqrt(kE);

    IneqParams p{iv, 1.0, 0.0, sqrt_e, {}, {}};
    CHECK(rel_err(i_f(id, p).value, -0.069560557758916897) <= 1e-9);

    p.lambda = 1.0;
    CHECK(rel_err(i_f(p2, p).value, 1.0) <= 1e-9);

    IneqParams ps{iv, 1.0, 0.5, 1.0, kE, {}};
    CHECK(rel_err(s_f(id, ps).value, 0.14085908577047745) <= 1e-9);

    IneqParams pl{iv, 1.0, 0.5, sqrt_e, sqrt_e, {}};
    CHECK(std::fabs(s_f(lg, pl).value) <= 1e-10);
}

TEST_CASE("annihilation on constants") {
    CounterRng rng(43, 0);
    SampleConfig cfg;
    const FunctionSpec c = builtin(Builtin::Const, 5.5);
    for (int i = 0; i < 200; ++i) {
        const IneqParams p = sample_params(cfg, i);
        const double scale =
            5.5 * (std::pow(std::log(p.x / p.interval.a), p.alpha) +
                   std::pow(std::log(p.interval.b / p.x), p.alpha) + 1.0);
        CHECK(std::fabs(i_f(c, p).value) <= 1e-10 * scale);
        CHECK(std::fabs(s_f(c, p).value) <= 1e-10 * scale);
    }
}

TEST_CASE("hh triple closed forms") {
    const FunctionSpec id = builtin(Builtin::Identity);
    const FunctionSpec lg = builtin(Builtin::Log);
    const FunctionSpec c = builtin(Builtin::Const, 2.0);
    GeometricInterval iv(1.0, kE);

    HhTriple t = hh_triple(c, 1.3, iv);
    CHECK(rel_err(t.left, 2.0) <= 1e-12);
    CHECK(rel_err(t.middle, 2.0) <= 1e-10);
    CHECK(rel_err(t.right, 2.0) <= 1e-12);

    t = hh_triple(id, 1.0, iv);
    CHECK(rel_err(t.left, 1.6487212707001282) <= 1e-12);
    CHECK(rel_err(t.middle, 1.7182818284590451) <= 1e-10);
    CHECK(rel_err(t.right, 1.8591409142295225) <= 1e-12);
    CHECK(t.left <= t.middle);
    CHECK(t.middle <= t.right);

    // ln: GA-affine equality case at any order
    for (const double alpha : {0.4, 1.0, 2.2}) {
        t = hh_triple(lg, alpha, {2.0, 8.0});
        const double want = std::log(4.0);
        CHECK(rel_err(t.left, want) <= 1e-12);
        CHECK(rel_err(t.middle, want) <= 1e-9);
        CHECK(rel_err(t.right, want) <= 1e-12);
    }
}

TEST_CASE("reflection duality of the two operators") {
    CounterRng rng(47, 1);
    for (const FunctionSpec& f : duality_catalog()) {
        const FunctionSpec g = reciprocal_composition(f);
        for (int i = 0; i < 25; ++i) {
            const double x = rng.log_uniform(0.05, 20.0);
            const double b = x * rng.log_uniform(1.01, 40.0);
            const double alpha = rng.uniform(0.2, 3.0);
            const double plus = j_plus(f, alpha, x, b).value;
            const double dual = j_minus(g, alpha, 1.0 / b, 1.0 / x).value;
            CHECK(rel_err(plus, dual) <= 1e-9);
        }
    }
}

TEST_CASE("composite is invariant under interval reflection") {
    CounterRng rng(53, 2);
    SampleConfig cfg;
    for (const FunctionSpec& f : duality_catalog()) {
        const FunctionSpec g = reciprocal_composition(f);
        for (int i = 0; i < 25; ++i) {
            const IneqParams p = sample_params(cfg, i);
            GeometricInterval mirror(1.0 / p.interval.b, 1.0 / p.interval.a);
            IneqParams q{mirror, p.alpha, p.lambda, 1.0 / p.x, {}, {}};
            const double lhs = i_f(f, p).value;
            const double rhs = i_f(g, q).value;
            const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-12});
            CHECK(std::fabs(lhs - rhs) / scale <= 1e-9);
        }
    }
}

TEST_CASE("order one reduces to the plain dt/t integral") {
    CounterRng rng(59, 3);
    QuadConfig tight;
    tight.rel_tol = 1e-12;
    for (const FunctionSpec& f : default_catalog()) {
        for (int i = 0; i < 15; ++i) {
            const double lo = std::max(0.05, f.domain_floor * (1.0 + 1e-6));
            const double a = rng.log_uniform(lo, std::min(50.0, f.domain_ceil / 1.5));
            const double b = a * rng.log_uniform(1.01, std::min(50.0, f.domain_ceil / a));
            const double x = a * std::pow(b / a, rng.uniform01());
            const double sum =
                gamma_fn(2.0) * (j_minus(f, 1.0, a, x).value + j_plus(f, 1.0, x, b).value);
            const double direct =
                integrate_adaptive([&](double t) { return f.eval(t) / t; }, a, b, tight).value;
            CHECK(rel_err(sum, direct) <= 1e-9);
        }
    }
}

TEST_CASE("two-point composite at x=y=C matches the one-point composite") {
    // S_f(C, C, lambda) equals I_f at x = C with endpoint weight zero,
    // normalized by ln^alpha(b/a): both carry the same operator bracket.
    CounterRng rng(61, 4);
    SampleConfig cfg;
    for (const FunctionSpec& f : default_catalog()) {
        for (int i = 0; i < 25; ++i) {
            IneqParams p = sample_params(cfg, i, f.domain_floor, f.domain_ceil);
            const double C = p.c_point();
            IneqParams ps{p.interval, p.alpha, p.lambda, C, C, {}};
            IneqParams pi{p.interval, p.alpha, 0.0, C, {}, {}};
            const double s = s_f(f, ps).value;
            const double ii =
                i_f(f, pi).value / std::pow(p.interval.log_ratio(), p.alpha);
            // both composites cancel to rounding level on flat functions, so
            // measure against the weight-term magnitude, not the residual
            const double term_scale =
                (std::pow(p.lambda, p.alpha) + std::pow(1.0 - p.lambda, p.alpha)) *
                std::fabs(f.eval(C));
            const double scale = std::max({std::fabs(s), std::fabs(ii), term_scale, 1e-12});
            CHECK(std::fabs(s - ii) / scale <= 1e-9);
        }
    }
}

TEST_CASE("hh ordering holds for GA-convex catalog entries") {
    CounterRng rng(67, 5);
    SampleConfig cfg;
    for (const FunctionSpec& f : default_catalog()) {
        for (int i = 0; i < 25; ++i) {
            const IneqParams p = sample_params(cfg, i, f.domain_floor, f.domain_ceil);
            if (!ga_convex_check(f, p.interval, 8).ga_convex) continue;
            const HhTriple t = hh_triple(f, p.alpha, p.interval);
            const double scale =
                std::max({std::fabs(t.left), std::fabs(t.right), 1.0});
            CHECK(t.middle - t.left >= -1e-9 * scale);
            CHECK(t.right - t.middle >= -1e-9 * scale);
        }
    }
}

TEST_CASE("params validation") {
    GeometricInterval iv(1.0, 4.0);
    IneqParams bad_x{iv, 1.0, 0.5, 5.0, {}, {}};
    CHECK_THROWS_AS(bad_x.validate(), std::domain_error);
    IneqParams bad_order{iv, 1.0, 0.5, 3.0, 2.0, {}};
    CHECK_THROWS_AS(bad_order.validate(), std::invalid_argument);
    IneqParams bad_lambda{iv, 1.0, 1.5, 2.0, {}, {}};
    CHECK_THROWS_AS(bad_lambda.validate(), std::domain_error);
    IneqParams bad_delta{iv, 1.0, 0.5, 2.0, 3.0, 0.2};
    CHECK_THROWS_AS(bad_delta.validate(), std::domain_error);
    IneqParams ok{iv, 0.5, 0.25, 2.0, 3.0, 0.8};
    CHECK_NOTHROW(ok.validate());
    CHECK(rel_err(ok.c_point(), std::pow(4.0, 0.25)) <= 1e-14);
}

TEST_SUITE_END();
