#include <cmath>

#include "doctest.h"
#include "fracineq/bounds.hpp"
#include "fracineq/harness.hpp"

using namespace fracineq;

namespace {

const double kE = std::exp(1.0);

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

double rel_dev(double u, double v) {
    return std::fabs(u - v) / std::max({std::fabs(u), std::fabs(v), 1e-300});
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("general one-point bound closed cases") {
    // midpoint, half weight: the two dt-integral terms vanish and the bound
    // collapses to M (b-a)/2 (ln(b/a)/2)^alpha
    CounterRng rng(71, 0);
    for (int i = 0; i < 100; ++i) {
        const double a = rng.log_uniform(0.05, 50.0);
        const double b = a * rng.log_uniform(1.01, 50.0);
        const double alpha = rng.uniform(0.2, 3.0);
        const double M = rng.log_uniform(0.1, 10.0);
        GeometricInterval iv(a, b);
        IneqParams p{iv, alpha, 0.5, iv.geometric_mid(), {}, {}};
        const double want = M * 0.5 * (b - a) * std::pow(0.5 * iv.log_ratio(), alpha);
        CHECK(rel_err(bound_thm21(M, p), want) <= 1e-12);
    }

    GeometricInterval unit_e(1.0, kE);
    IneqParams mid{unit_e, 1.0, 0.5, std::sqrt(kE), {}, {}};
    CHECK(rel_err(bound_thm21(1.0, mid), (kE - 1.0) / 4.0) <= 1e-12);

    IneqParams lam1{unit_e, 1.0, 1.0, std::sqrt(kE), {}, {}};
    CHECK(rel_err(bound_thm21(1.0, lam1), 0.43830162717073384) <= 1e-12);
}

TEST_CASE("piecewise weight: boundary case values") {
    GeometricInterval unit_e(1.0, kE);
    const double sqrt_e = std::sqrt(kE);

    IneqParams p{unit_e, 1.0, 0.5, sqrt_e, sqrt_e, {}};
    const CAlphaLambda c = c_alpha_lambda(p);
    CHECK(rel_err(c.value, 0.4208392870587887) <= 1e-12);
    // x = y = C is a boundary tie: rounding may land either side, and the
    // adjacent case formulas agree there
    CHECK((c.branch == CaseBranch::C_LE_X || c.branch == CaseBranch::X_LE_C_LE_Y));

    IneqParams strictly_inside{unit_e, 1.0, 0.5, sqrt_e * (1.0 - 1e-9),
                               sqrt_e * (1.0 + 1e-9), {}};
    CHECK(c_alpha_lambda(strictly_inside).branch == CaseBranch::X_LE_C_LE_Y);

    // lambda = 0 puts C at a, forcing case (1); at x = y = a the weight
    // reduces to auxR(a,b) - a/alpha * ln^alpha(b/a)
    CounterRng rng(73, 1);
    for (int i = 0; i < 50; ++i) {
        const double a = rng.log_uniform(0.05, 50.0);
        const double b = a * rng.log_uniform(1.01, 50.0);
        const double alpha = rng.uniform(0.2, 3.0);
        GeometricInterval iv(a, b);
        IneqParams q{iv, alpha, 0.0, a, a, {}};
        const CAlphaLambda c0 = c_alpha_lambda(q);
        CHECK(c0.branch == CaseBranch::C_LE_X);
        const double want = aux_integral_right(a, b, alpha) -
                            (a / alpha) * std::pow(iv.log_ratio(), alpha);
        CHECK(rel_err(c0.value, want) <= 1e-11);
    }
}

TEST_CASE("piecewise weight ordering error") {
    GeometricInterval iv(1.0, 4.0);
    IneqParams p{iv, 1.0, 0.5, 3.0, 2.0, {}};
    CHECK_THROWS_AS(c_alpha_lambda(p), std::invalid_argument);
    IneqParams no_y{iv, 1.0, 0.5, 2.0, {}, {}};
    CHECK_THROWS_AS(c_alpha_lambda(no_y), std::invalid_argument);
}

TEST_CASE("two-point bound examples") {
    CounterRng rng(79, 2);
    for (int i = 0; i < 50; ++i) {
        const double a = rng.log_uniform(0.05, 50.0);
        const double b = a * rng.log_uniform(1.01, 50.0);
        GeometricInterval iv(a, b);
        const double m = iv.geometric_mid();
        IneqParams p{iv, 1.0, 0.5, m, m, {}};
        const double want = (a + b - 2.0 * m) / iv.log_ratio();
        // narrow intervals cancel most of the formula's terms, so rounding
        // leaves a little more than ulp-level noise
        CHECK(rel_err(bound_thm22(1.0, p), want) <= 1e-9);
        CHECK(bound_thm22(0.0, p) == 0.0);
    }

    GeometricInterval unit_e(1.0, kE);
    IneqParams wide{unit_e, 1.0, 0.5, 1.0, kE, {}};
    CHECK(rel_err(bound_thm22(1.0, wide), 0.43830162717073384) <= 1e-11);
}

TEST_CASE("piecewise weight matches the brute-force oracle") {
    QuadConfig tight;
    tight.abs_tol = 1e-13;
    tight.rel_tol = 1e-12;
    tight.max_subdivisions = 5000;

    GeometricInterval unit_e(1.0, kE);
    IneqParams ex{unit_e, 1.0, 0.5, 1.0, kE, {}};
    CHECK(rel_err(oracle_c_alpha_lambda(ex, tight), 0.43830162717073384) <= 1e-9);

    SampleConfig cfg;
    cfg.seed = 101;
    for (int i = 0; i < 120; ++i) {
        const IneqParams p = sample_params_branch_stratified(cfg, i);
        const CAlphaLambda c = c_alpha_lambda(p);
        const double oracle = oracle_c_alpha_lambda(p, tight);
        CHECK(rel_dev(c.value, oracle) <= 1e-6);
    }
}

TEST_CASE("branch formulas are continuous across the case boundaries") {
    CounterRng rng(83, 3);
    for (int i = 0; i < 60; ++i) {
        const double a = rng.log_uniform(0.05, 20.0);
        const double b = a * rng.log_uniform(1.05, 40.0);
        GeometricInterval iv(a, b);
        const double alpha = rng.uniform(0.2, 3.0);
        // place x (then y) exactly at C and nudge lambda across
        const double lambda = rng.uniform(0.3, 0.7);
        IneqParams base{iv, alpha, lambda, 0.0, 0.0, {}};
        const double C = base.c_point();

        IneqParams at_x = base;
        at_x.x = C;
        at_x.y = b;
        IneqParams lo = at_x, hi = at_x;
        lo.lambda = lambda - 1e-9;  // C slightly below x: case (1)
        hi.lambda = lambda + 1e-9;  // C slightly above x: case (2)
        const CAlphaLambda c_lo = c_alpha_lambda(lo);
        const CAlphaLambda c_hi = c_alpha_lambda(hi);
        CHECK(rel_dev(c_lo.value, c_hi.value) <= 1e-6);

        IneqParams at_y = base;
        at_y.x = a;
        at_y.y = C;
        lo = at_y;
        hi = at_y;
        lo.lambda = lambda - 1e-9;  // C below y: case (2)
        hi.lambda = lambda + 1e-9;  // C above y: case (3)
        CHECK(rel_dev(c_alpha_lambda(lo).value, c_alpha_lambda(hi).value) <= 1e-6);
    }
}

TEST_CASE("closed forms: fixed examples") {
    GeometricInterval unit_e(1.0, kE);
    IneqParams p{unit_e, 1.0, 0.5, std::sqrt(kE), {}, {}};

    for (const double alpha : {0.4, 1.0, 2.3}) {
        IneqParams q = p;
        q.alpha = alpha;
        CHECK(rel_err(closed_form_bound(BoundVariant::Cor34, 2.0, q).rhs,
                      2.0 * (kE - 1.0) / 4.0) <= 1e-14);
        CHECK(rel_err(closed_form_bound(BoundVariant::CorHalfFrac, 2.0, q).rhs,
                      2.0 * (kE - 1.0) / 4.0) <= 1e-14);
    }

    CHECK(rel_err(closed_form_bound(BoundVariant::Cor31, 1.0, p).rhs,
                  0.4208392870587887) <= 1e-13);

    // the delta = 1 endpoint case agrees with the generic two-point bound
    CounterRng rng(89, 4);
    for (int i = 0; i < 60; ++i) {
        const double a = rng.log_uniform(0.05, 50.0);
        const double b = a * rng.log_uniform(1.01, 50.0);
        GeometricInterval iv(a, b);
        IneqParams q{iv, rng.uniform(0.2, 3.0), rng.uniform01(), a, b, 1.0};
        const double direct = bound_thm22(1.0, q);
        CHECK(rel_err(closed_form_bound(BoundVariant::Cor21d, 1.0, q).rhs, direct) <= 1e-10);
    }
}

TEST_CASE("closed forms: displayed left sides at the classical order") {
    const FunctionSpec p2 = builtin(Builtin::Power, 2.0);
    GeometricInterval unit_e(1.0, kE);
    IneqParams p{unit_e, 1.0, 0.5, std::sqrt(kE), {}, {}};
    QuadConfig quad;

    const ClosedFormBound c31 = closed_form_bound(BoundVariant::Cor31, 2.0 * kE, p);
    const ValueWithError lhs = c31.lhs(p2, quad);
    CHECK(rel_err(std::fabs(lhs.value), 0.47624622100627967) <= 1e-10);
    CHECK(rel_err(c31.rhs, 2.2879195734271303) <= 1e-13);
}

TEST_CASE("specialization lattice over random parameters") {
    SampleConfig cfg;
    cfg.seed = 211;
    for (int i = 0; i < 120; ++i) {
        const IneqParams p = sample_params(cfg, i);
        CHECK(specialization_consistency_dev(p, 1.0) <= 1e-10);
    }
}

TEST_CASE("lambda interpolation of the classical bound family") {
    CounterRng rng(97, 5);
    for (int i = 0; i < 60; ++i) {
        const double a = rng.log_uniform(0.05, 50.0);
        const double b = a * rng.log_uniform(1.01, 50.0);
        GeometricInterval iv(a, b);
        const double m = iv.geometric_mid();
        const double M = rng.log_uniform(0.1, 10.0);
        auto cor35_at = [&](double lambda) {
            IneqParams q{iv, 1.0, lambda, m, {}, {}};
            return closed_form_bound(BoundVariant::Cor35, M, q).rhs;
        };
        IneqParams q{iv, 1.0, 0.5, m, {}, {}};
        CHECK(rel_dev(cor35_at(0.0), closed_form_bound(BoundVariant::Cor31, M, q).rhs) <=
              1e-12);
        CHECK(rel_dev(cor35_at(1.0), closed_form_bound(BoundVariant::Cor32, M, q).rhs) <=
              1e-12);
        CHECK(rel_dev(cor35_at(1.0 / 3.0),
                      closed_form_bound(BoundVariant::Cor33, M, q).rhs) <= 1e-12);
        CHECK(rel_dev(cor35_at(0.5), closed_form_bound(BoundVariant::Cor34, M, q).rhs) <=
              1e-12);
    }
}

TEST_CASE("every bound is nonnegative on the sampled domain") {
    SampleConfig cfg;
    cfg.seed = 307;
    for (int i = 0; i < 80; ++i) {
        const IneqParams p = sample_params(cfg, i);
        for (const VariantInfo& info : all_variants()) {
            const ClosedFormBound cf = closed_form_bound(info.variant, 1.0, p);
            CHECK(cf.rhs >= -1e-12 * std::max(1.0, std::fabs(cf.rhs)));
        }
    }
}

TEST_CASE("variant id registry") {
    CHECK(all_variants().size() == 15);
    CHECK(variant_from_id("thm21").has_value());
    CHECK(variant_from_id("cor-simpson-frac").has_value());
    CHECK_FALSE(variant_from_id("cor-99").has_value());
    for (const VariantInfo& info : all_variants())
        CHECK(variant_from_id(info.id) == info.variant);
}

TEST_SUITE_END();
