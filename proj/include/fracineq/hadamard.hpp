#pragma once

// Hadamard fractional integral operators (logarithmic kernel, dt/t measure)
// and the composite quantities whose magnitude the bounds control.

#include <optional>

#include "fracineq/funcat.hpp"
#include "fracineq/numerics.hpp"

namespace fracineq {

// Parameter bundle shared by every inequality: interval, order alpha,
// weight lambda, evaluation points x (and y for the two-point family),
// optional delta for the geometric-point corollary.  The derived point
// C = a^{1-lambda} b^lambda always lies in [a, b].
struct IneqParams {
    GeometricInterval interval;
    double alpha = 1.0;
    double lambda = 0.5;
    double x;
    std::optional<double> y;
    std::optional<double> delta;

    double c_point() const;
    void validate() const;  // throws std::domain_error / std::invalid_argument
};

struct ValueWithError {
    double value = 0.0;
    double error = 0.0;  // absolute, propagated from quadrature
};

// (1/Gamma(alpha)) int_x^b (ln(b/t))^{alpha-1} f(t) dt/t, evaluated after
// u = ln(b/t) as (1/Gamma(alpha)) int_0^{ln(b/x)} u^{alpha-1} f(b e^{-u}) du.
ValueWithError j_plus(const FunctionSpec& f, double alpha, double x, double b,
                      const QuadConfig& cfg = {});

// (1/Gamma(alpha)) int_a^x (ln(t/a))^{alpha-1} f(t) dt/t, via u = ln(t/a).
ValueWithError j_minus(const FunctionSpec& f, double alpha, double a, double x,
                       const QuadConfig& cfg = {});

// (1-lambda)[ln^a(x/a)+ln^a(b/x)] f(x) + lambda[f(a) ln^a(x/a)+f(b) ln^a(b/x)]
//   - Gamma(alpha+1)[Jminus + Jplus], the one-point composite.
ValueWithError i_f(const FunctionSpec& f, const IneqParams& p,
                   const QuadConfig& cfg = {});

// lambda^a f(x) + (1-lambda)^a f(y)
//   - Gamma(alpha+1)/ln^a(b/a) [Jminus(a..C) + Jplus(C..b)], C = a^{1-l} b^l.
ValueWithError s_f(const FunctionSpec& f, const IneqParams& p,
                   const QuadConfig& cfg = {});

struct HhTriple {
    double left;    // f(sqrt(ab))
    double middle;  // Gamma(alpha+1)/(2 ln^a(b/a)) [J_{a+}f(b) + J_{b-}f(a)]
    double right;   // (f(a)+f(b))/2
    double quad_error;
};

// The fractional Hermite-Hadamard triple; ordering is asserted by callers
// for GA-convex functions, not here.
HhTriple hh_triple(const FunctionSpec& f, double alpha,
                   const GeometricInterval& interval, const QuadConfig& cfg = {});

}  // namespace fracineq
