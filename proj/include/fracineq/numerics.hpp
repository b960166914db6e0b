#pragma once

// Special functions and quadrature used by every bound in this project:
// Gamma, the lower incomplete gamma, the two weighted dt-integrals
// int (ln(t/a))^{alpha-1} dt / int (ln(b/t))^{alpha-1} dt, and a globally
// adaptive Gauss-Kronrod integrator that tames the u^{alpha-1} endpoint
// singularity by substitution.
//
// Everything here is pure and re-entrant: no globals, no caches, safe for
// concurrent use from any number of workers.

#include <functional>
#include <stdexcept>
#include <string>

namespace fracineq {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;

    void validate() const;  // throws std::invalid_argument
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute
    int subdivisions_used = 0;
};

// Thrown when the adaptive scheme exhausts max_subdivisions; carries the
// best estimate obtained so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_(best) {}
    const QuadResult& best() const noexcept { return best_; }

private:
    QuadResult best_;
};

using Integrand = std::function<double(double)>;

// Gamma(alpha) for 0 < alpha <= 170, relative error <= 1e-13.
// Computed as exp(log_gamma) so the cap only guards double overflow.
double gamma_fn(double alpha);

// log Gamma(x), x > 0.  Stirling series with Bernoulli terms after shifting
// the argument above 12; absolute error < 1e-14.
double log_gamma(double x);

// gamma(alpha, z) = int_0^z t^{alpha-1} e^{-t} dt for alpha in (0, 170],
// z >= 0; relative error <= 1e-12.  Series for z < alpha+1, continued
// fraction for the upper tail otherwise.
double lower_incomplete_gamma(double alpha, double z);

// int_a^x (ln(t/a))^{alpha-1} dt for 0 < a <= x.  Evaluated by the
// everywhere-convergent series a * sum_k L^{alpha+k} / (k! (alpha+k)) with
// L = ln(x/a); for L > 30 falls back to adaptive quadrature on the
// substituted integrand.
double aux_integral_left(double a, double x, double alpha);

// int_x^b (ln(b/t))^{alpha-1} dt for 0 < x <= b.  Equals
// b * gamma(alpha, ln(b/x)) via the substitution u = ln(b/t).
double aux_integral_right(double x, double b, double alpha);

// Globally adaptive quadrature of g on [lo, hi]: Gauss-Kronrod 7/15 pairs
// with bisection of the segment carrying the largest error estimate until
// the total satisfies max(abs_tol, rel_tol*|value|).
QuadResult integrate_adaptive(const Integrand& g, double lo, double hi,
                              const QuadConfig& cfg = {});

// int_lo^hi u^{alpha-1} g(u) du with 0 <= lo <= hi.  For alpha < 1 the
// substitution v = u^alpha turns the kernel into a constant, removing the
// endpoint singularity before the adaptive pass; for alpha >= 1 the
// integrand is used directly.
QuadResult integrate_power_kernel(const Integrand& g, double lo, double hi,
                                  double alpha, const QuadConfig& cfg = {});

// int_0^L u^{alpha-1} g(u) du, the Hadamard kernel after the log-ratio
// substitution; g must be continuous on [0, L].
QuadResult integrate_log_singular(const Integrand& g, double L, double alpha,
                                  const QuadConfig& cfg = {});

}  // namespace fracineq
