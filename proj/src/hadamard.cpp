#include "fracineq/hadamard.hpp"

#include <cmath>
#include <stdexcept>

namespace fracineq {

double IneqParams::c_point() const {
    if (lambda == 0.0) return interval.a;
    if (lambda == 1.0) return interval.b;
    const double c = std::exp((1.0 - lambda) * std::log(interval.a) +
                              lambda * std::log(interval.b));
    return std::min(std::max(c, interval.a), interval.b);
}

void IneqParams::validate() const {
    if (!(alpha > 0.0)) throw std::domain_error("IneqParams: alpha must be positive");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("IneqParams: lambda must be in [0,1]");
    const double slack = 1e-12 * interval.b;
    if (!(x >= interval.a - slack && x <= interval.b + slack))
        throw std::domain_error("IneqParams: x must lie in [a,b]");
    if (y) {
        if (!(*y >= interval.a - slack && *y <= interval.b + slack))
            throw std::domain_error("IneqParams: y must lie in [a,b]");
        if (!(x <= *y + slack))
            throw std::invalid_argument("IneqParams: require x <= y");
    }
    if (delta && !(*delta >= 0.5 && *delta <= 1.0))
        throw std::domain_error("IneqParams: delta must be in [1/2,1]");
}

ValueWithError j_plus(const FunctionSpec& f, double alpha, double x, double b,
                      const QuadConfig& cfg) {
    if (!(x > 0.0) || !(b >= x))
        throw std::domain_error("j_plus: require 0 < x <= b");
    const double L = std::log(b / x);
    if (L <= 0.0) return {0.0, 0.0};  // empty range: exactly zero
    const double inv_gamma = 1.0 / gamma_fn(alpha);
    QuadResult q = integrate_log_singular(
        [&](double u) { return f.eval(b * std::exp(-u)); }, L, alpha, cfg);
    return {q.value * inv_gamma, q.error_estimate * inv_gamma};
}

ValueWithError j_minus(const FunctionSpec& f, double alpha, double a, double x,
                       const QuadConfig& cfg) {
    if (!(a > 0.0) || !(x >= a))
        throw std::domain_error("j_minus: require 0 < a <= x");
    const double L = std::log(x / a);
    if (L <= 0.0) return {0.0, 0.0};
    const double inv_gamma = 1.0 / gamma_fn(alpha);
    QuadResult q = integrate_log_singular(
        [&](double u) { return f.eval(a * std::exp(u)); }, L, alpha, cfg);
    return {q.value * inv_gamma, q.error_estimate * inv_gamma};
}

ValueWithError i_f(const FunctionSpec& f, const IneqParams& p, const QuadConfig& cfg) {
    p.validate();
    const double a = p.interval.a, b = p.interval.b;
    const double alpha = p.alpha, lambda = p.lambda, x = p.x;
    const double p1 = std::pow(std::log(x / a), alpha);
    const double p2 = std::pow(std::log(b / x), alpha);
    const ValueWithError jm = j_minus(f, alpha, a, x, cfg);
    const ValueWithError jp = j_plus(f, alpha, x, b, cfg);
    const double g1 = gamma_fn(alpha + 1.0);
    const double value = (1.0 - lambda) * (p1 + p2) * f.eval(x) +
                         lambda * (f.eval(a) * p1 + f.eval(b) * p2) -
                         g1 * (jm.value + jp.value);
    return {value, g1 * (jm.error + jp.error)};
}

ValueWithError s_f(const FunctionSpec& f, const IneqParams& p, const QuadConfig& cfg) {
    p.validate();
    if (!p.y) throw std::invalid_argument("s_f: params must carry y");
    const double a = p.interval.a, b = p.interval.b;
    const double alpha = p.alpha, lambda = p.lambda;
    const double C = p.c_point();
    const ValueWithError jm = j_minus(f, alpha, a, C, cfg);
    const ValueWithError jp = j_plus(f, alpha, C, b, cfg);
    const double k = gamma_fn(alpha + 1.0) / std::pow(p.interval.log_ratio(), alpha);
    const double value = std::pow(lambda, alpha) * f.eval(p.x) +
                         std::pow(1.0 - lambda, alpha) * f.eval(*p.y) -
                         k * (jm.value + jp.value);
    return {value, k * (jm.error + jp.error)};
}

HhTriple hh_triple(const FunctionSpec& f, double alpha,
                   const GeometricInterval& interval, const QuadConfig& cfg) {
    if (!(alpha > 0.0)) throw std::domain_error("hh_triple: alpha must be positive");
    const double a = interval.a, b = interval.b;
    const ValueWithError jab = j_plus(f, alpha, a, b, cfg);   // J_{a+} f(b)
    const ValueWithError jba = j_minus(f, alpha, a, b, cfg);  // J_{b-} f(a)
    const double k = gamma_fn(alpha + 1.0) /
                     (2.0 * std::pow(interval.log_ratio(), alpha));
    HhTriple t;
    t.left = f.eval(interval.geometric_mid());
    t.middle = k * (jab.value + jba.value);
    t.right = 0.5 * (f.eval(a) + f.eval(b));
    t.quad_error = k * (jab.error + jba.error);
    return t;
}

}  // namespace fracineq
