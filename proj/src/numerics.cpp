#include "fracineq/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace fracineq {

namespace {

constexpr double kGammaCap = 170.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (symmetric halves).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double lo, hi;
    double value;
    double error;
    bool splittable;
};

Panel gk15(const Integrand& g, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = g(mid);
    double fv[7][2];
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        fv[i][0] = g(mid - dx);
        fv[i][1] = g(mid + dx);
        const double fsum = fv[i][0] + fv[i][1];
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    // Scaled error estimate (the usual Kronrod practice): inflate the raw
    // |K - G| difference against the variation resasc so rough panels are
    // never underestimated.
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i][0] - reskh) + std::fabs(fv[i][1] - reskh));
    resasc *= std::fabs(half);
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));

    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.value = resk * half;
    p.error = err;
    const double width_floor =
        16.0 * std::numeric_limits<double>::epsilon() *
        std::max(std::fabs(lo), std::fabs(hi));
    p.splittable = (hi - lo) > width_floor;
    return p;
}

struct PanelWorse {
    bool operator()(const Panel& a, const Panel& b) const {
        return a.error < b.error;
    }
};

}  // namespace

void QuadConfig::validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadConfig: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadConfig: rel_tol must be > 0");
    if (max_subdivisions < 1) throw std::invalid_argument("QuadConfig: max_subdivisions must be >= 1");
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    // Shift into the Stirling regime, then apply the Bernoulli tail
    // B_2 .. B_14; truncation below 2e-18 for x >= 12.
    double shift = 0.0;
    while (x < 12.0) {
        shift -= std::log(x);
        x += 1.0;
    }
    static constexpr double c[7] = {
        1.0 / 12.0,   -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0};
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double tail = c[6];
    for (int i = 5; i >= 0; --i) tail = c[i] + inv2 * tail;
    tail *= inv;
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + tail + shift;
}

double gamma_fn(double alpha) {
    if (!(alpha > 0.0) || alpha > kGammaCap)
        throw std::domain_error("gamma_fn: alpha must be in (0, 170]");
    return std::exp(log_gamma(alpha));
}

double lower_incomplete_gamma(double alpha, double z) {
    if (!(alpha > 0.0) || alpha > kGammaCap)
        throw std::domain_error("lower_incomplete_gamma: alpha must be in (0, 170]");
    if (!(z >= 0.0))
        throw std::domain_error("lower_incomplete_gamma: z must be >= 0");
    if (z == 0.0) return 0.0;

    const double eps = std::numeric_limits<double>::epsilon();
    const double log_prefactor = alpha * std::log(z) - z;

    if (z < alpha + 1.0) {
        // gamma(a,z) = z^a e^{-z} sum_{n>=0} z^n / (a(a+1)...(a+n))
        double term = 1.0 / alpha;
        double sum = term;
        for (int n = 1; n < 10000; ++n) {
            term *= z / (alpha + n);
            sum += term;
            if (std::fabs(term) < eps * std::fabs(sum))
                return sum * std::exp(log_prefactor);
        }
        throw std::runtime_error("lower_incomplete_gamma: series failed to converge");
    }

    // Upper tail Gamma(a,z) by modified Lentz continued fraction, then
    // gamma = Gamma(a) - Gamma(a,z).
    const double fpmin = std::numeric_limits<double>::min() / eps;
    double b = z + 1.0 - alpha;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (i - alpha);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) {
            const double upper = std::exp(log_prefactor) * h;
            return std::exp(log_gamma(alpha)) - upper;
        }
    }
    throw std::runtime_error("lower_incomplete_gamma: continued fraction failed to converge");
}

double aux_integral_left(double a, double x, double alpha) {
    if (!(a > 0.0) || !(x >= a))
        throw std::domain_error("aux_integral_left: require 0 < a <= x");
    if (!(alpha > 0.0))
        throw std::domain_error("aux_integral_left: alpha must be positive");
    const double L = std::log(x / a);
    if (L <= 0.0) return 0.0;

    if (L > 30.0) {
        // Term growth ~ e^L makes the series ill-behaved; integrate
        // u^{alpha-1} e^u instead.
        QuadConfig cfg;
        cfg.rel_tol = 1e-12;
        return a * integrate_power_kernel([](double u) { return std::exp(u); },
                                          0.0, L, alpha, cfg).value;
    }

    // a * sum_k L^{alpha+k} / (k! (alpha+k))
    double pow_term = std::pow(L, alpha);  // L^{alpha+k} / k!
    double sum = pow_term / alpha;
    for (int k = 1; k <= 500; ++k) {
        pow_term *= L / k;
        const double term = pow_term / (alpha + k);
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return a * sum;
}

double aux_integral_right(double x, double b, double alpha) {
    if (!(x > 0.0) || !(b >= x))
        throw std::domain_error("aux_integral_right: require 0 < x <= b");
    if (!(alpha > 0.0))
        throw std::domain_error("aux_integral_right: alpha must be positive");
    const double L = std::log(b / x);
    if (L <= 0.0) return 0.0;
    return b * lower_incomplete_gamma(alpha, L);
}

QuadResult integrate_adaptive(const Integrand& g, double lo, double hi,
                              const QuadConfig& cfg) {
    cfg.validate();
    if (!(lo <= hi)) throw std::invalid_argument("integrate_adaptive: require lo <= hi");
    if (lo == hi) return {0.0, 0.0, 0};

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
    Panel first = gk15(g, lo, hi);
    double total_value = first.value;
    double total_error = first.error;
    double settled_value = 0.0;  // panels no longer in the queue
    double settled_error = 0.0;
    queue.push(first);

    int subdivisions = 0;
    auto tolerance = [&]() {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total_value));
    };

    while (total_error > tolerance()) {
        if (!std::isfinite(total_value) || !std::isfinite(total_error))
            throw QuadratureError("integrate_adaptive: non-finite integrand",
                                  {total_value, total_error, subdivisions});
        if (queue.empty() || subdivisions >= cfg.max_subdivisions)
            throw QuadratureError("integrate_adaptive: max subdivisions reached",
                                  {total_value, total_error, subdivisions});
        Panel worst = queue.top();
        queue.pop();
        if (!worst.splittable) {
            // Width at rounding level: nothing more to gain from this panel.
            settled_value += worst.value;
            settled_error += worst.error;
            continue;
        }
        ++subdivisions;
        const double mid = 0.5 * (worst.lo + worst.hi);
        Panel left = gk15(g, worst.lo, mid);
        Panel right = gk15(g, mid, worst.hi);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
    return {total_value, total_error, subdivisions};
}

QuadResult integrate_power_kernel(const Integrand& g, double lo, double hi,
                                  double alpha, const QuadConfig& cfg) {
    if (!(alpha > 0.0))
        throw std::domain_error("integrate_power_kernel: alpha must be positive");
    if (!(lo >= 0.0) || !(hi >= lo))
        throw std::invalid_argument("integrate_power_kernel: require 0 <= lo <= hi");
    if (lo == hi) return {0.0, 0.0, 0};

    if (alpha >= 1.0) {
        auto h = [&](double u) { return std::pow(u, alpha - 1.0) * g(u); };
        return integrate_adaptive(h, lo, hi, cfg);
    }
    // v = u^alpha: the kernel contributes the constant 1/alpha and the
    // integrand g(v^{1/alpha}) stays continuous down to v = 0.
    const double inv_alpha = 1.0 / alpha;
    auto h = [&](double v) { return g(std::pow(v, inv_alpha)) * inv_alpha; };
    return integrate_adaptive(h, std::pow(lo, alpha), std::pow(hi, alpha), cfg);
}

QuadResult integrate_log_singular(const Integrand& g, double L, double alpha,
                                  const QuadConfig& cfg) {
    if (!(L > 0.0))
        throw std::domain_error("integrate_log_singular: L must be positive");
    return integrate_power_kernel(g, 0.0, L, alpha, cfg);
}

}  // namespace fracineq
