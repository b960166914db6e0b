#include "fracineq/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracineq {

namespace {

constexpr double kXExpCeil = 500.0;  // e^b and its products stay finite below this

void require_positive_pair(double a, double b, const char* who) {
    if (!(a > 0.0) || !(b >= a))
        throw std::domain_error(std::string(who) + ": require 0 < a <= b");
}

void require_strict_pair(double a, double b, const char* who) {
    if (!(a > 0.0) || !(b > a))
        throw std::domain_error(std::string(who) + ": require 0 < a < b");
}

double check_n(double n, bool allow_real_n) {
    if (!(n >= 1.0)) throw std::invalid_argument("prop_check: n must be >= 1");
    if (!allow_real_n && n != std::floor(n))
        throw std::invalid_argument("prop_check: non-integer n requires allow_real_n");
    return n;
}

// lambda (b-a)/2 ln(b/a) + 2 (1-2 lambda) (A - G), the shared bracket of
// every mean display.
double rhs_bracket(double a, double b, double lambda) {
    const MeanSet ms = means_all(a, b);
    return 0.5 * lambda * (b - a) * std::log(b / a) +
           2.0 * (1.0 - 2.0 * lambda) * (ms.A - ms.G);
}

}  // namespace

const char* to_string(PropId id) {
    switch (id) {
        case PropId::P31: return "P31";
        case PropId::P32: return "P32";
        case PropId::P33: return "P33";
        case PropId::P_LOG: return "P_LOG";
        case PropId::P_XLOGX: return "P_XLOGX";
    }
    return "?";
}

MeanSet means_all(double a, double b) {
    require_positive_pair(a, b, "means_all");
    MeanSet ms;
    ms.A = 0.5 * (a + b);
    ms.G = std::sqrt(a * b);
    ms.H = 2.0 * a * b / (a + b);
    if (a == b) {
        ms.L = a;
        ms.I = a;
        return ms;
    }
    const double log_ratio = std::log1p((b - a) / a);  // ln(b/a), stable near a==b
    ms.L = (b - a) / log_ratio;
    // ln I = ln b + a ln(b/a)/(b-a) - 1  (same identity, overflow-free)
    ms.I = std::exp(std::log(b) + a * log_ratio / (b - a) - 1.0);
    return ms;
}

PropCheck prop_check(PropId id, double a, double b, double lambda, double n,
                     bool allow_real_n) {
    require_strict_pair(a, b, "prop_check");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("prop_check: lambda must be in [0,1]");

    const MeanSet ms = means_all(a, b);
    const double log_ratio = std::log(b / a);
    const double bracket = rhs_bracket(a, b, lambda);

    PropCheck r;
    r.id = id;
    switch (id) {
        case PropId::P31: {
            check_n(n, allow_real_n);
            const double an = std::pow(a, n), bn = std::pow(b, n);
            const MeanSet msn = means_all(an, bn);
            r.lhs = std::fabs((1.0 - lambda) * std::pow(ms.G, n) + lambda * msn.A - msn.L);
            r.rhs = n * std::pow(b, n - 1.0) / log_ratio * bracket;
            break;
        }
        case PropId::P32: {
            if (b > kXExpCeil)
                throw std::domain_error("prop_check: P32 requires b <= 500 (e^b overflow)");
            // G(a e^a, b e^b), A(a e^a, b e^b), L(e^a, e^b) L(a, b)
            const double g_t = std::exp(0.5 * (std::log(a) + a + std::log(b) + b));
            const double a_t = 0.5 * (a * std::exp(a) + b * std::exp(b));
            const double l_exp = (std::exp(b) - std::exp(a)) / (b - a);
            r.lhs = std::fabs((1.0 - lambda) * g_t + lambda * a_t - l_exp * ms.L);
            r.rhs = std::exp(b) * (b + 1.0) / log_ratio * bracket;
            break;
        }
        case PropId::P33: {
            r.lhs = std::fabs((1.0 - lambda) / ms.G + lambda / ms.H -
                              ms.L / (ms.G * ms.G));
            r.rhs = 1.0 / (a * a * log_ratio) * bracket;
            break;
        }
        case PropId::P_LOG: {
            // The displayed combination is identically zero for ln; the
            // check is that zero identity plus nonnegativity of the bound.
            const double integral_mean = 0.5 * (std::log(a) + std::log(b));
            r.lhs = std::fabs((1.0 - lambda) * std::log(ms.G) +
                              0.5 * lambda * (std::log(a) + std::log(b)) - integral_mean);
            r.rhs = 1.0 / (a * log_ratio) * bracket;
            break;
        }
        case PropId::P_XLOGX: {
            if (!(a > std::exp(-1.0)))
                throw std::domain_error("prop_check: P_XLOGX requires a > exp(-1)");
            // ln G(a^a, b^b) = (a ln a + b ln b)/2, kept in log form.
            const double ln_g_pow = 0.5 * (a * std::log(a) + b * std::log(b));
            r.lhs = std::fabs((1.0 - lambda) * ms.G * std::log(ms.G) +
                              lambda * ln_g_pow - ms.L * std::log(ms.I));
            r.rhs = (1.0 + std::log(b)) / log_ratio * bracket;
            break;
        }
    }
    r.margin = r.rhs - r.lhs;
    r.pass = r.margin >= -(1e-12 * std::max({1.0, std::fabs(r.lhs), std::fabs(r.rhs)}));
    return r;
}

RemarkChains remark_chain(PropId id, double a, double b, double n,
                          bool allow_real_n) {
    require_strict_pair(a, b, "remark_chain");
    const MeanSet ms = means_all(a, b);
    const double log_ratio = std::log(b / a);
    const double amg = ms.A - ms.G;
    const double lam1_bracket = 0.5 * (b - a) * log_ratio - 2.0 * amg;

    switch (id) {
        case PropId::P31: {
            check_n(n, allow_real_n);
            const double an = std::pow(a, n), bn = std::pow(b, n);
            const MeanSet msn = means_all(an, bn);
            const double gn = std::pow(ms.G, n);
            const double prefactor = n * std::pow(b, n - 1.0) / log_ratio;
            return {{0.0, msn.L - gn, 2.0 * prefactor * amg},
                    {0.0, msn.A - msn.L, prefactor * lam1_bracket}};
        }
        case PropId::P32: {
            if (b > kXExpCeil)
                throw std::domain_error("remark_chain: P32 requires b <= 500 (e^b overflow)");
            const double g_t = std::exp(0.5 * (std::log(a) + a + std::log(b) + b));
            const double a_t = 0.5 * (a * std::exp(a) + b * std::exp(b));
            const double ll = (std::exp(b) - std::exp(a)) / (b - a) * ms.L;
            const double prefactor = std::exp(b) * (b + 1.0) / log_ratio;
            return {{0.0, ll - g_t, 2.0 * prefactor * amg},
                    {0.0, a_t - ll, prefactor * lam1_bracket}};
        }
        case PropId::P33: {
            const double g2 = ms.G * ms.G;
            return {{0.0, ms.L - ms.G, g2 / (a * a * log_ratio) * amg},
                    {0.0, g2 - ms.L * ms.H,
                     g2 * ms.H / (a * a * log_ratio) * lam1_bracket}};
        }
        default:
            throw std::invalid_argument("remark_chain: defined for P31, P32, P33 only");
    }
}

}  // namespace fracineq
