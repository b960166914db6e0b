#include "fracineq/funcat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fracineq {

namespace {

const double kInvE = std::exp(-1.0);

std::string format_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

double require_param(const std::optional<double>& p, const char* who) {
    if (!p) throw std::invalid_argument(std::string(who) + ": missing parameter");
    return *p;
}

}  // namespace

GeometricInterval::GeometricInterval(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0))
        throw std::domain_error("GeometricInterval: require a > 0");
    if (!(b >= a * (1.0 + kMinRatioGap)))
        throw std::domain_error("GeometricInterval: require b >= a*(1+1e-6)");
}

FunctionSpec builtin(Builtin kind, std::optional<double> parameter) {
    FunctionSpec s;
    switch (kind) {
        case Builtin::Const: {
            const double c = require_param(parameter, "const");
            s.name = "const:" + format_param(c);
            s.eval = [c](double) { return c; };
            s.deriv = [](double) { return 0.0; };
            s.analytic_lipschitz = [](const GeometricInterval&) { return 0.0; };
            s.ga_convex_on = [](const GeometricInterval&) { return true; };
            break;
        }
        case Builtin::Identity: {
            s.name = "identity";
            s.eval = [](double t) { return t; };
            s.deriv = [](double) { return 1.0; };
            s.analytic_lipschitz = [](const GeometricInterval&) { return 1.0; };
            s.ga_convex_on = [](const GeometricInterval&) { return true; };
            break;
        }
        case Builtin::Power: {
            const double n = require_param(parameter, "power");
            if (!(n >= 1.0)) throw std::invalid_argument("power: exponent must be >= 1");
            s.name = "power:" + format_param(n);
            s.eval = [n](double t) { return std::pow(t, n); };
            s.deriv = [n](double t) { return n * std::pow(t, n - 1.0); };
            s.analytic_lipschitz = [n](const GeometricInterval& i) {
                return n * std::pow(i.b, n - 1.0);
            };
            s.ga_convex_on = [](const GeometricInterval&) { return true; };
            break;
        }
        case Builtin::XExp: {
            s.name = "xexp";
            s.eval = [](double t) { return t * std::exp(t); };
            s.deriv = [](double t) { return (t + 1.0) * std::exp(t); };
            s.analytic_lipschitz = [](const GeometricInterval& i) {
                return std::exp(i.b) * (i.b + 1.0);
            };
            s.ga_convex_on = [](const GeometricInterval&) { return true; };
            s.domain_ceil = 200.0;  // keeps e^b and its bound factors finite
            break;
        }
        case Builtin::Recip: {
            s.name = "recip";
            s.eval = [](double t) { return 1.0 / t; };
            s.deriv = [](double t) { return -1.0 / (t * t); };
            s.analytic_lipschitz = [](const GeometricInterval& i) {
                return 1.0 / (i.a * i.a);
            };
            s.ga_convex_on = [](const GeometricInterval&) { return true; };
            break;
        }
        case Builtin::Log: {
            s.name = "log";
            s.eval = [](double t) { return std::log(t); };
            s.deriv = [](double t) { return 1.0 / t; };
            s.analytic_lipschitz = [](const GeometricInterval& i) { return 1.0 / i.a; };
            s.ga_convex_on = [](const GeometricInterval&) { return true; };
            break;
        }
        case Builtin::XLog: {
            s.name = "xlog";
            s.eval = [](double t) { return t * std::log(t); };
            s.deriv = [](double t) { return 1.0 + std::log(t); };
            // sup |1 + ln t| = 1 + ln b, valid only once a > 1/e keeps the
            // derivative positive throughout.
            s.analytic_lipschitz = [](const GeometricInterval& i) {
                if (i.a <= kInvE)
                    throw std::domain_error("xlog: interval must satisfy a > exp(-1)");
                return 1.0 + std::log(i.b);
            };
            s.ga_convex_on = [](const GeometricInterval& i) {
                return i.a >= std::exp(-2.0);
            };
            s.domain_floor = kInvE;
            break;
        }
    }
    return s;
}

FunctionSpec parse_function(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    std::optional<double> param;
    if (colon != std::string::npos) {
        const std::string tail = text.substr(colon + 1);
        try {
            std::size_t used = 0;
            param = std::stod(tail, &used);
            if (used != tail.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("parse_function: bad parameter in '" + text + "'");
        }
    }
    Builtin kind;
    if (head == "const") kind = Builtin::Const;
    else if (head == "identity") kind = Builtin::Identity;
    else if (head == "power") kind = Builtin::Power;
    else if (head == "xexp") kind = Builtin::XExp;
    else if (head == "recip") kind = Builtin::Recip;
    else if (head == "log") kind = Builtin::Log;
    else if (head == "xlog") kind = Builtin::XLog;
    else throw std::invalid_argument("parse_function: unknown function '" + head + "'");
    if (param && kind != Builtin::Const && kind != Builtin::Power)
        throw std::invalid_argument("parse_function: '" + head + "' takes no parameter");
    return builtin(kind, param);
}

std::vector<FunctionSpec> default_catalog() {
    return {builtin(Builtin::Const, 1.0),  builtin(Builtin::Identity),
            builtin(Builtin::Power, 2.0),  builtin(Builtin::Power, 3.0),
            builtin(Builtin::XExp),        builtin(Builtin::Recip),
            builtin(Builtin::Log),         builtin(Builtin::XLog)};
}

double lipschitz_estimate(const FunctionSpec& spec, const GeometricInterval& interval) {
    if (!spec.deriv) throw std::invalid_argument("lipschitz_estimate: spec has no derivative");
    const int n = 2048;
    const double lr = interval.log_ratio();
    auto point = [&](int i) {
        return interval.a * std::exp(lr * static_cast<double>(i) / (n - 1));
    };
    auto mag = [&](double t) { return std::fabs(spec.deriv(t)); };

    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i < n; ++i) {
        const double v = mag(point(i));
        if (v > best) {
            best = v;
            best_i = i;
        }
    }

    // Golden-section refinement of the bracket around the grid argmax.
    double lo = point(std::max(0, best_i - 1));
    double hi = point(std::min(n - 1, best_i + 1));
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = mag(x1), f2 = mag(x2);
    for (int iter = 0; iter < 80; ++iter) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = mag(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = mag(x1);
        }
    }
    return std::max({best, f1, f2});
}

GaConvexReport ga_convex_check(const FunctionSpec& spec,
                               const GeometricInterval& interval, int grid_size) {
    if (grid_size < 3) throw std::invalid_argument("ga_convex_check: grid_size must be >= 3");
    const int g = grid_size;
    const double lr = interval.log_ratio();

    std::vector<double> logx(g), fx(g);
    double scale = 1.0;
    for (int i = 0; i < g; ++i) {
        logx[i] = std::log(interval.a) + lr * static_cast<double>(i) / (g - 1);
        fx[i] = spec.eval(std::exp(logx[i]));
        scale = std::max(scale, std::fabs(fx[i]));
    }

    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            for (int k = 0; k < g; ++k) {
                const double t = static_cast<double>(k) / (g - 1);
                const double m = std::exp(t * logx[i] + (1.0 - t) * logx[j]);
                const double slack = t * fx[i] + (1.0 - t) * fx[j] - spec.eval(m);
                worst = std::min(worst, slack);
            }
        }
    }
    return {worst >= -1e-10 * scale, worst};
}

}  // namespace fracineq
