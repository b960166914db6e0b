#include "fracineq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracineq {

namespace {

double classical_log_mean_integral(const FunctionSpec& f,
                                   const GeometricInterval& i,
                                   const QuadConfig& cfg, double* err) {
    // (1/ln(b/a)) int_a^b f(t)/t dt
    QuadResult q = integrate_adaptive(
        [&](double t) { return f.eval(t) / t; }, i.a, i.b, cfg);
    const double inv = 1.0 / i.log_ratio();
    if (err) *err = q.error_estimate * inv;
    return q.value * inv;
}

// factor * Gamma(alpha+1)/ln^a(b/a) * [J_{x-}f(a) + J_{x+}f(b)].
ValueWithError scaled_j_pair(const FunctionSpec& f, double alpha,
                             const GeometricInterval& i, double x,
                             double factor, const QuadConfig& cfg) {
    const ValueWithError jm = j_minus(f, alpha, i.a, x, cfg);
    const ValueWithError jp = j_plus(f, alpha, x, i.b, cfg);
    const double k = factor * gamma_fn(alpha + 1.0) /
                     std::pow(i.log_ratio(), alpha);
    return {k * (jm.value + jp.value), std::fabs(k) * (jm.error + jp.error)};
}

IneqParams pinned(const IneqParams& p, double alpha, double lambda, double x,
                  std::optional<double> y = {}, std::optional<double> delta = {}) {
    IneqParams q = p;
    q.alpha = alpha;
    q.lambda = lambda;
    q.x = x;
    q.y = y;
    q.delta = delta;
    return q;
}

double rel_dev(double u, double v) {
    const double denom = std::max({std::fabs(u), std::fabs(v), 1e-300});
    return std::fabs(u - v) / denom;
}

}  // namespace

const char* to_string(CaseBranch branch) {
    switch (branch) {
        case CaseBranch::C_LE_X: return "C_LE_X";
        case CaseBranch::X_LE_C_LE_Y: return "X_LE_C_LE_Y";
        case CaseBranch::Y_LE_C: return "Y_LE_C";
        case CaseBranch::LAM_LE_1MD: return "LAM_LE_1MD";
        case CaseBranch::MID: return "MID";
        case CaseBranch::DELTA_LE_LAM: return "DELTA_LE_LAM";
    }
    return "?";
}

const std::vector<VariantInfo>& all_variants() {
    // variant, id, alpha, lambda, x, y, delta
    static const std::vector<VariantInfo> table = {
        {BoundVariant::Thm21, "thm21", true, true, true, false, false},
        {BoundVariant::Cor310, "cor-310", true, false, true, false, false},
        {BoundVariant::CorMidAlpha, "cor-mid-alpha", true, false, false, false, false},
        {BoundVariant::Cor31, "cor-31", false, false, false, false, false},
        {BoundVariant::Cor320, "cor-320", true, false, false, false, false},
        {BoundVariant::Cor32, "cor-32", false, false, false, false, false},
        {BoundVariant::CorSimpsonFrac, "cor-simpson-frac", true, false, false, false, false},
        {BoundVariant::Cor33, "cor-33", false, false, false, false, false},
        {BoundVariant::CorHalfFrac, "cor-half-frac", true, false, false, false, false},
        {BoundVariant::Cor34, "cor-34", false, false, false, false, false},
        {BoundVariant::Cor35, "cor-35", false, true, false, false, false},
        {BoundVariant::Thm22, "thm22", true, true, true, true, false},
        {BoundVariant::Cor21b, "cor-21b", true, true, false, false, true},
        {BoundVariant::Cor21c, "cor-21c", true, true, false, false, false},
        {BoundVariant::Cor21d, "cor-21d", true, true, false, false, false},
    };
    return table;
}

const VariantInfo& variant_info(BoundVariant v) {
    for (const auto& info : all_variants())
        if (info.variant == v) return info;
    throw std::logic_error("variant_info: unknown variant");
}

std::optional<BoundVariant> variant_from_id(const std::string& id) {
    for (const auto& info : all_variants())
        if (id == info.id) return info.variant;
    return std::nullopt;
}

double bound_thm21(double M, const IneqParams& p) {
    p.validate();
    if (!(M >= 0.0)) throw std::invalid_argument("bound_thm21: M must be >= 0");
    const double a = p.interval.a, b = p.interval.b;
    const double alpha = p.alpha, lambda = p.lambda, x = p.x;
    const double p1 = std::pow(std::log(x / a), alpha);
    const double p2 = std::pow(std::log(b / x), alpha);
    const double auxl = aux_integral_left(a, x, alpha);
    const double auxr = aux_integral_right(x, b, alpha);
    return M * (((1.0 - lambda) * x - lambda * a) * p1 +
                alpha * (2.0 * lambda - 1.0) * auxl +
                (lambda * b - (1.0 - lambda) * x) * p2 +
                alpha * (1.0 - 2.0 * lambda) * auxr);
}

CAlphaLambda c_alpha_lambda(const IneqParams& p) {
    p.validate();
    if (!p.y) throw std::invalid_argument("c_alpha_lambda: params must carry y");
    const double a = p.interval.a, b = p.interval.b;
    const double alpha = p.alpha, x = p.x, y = *p.y;
    const double C = p.c_point();
    const double L = p.interval.log_ratio();
    const double La = std::pow(L, alpha);
    const double lam_a = std::pow(p.lambda, alpha);
    const double mlam_a = std::pow(1.0 - p.lambda, alpha);

    if (C <= x) {
        // (1)  a <= C <= x <= y <= b
        const double v = (x / alpha) * lam_a * La +
                         (y / alpha) * (mlam_a * La - 2.0 * std::pow(std::log(b / y), alpha)) +
                         aux_integral_right(y, b, alpha) -
                         (aux_integral_right(C, b, alpha) - aux_integral_right(y, b, alpha)) -
                         aux_integral_left(a, C, alpha);
        return {v, CaseBranch::C_LE_X};
    }
    if (C <= y) {
        // (2)  a <= x <= C <= y <= b
        const double v = (x / alpha) * (2.0 * std::pow(std::log(x / a), alpha) - lam_a * La) +
                         (y / alpha) * (mlam_a * La - 2.0 * std::pow(std::log(b / y), alpha)) +
                         (aux_integral_left(a, C, alpha) - aux_integral_left(a, x, alpha)) -
                         aux_integral_left(a, x, alpha) +
                         aux_integral_right(y, b, alpha) -
                         (aux_integral_right(C, b, alpha) - aux_integral_right(y, b, alpha));
        return {v, CaseBranch::X_LE_C_LE_Y};
    }
    // (3)  a <= x <= y <= C <= b
    const double v = (x / alpha) * (2.0 * std::pow(std::log(x / a), alpha) - lam_a * La) -
                     (y / alpha) * mlam_a * La +
                     aux_integral_right(C, b, alpha) +
                     (aux_integral_left(a, C, alpha) - aux_integral_left(a, x, alpha)) -
                     aux_integral_left(a, x, alpha);
    return {v, CaseBranch::Y_LE_C};
}

double bound_thm22(double M, const IneqParams& p) {
    if (!(M >= 0.0)) throw std::invalid_argument("bound_thm22: M must be >= 0");
    const CAlphaLambda c = c_alpha_lambda(p);
    return p.alpha * M * c.value / std::pow(p.interval.log_ratio(), p.alpha);
}

BranchValue delta_case_weight(double alpha, double lambda, double delta,
                              const GeometricInterval& interval) {
    if (!(alpha > 0.0)) throw std::domain_error("delta_case_weight: alpha must be positive");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("delta_case_weight: lambda must be in [0,1]");
    if (!(delta >= 0.5 && delta <= 1.0))
        throw std::domain_error("delta_case_weight: delta must be in [1/2,1]");
    const double a = interval.a, b = interval.b;
    const double la = std::log(a), lb = std::log(b);
    // delta = 1 must hit the endpoints exactly: (ulp)^alpha is not small
    // for alpha < 1, so rounding into the interior would distort the weight.
    const double xh =
        delta == 1.0 ? a : std::min(std::max(std::exp(delta * la + (1.0 - delta) * lb), a), b);
    const double yh =
        delta == 1.0 ? b : std::min(std::max(std::exp((1.0 - delta) * la + delta * lb), a), b);
    const double C =
        std::min(std::max(std::exp((1.0 - lambda) * la + lambda * lb), a), b);
    const double L = interval.log_ratio();
    const double La = std::pow(L, alpha);
    const double lam_a = std::pow(lambda, alpha);
    const double mlam_a = std::pow(1.0 - lambda, alpha);
    const double omd_a = std::pow(1.0 - delta, alpha);

    if (lambda <= 1.0 - delta) {
        const double v = xh * lam_a + yh * (mlam_a - 2.0 * omd_a) +
                         (alpha / La) *
                             (aux_integral_right(yh, b, alpha) -
                              (aux_integral_right(C, b, alpha) - aux_integral_right(yh, b, alpha)) -
                              aux_integral_left(a, C, alpha));
        return {v, CaseBranch::LAM_LE_1MD};
    }
    if (lambda <= delta) {
        const double v = xh * (2.0 * omd_a - lam_a) + yh * (mlam_a - 2.0 * omd_a) +
                         (alpha / La) *
                             ((aux_integral_left(a, C, alpha) - aux_integral_left(a, xh, alpha)) -
                              aux_integral_left(a, xh, alpha) +
                              aux_integral_right(yh, b, alpha) -
                              (aux_integral_right(C, b, alpha) - aux_integral_right(yh, b, alpha)));
        return {v, CaseBranch::MID};
    }
    const double v = xh * (2.0 * omd_a - lam_a) - yh * mlam_a +
                     (alpha / La) *
                         (aux_integral_right(C, b, alpha) +
                          (aux_integral_left(a, C, alpha) - aux_integral_left(a, xh, alpha)) -
                          aux_integral_left(a, xh, alpha));
    return {v, CaseBranch::DELTA_LE_LAM};
}

ClosedFormBound closed_form_bound(BoundVariant v, double M, const IneqParams& p) {
    if (!(M >= 0.0)) throw std::invalid_argument("closed_form_bound: M must be >= 0");
    const GeometricInterval i = p.interval;
    const double a = i.a, b = i.b;
    const double L = i.log_ratio();
    const double m = i.geometric_mid();
    const double two_pow = std::pow(2.0, p.alpha - 1.0);

    switch (v) {
        case BoundVariant::Thm21: {
            IneqParams q = pinned(p, p.alpha, p.lambda, p.x);
            return {v, bound_thm21(M, q), {}, q,
                    [q](const FunctionSpec& f, const QuadConfig& cfg) {
                        return i_f(f, q, cfg);
                    }};
        }
        case BoundVariant::Cor310: {
            IneqParams q = pinned(p, p.alpha, 0.0, p.x);
            const double La = std::pow(L, q.alpha);
            const double p1 = std::pow(std::log(q.x / a), q.alpha);
            const double p2 = std::pow(std::log(b / q.x), q.alpha);
            const double rhs =
                (M / La) * (q.x * (p1 - p2) +
                            q.alpha * (aux_integral_right(q.x, b, q.alpha) -
                                       aux_integral_left(a, q.x, q.alpha)));
            return {v, rhs, {}, q,
                    [q, La](const FunctionSpec& f, const QuadConfig& cfg) {
                        ValueWithError w = i_f(f, q, cfg);
                        return ValueWithError{w.value / La, w.error / La};
                    }};
        }
        case BoundVariant::CorMidAlpha: {
            IneqParams q = pinned(p, p.alpha, 0.0, m);
            const double La = std::pow(L, q.alpha);
            const double rhs = two_pow * M * q.alpha / La *
                               (aux_integral_right(m, b, q.alpha) -
                                aux_integral_left(a, m, q.alpha));
            return {v, rhs, {}, q,
                    [q, i, m, two_pow](const FunctionSpec& f, const QuadConfig& cfg) {
                        ValueWithError j = scaled_j_pair(f, q.alpha, i, m, two_pow, cfg);
                        return ValueWithError{f.eval(m) - j.value, j.error};
                    }};
        }
        case BoundVariant::Cor31: {
            IneqParams q = pinned(p, 1.0, 0.0, m);
            return {v, M * (a + b - 2.0 * m) / L, {}, q,
                    [i, m](const FunctionSpec& f, const QuadConfig& cfg) {
                        double err = 0.0;
                        const double mean = classical_log_mean_integral(f, i, cfg, &err);
                        return ValueWithError{f.eval(m) - mean, err};
                    }};
        }
        case BoundVariant::Cor320: {
            IneqParams q = pinned(p, p.alpha, 1.0, m);
            const double La = std::pow(L, q.alpha);
            const double rhs =
                two_pow * M / La *
                ((b - a) * std::pow(0.5 * L, q.alpha) -
                 q.alpha * (aux_integral_right(m, b, q.alpha) -
                            aux_integral_left(a, m, q.alpha)));
            return {v, rhs, {}, q,
                    [q, i, m, two_pow](const FunctionSpec& f, const QuadConfig& cfg) {
                        ValueWithError j = scaled_j_pair(f, q.alpha, i, m, two_pow, cfg);
                        return ValueWithError{
                            0.5 * (f.eval(i.a) + f.eval(i.b)) - j.value, j.error};
                    }};
        }
        case BoundVariant::Cor32: {
            IneqParams q = pinned(p, 1.0, 1.0, m);
            const double rhs = (M / L) * (0.5 * (b - a) * L - (a + b - 2.0 * m));
            return {v, rhs, {}, q,
                    [i](const FunctionSpec& f, const QuadConfig& cfg) {
                        double err = 0.0;
                        const double mean = classical_log_mean_integral(f, i, cfg, &err);
                        return ValueWithError{
                            0.5 * (f.eval(i.a) + f.eval(i.b)) - mean, err};
                    }};
        }
        case BoundVariant::CorSimpsonFrac: {
            IneqParams q = pinned(p, p.alpha, 1.0 / 3.0, m);
            const double La = std::pow(L, q.alpha);
            const double rhs =
                two_pow * M / (3.0 * La) *
                ((b - a) * std::pow(0.5 * L, q.alpha) +
                 q.alpha * (aux_integral_right(m, b, q.alpha) -
                            aux_integral_left(a, m, q.alpha)));
            return {v, rhs, {}, q,
                    [q, i, m, two_pow](const FunctionSpec& f, const QuadConfig& cfg) {
                        ValueWithError j = scaled_j_pair(f, q.alpha, i, m, two_pow, cfg);
                        const double w =
                            (0.5 * (f.eval(i.a) + f.eval(i.b)) + 2.0 * f.eval(m)) / 3.0;
                        return ValueWithError{w - j.value, j.error};
                    }};
        }
        case BoundVariant::Cor33: {
            IneqParams q = pinned(p, 1.0, 1.0 / 3.0, m);
            const double rhs = M / (3.0 * L) * (0.5 * (b - a) * L + (a + b - 2.0 * m));
            return {v, rhs, {}, q,
                    [i, m](const FunctionSpec& f, const QuadConfig& cfg) {
                        double err = 0.0;
                        const double mean = classical_log_mean_integral(f, i, cfg, &err);
                        const double w =
                            (0.5 * (f.eval(i.a) + f.eval(i.b)) + 2.0 * f.eval(m)) / 3.0;
                        return ValueWithError{w - mean, err};
                    }};
        }
        case BoundVariant::CorHalfFrac: {
            // Left side carries the weights the lambda = 1/2 reduction
            // actually produces: f(m)/2 + (f(a)+f(b))/4.
            IneqParams q = pinned(p, p.alpha, 0.5, m);
            return {v, M * (b - a) / 4.0, {}, q,
                    [q, i, m, two_pow](const FunctionSpec& f, const QuadConfig& cfg) {
                        ValueWithError j = scaled_j_pair(f, q.alpha, i, m, two_pow, cfg);
                        const double w =
                            0.5 * f.eval(m) + 0.25 * (f.eval(i.a) + f.eval(i.b));
                        return ValueWithError{w - j.value, j.error};
                    }};
        }
        case BoundVariant::Cor34: {
            IneqParams q = pinned(p, 1.0, 0.5, m);
            return {v, M * (b - a) / 4.0, {}, q,
                    [i, m](const FunctionSpec& f, const QuadConfig& cfg) {
                        double err = 0.0;
                        const double mean = classical_log_mean_integral(f, i, cfg, &err);
                        const double w =
                            0.5 * f.eval(m) + 0.25 * (f.eval(i.a) + f.eval(i.b));
                        return ValueWithError{w - mean, err};
                    }};
        }
        case BoundVariant::Cor35: {
            IneqParams q = pinned(p, 1.0, p.lambda, m);
            const double rhs = (M / L) * (0.5 * q.lambda * (b - a) * L +
                                          (1.0 - 2.0 * q.lambda) * (a + b - 2.0 * m));
            const double lambda = q.lambda;
            return {v, rhs, {}, q,
                    [i, m, lambda](const FunctionSpec& f, const QuadConfig& cfg) {
                        double err = 0.0;
                        const double mean = classical_log_mean_integral(f, i, cfg, &err);
                        const double w = (1.0 - lambda) * f.eval(m) +
                                         0.5 * lambda * (f.eval(i.a) + f.eval(i.b));
                        return ValueWithError{w - mean, err};
                    }};
        }
        case BoundVariant::Thm22: {
            if (!p.y) throw std::invalid_argument("closed_form_bound: thm22 requires y");
            IneqParams q = pinned(p, p.alpha, p.lambda, p.x, p.y);
            const CAlphaLambda c = c_alpha_lambda(q);
            const double rhs = q.alpha * M * c.value / std::pow(L, q.alpha);
            return {v, rhs, c.branch, q,
                    [q](const FunctionSpec& f, const QuadConfig& cfg) {
                        return s_f(f, q, cfg);
                    }};
        }
        case BoundVariant::Cor21b: {
            const double delta = p.delta.value_or(0.5);
            const double la = std::log(a), lb = std::log(b);
            const double xh =
                delta == 1.0
                    ? a
                    : std::min(std::max(std::exp(delta * la + (1.0 - delta) * lb), a), b);
            const double yh =
                delta == 1.0
                    ? b
                    : std::min(std::max(std::exp((1.0 - delta) * la + delta * lb), a), b);
            IneqParams q = pinned(p, p.alpha, p.lambda, xh, yh, delta);
            const BranchValue w = delta_case_weight(q.alpha, q.lambda, delta, i);
            return {v, M * w.value, w.branch, q,
                    [q](const FunctionSpec& f, const QuadConfig& cfg) {
                        return s_f(f, q, cfg);
                    }};
        }
        case BoundVariant::Cor21c: {
            const double C = pinned(p, p.alpha, p.lambda, p.x).c_point();
            IneqParams q = pinned(p, p.alpha, p.lambda, C, C);
            const double La = std::pow(L, q.alpha);
            const double lam_a = std::pow(q.lambda, q.alpha);
            const double mlam_a = std::pow(1.0 - q.lambda, q.alpha);
            const double rhs =
                M * ((lam_a - mlam_a) * C +
                     (q.alpha / La) * (aux_integral_right(C, b, q.alpha) -
                                       aux_integral_left(a, C, q.alpha)));
            return {v, rhs, {}, q,
                    [q, i, C, lam_a, mlam_a](const FunctionSpec& f, const QuadConfig& cfg) {
                        ValueWithError j = scaled_j_pair(f, q.alpha, i, C, 1.0, cfg);
                        return ValueWithError{(lam_a + mlam_a) * f.eval(C) - j.value,
                                              j.error};
                    }};
        }
        case BoundVariant::Cor21d: {
            const double C = pinned(p, p.alpha, p.lambda, p.x).c_point();
            IneqParams q = pinned(p, p.alpha, p.lambda, a, b, 1.0);
            const double La = std::pow(L, q.alpha);
            const double lam_a = std::pow(q.lambda, q.alpha);
            const double mlam_a = std::pow(1.0 - q.lambda, q.alpha);
            const double rhs =
                M * (b * mlam_a - a * lam_a +
                     (q.alpha / La) * (aux_integral_left(a, C, q.alpha) -
                                       aux_integral_right(C, b, q.alpha)));
            return {v, rhs, {}, q,
                    [q, i, C, lam_a, mlam_a](const FunctionSpec& f, const QuadConfig& cfg) {
                        ValueWithError j = scaled_j_pair(f, q.alpha, i, C, 1.0, cfg);
                        return ValueWithError{
                            lam_a * f.eval(i.a) + mlam_a * f.eval(i.b) - j.value,
                            j.error};
                    }};
        }
    }
    throw std::logic_error("closed_form_bound: unknown variant");
}

double specialization_consistency_dev(const IneqParams& p, double M) {
    p.validate();
    const GeometricInterval i = p.interval;
    const double b = i.b, a = i.a;
    const double L = i.log_ratio();
    const double m = i.geometric_mid();
    const double alpha = p.alpha;
    const double La = std::pow(L, alpha);
    const double two_pow = std::pow(2.0, alpha - 1.0);

    double dev = 0.0;
    auto track = [&](double u, double v) { dev = std::max(dev, rel_dev(u, v)); };

    // one-point lattice
    track(closed_form_bound(BoundVariant::Cor310, M, p).rhs,
          bound_thm21(M, pinned(p, alpha, 0.0, p.x)) / La);
    track(closed_form_bound(BoundVariant::CorMidAlpha, M, p).rhs,
          bound_thm21(M, pinned(p, alpha, 0.0, m)) * two_pow / La);
    track(closed_form_bound(BoundVariant::Cor31, M, p).rhs,
          bound_thm21(M, pinned(p, 1.0, 0.0, m)) / L);
    track(closed_form_bound(BoundVariant::Cor320, M, p).rhs,
          bound_thm21(M, pinned(p, alpha, 1.0, m)) * two_pow / La);
    track(closed_form_bound(BoundVariant::Cor32, M, p).rhs,
          bound_thm21(M, pinned(p, 1.0, 1.0, m)) / L);
    track(closed_form_bound(BoundVariant::CorSimpsonFrac, M, p).rhs,
          bound_thm21(M, pinned(p, alpha, 1.0 / 3.0, m)) * two_pow / La);
    track(closed_form_bound(BoundVariant::Cor33, M, p).rhs,
          bound_thm21(M, pinned(p, 1.0, 1.0 / 3.0, m)) / L);
    track(closed_form_bound(BoundVariant::CorHalfFrac, M, p).rhs,
          bound_thm21(M, pinned(p, alpha, 0.5, m)) * two_pow / La);
    track(closed_form_bound(BoundVariant::Cor34, M, p).rhs, M * (b - a) / 4.0);
    track(closed_form_bound(BoundVariant::Cor35, M, p).rhs,
          bound_thm21(M, pinned(p, 1.0, p.lambda, m)) / L);

    // two-point lattice
    const double delta = p.delta.value_or(0.75);
    {
        const ClosedFormBound cb = closed_form_bound(
            BoundVariant::Cor21b, M, pinned(p, alpha, p.lambda, p.x, {}, delta));
        track(cb.rhs, bound_thm22(M, cb.effective));
    }
    {
        const ClosedFormBound cc = closed_form_bound(BoundVariant::Cor21c, M, p);
        track(cc.rhs, bound_thm22(M, cc.effective));
    }
    {
        const ClosedFormBound cd = closed_form_bound(BoundVariant::Cor21d, M, p);
        const ClosedFormBound cb1 = closed_form_bound(
            BoundVariant::Cor21b, M, pinned(p, alpha, p.lambda, p.x, {}, 1.0));
        track(cd.rhs, cb1.rhs);
        track(cd.rhs, bound_thm22(M, cd.effective));
    }

    // half-weight reductions of the two-point corollaries
    track(closed_form_bound(BoundVariant::Cor21c, M, pinned(p, alpha, 0.5, p.x)).rhs,
          closed_form_bound(BoundVariant::Cor310, M, pinned(p, alpha, 0.0, m)).rhs);
    track(two_pow *
              closed_form_bound(BoundVariant::Cor21d, M, pinned(p, alpha, 0.5, p.x)).rhs,
          closed_form_bound(BoundVariant::Cor320, M, p).rhs);

    // lambda interpolation of the classical family
    track(closed_form_bound(BoundVariant::Cor35, M, pinned(p, 1.0, 0.0, m)).rhs,
          closed_form_bound(BoundVariant::Cor31, M, p).rhs);
    track(closed_form_bound(BoundVariant::Cor35, M, pinned(p, 1.0, 1.0, m)).rhs,
          closed_form_bound(BoundVariant::Cor32, M, p).rhs);
    track(closed_form_bound(BoundVariant::Cor35, M, pinned(p, 1.0, 1.0 / 3.0, m)).rhs,
          closed_form_bound(BoundVariant::Cor33, M, p).rhs);
    track(closed_form_bound(BoundVariant::Cor35, M, pinned(p, 1.0, 0.5, m)).rhs,
          closed_form_bound(BoundVariant::Cor34, M, p).rhs);

    return dev;
}

}  // namespace fracineq
