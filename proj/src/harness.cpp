#include "fracineq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

namespace fracineq {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double kLambdaStrata[4] = {0.0, 1.0 / 3.0, 0.5, 1.0};
constexpr double kAlphaStrata[3] = {0.5, 1.0, 2.0};

// Sampling slots per index % 10: forced branch 1/2/3, midpoint stratum,
// lambda stratum, alpha stratum, then natural draws.
IneqParams sample_impl(const SampleConfig& cfg, int index, double domain_floor,
                       double domain_ceil, int forced_slot) {
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(index));

    const double a_lo = std::max(cfg.a_lo, domain_floor * (1.0 + 1e-6));
    double a_hi = std::min(cfg.a_hi, domain_ceil / cfg.ratio_lo);
    a_hi = std::max(a_hi, a_lo * (1.0 + 1e-9));
    const double a = rng.log_uniform(a_lo, a_hi);
    const double ratio_hi = std::max(cfg.ratio_lo, std::min(cfg.ratio_hi, domain_ceil / a));
    const double ratio = rng.log_uniform(cfg.ratio_lo, ratio_hi);
    const double b = a * ratio;

    const int slot = forced_slot >= 0 ? forced_slot : index % 10;
    const int cycle = index / 10;

    double alpha = rng.uniform(cfg.alpha_lo, cfg.alpha_hi);
    double lambda = rng.uniform01();
    if (slot == 5) alpha = kAlphaStrata[cycle % 3];
    if (slot == 4) lambda = kLambdaStrata[cycle % 4];
    if (slot <= 2) lambda = 0.2 + 0.6 * rng.uniform01();  // keep C interior

    GeometricInterval interval(a, b);
    IneqParams p{interval, alpha, lambda, interval.geometric_mid(), {}, {}};
    const double C = p.c_point();

    double x, y;
    switch (slot) {
        case 0:  // branch (1): C <= x <= y
            x = rng.log_uniform(C, b);
            y = rng.log_uniform(C, b);
            break;
        case 1:  // branch (2): x <= C <= y
            x = rng.log_uniform(a, C);
            y = rng.log_uniform(C, b);
            break;
        case 2:  // branch (3): x <= y <= C
            x = rng.log_uniform(a, C);
            y = rng.log_uniform(a, C);
            break;
        case 3:  // the most-featured specialization point
            p.lambda = kLambdaStrata[cycle % 4];
            p.alpha = kAlphaStrata[(cycle / 4) % 3];
            x = y = interval.geometric_mid();
            break;
        default:
            x = rng.log_uniform(a, b);
            y = rng.log_uniform(a, b);
            break;
    }
    if (x > y) std::swap(x, y);
    p.x = std::min(std::max(x, a), b);
    p.y = std::min(std::max(y, a), b);
    p.delta = 0.5 + 0.5 * rng.uniform01();
    return p;
}

double verdict_tolerance(const SampleConfig& cfg, double lhs, double rhs) {
    return cfg.abs_tol + cfg.rel_tol * std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
}

Verdict classify(const SampleConfig& cfg, double lhs, double rhs, double margin,
                 double quad_error) {
    if (margin >= -verdict_tolerance(cfg, lhs, rhs)) return Verdict::Pass;
    if (std::fabs(margin) <= quad_error) return Verdict::Inconclusive;
    return Verdict::Fail;
}

// One piece of the oracle: int u^{alpha-1} |p - s(u)| du over [lo, hi] with
// a sign change of p - s(u) at u_break (clamped into the range).
double oracle_piece(double alpha, double lo, double hi, double u_break,
                    const Integrand& g, const QuadConfig& cfg, double* err) {
    double total = 0.0;
    const double split = std::min(std::max(u_break, lo), hi);
    if (split > lo) {
        QuadResult q = integrate_power_kernel(g, lo, split, alpha, cfg);
        total += q.value;
        *err += q.error_estimate;
    }
    if (hi > split) {
        QuadResult q = integrate_power_kernel(g, split, hi, alpha, cfg);
        total += q.value;
        *err += q.error_estimate;
    }
    return total;
}

}  // namespace

void SampleConfig::validate() const {
    if (samples < 0) throw std::invalid_argument("SampleConfig: samples must be >= 0");
    if (!(a_lo > 0.0) || !(a_hi >= a_lo))
        throw std::invalid_argument("SampleConfig: bad a range");
    if (!(ratio_lo >= 1.0 + kMinRatioGap) || !(ratio_hi >= ratio_lo))
        throw std::invalid_argument("SampleConfig: bad ratio range");
    if (!(alpha_lo > 0.0) || !(alpha_hi >= alpha_lo))
        throw std::invalid_argument("SampleConfig: bad alpha range");
    if (per_branch_min < 0)
        throw std::invalid_argument("SampleConfig: per_branch_min must be >= 0");
    if (!(rhs_scale > 0.0))
        throw std::invalid_argument("SampleConfig: rhs_scale must be > 0");
    quad.validate();
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t CounterRng::next_u64() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

double CounterRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double CounterRng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

IneqParams sample_params(const SampleConfig& cfg, int index) {
    return sample_impl(cfg, index, 0.0, std::numeric_limits<double>::infinity(), -1);
}

IneqParams sample_params(const SampleConfig& cfg, int index, double domain_floor,
                         double domain_ceil) {
    return sample_impl(cfg, index, domain_floor, domain_ceil, -1);
}

IneqParams sample_params_branch_stratified(const SampleConfig& cfg, int index) {
    return sample_impl(cfg, index, 0.0, std::numeric_limits<double>::infinity(),
                       index % 3);
}

CheckResult check_inequality(const std::string& check_id, const FunctionSpec& spec,
                             const IneqParams& p, const SampleConfig& cfg) {
    p.validate();
    if (p.interval.a <= spec.domain_floor || p.interval.b > spec.domain_ceil)
        throw std::domain_error("check_inequality: interval outside the admissible domain of " +
                                spec.name);

    if (check_id == "hh") {
        // Two-sided ordering check; no Lipschitz constant involved and the
        // corruption fixture does not apply.
        const HhTriple t = hh_triple(spec, p.alpha, p.interval, cfg.quad);
        CheckResult r{check_id, spec.name, p,
                      t.left, t.right,
                      std::min(t.middle - t.left, t.right - t.middle),
                      t.quad_error, {}, Verdict::Pass};
        r.params.y.reset();
        r.params.delta.reset();
        r.verdict = classify(cfg, r.lhs, r.rhs, r.margin, r.quad_error);
        return r;
    }

    const auto variant = variant_from_id(check_id);
    if (!variant) throw std::invalid_argument("check_inequality: unknown check id '" + check_id + "'");

    const double M = spec.analytic_lipschitz ? spec.analytic_lipschitz(p.interval)
                                             : lipschitz_estimate(spec, p.interval);
    ClosedFormBound cf = closed_form_bound(*variant, M, p);
    CheckResult r{check_id, spec.name, cf.effective, 0.0, 0.0, 0.0, 0.0, cf.branch,
                  Verdict::Pass};
    try {
        const ValueWithError l = cf.lhs(spec, cfg.quad);
        r.lhs = l.value;
        r.rhs = cf.rhs * cfg.rhs_scale;
        r.quad_error = l.error + 1e-14 * std::fabs(r.rhs);
        r.margin = r.rhs - std::fabs(r.lhs);
        r.verdict = classify(cfg, r.lhs, r.rhs, r.margin, r.quad_error);
    } catch (const QuadratureError& e) {
        // Best estimate with an unbounded error: never a counterexample.
        r.lhs = e.best().value;
        r.rhs = cf.rhs * cfg.rhs_scale;
        r.quad_error = std::numeric_limits<double>::infinity();
        r.margin = r.rhs - std::fabs(r.lhs);
        r.verdict = Verdict::Inconclusive;
    }
    return r;
}

double oracle_c_alpha_lambda(const IneqParams& p, const QuadConfig& cfg) {
    p.validate();
    if (!p.y) throw std::invalid_argument("oracle_c_alpha_lambda: params must carry y");
    const double a = p.interval.a, b = p.interval.b;
    const double alpha = p.alpha, x = p.x, y = *p.y;
    const double C = p.c_point();

    double err = 0.0;
    double total = 0.0;
    // left piece: u = ln(t/a), integrand |x - a e^u|, kink at ln(x/a)
    const double len_left = std::log(C / a);
    if (len_left > 0.0) {
        total += oracle_piece(
            alpha, 0.0, len_left, std::log(x / a),
            [&](double u) { return std::fabs(x - a * std::exp(u)); }, cfg, &err);
    }
    // right piece: u = ln(b/t), integrand |y - b e^{-u}|, kink at ln(b/y)
    const double len_right = std::log(b / C);
    if (len_right > 0.0) {
        total += oracle_piece(
            alpha, 0.0, len_right, std::log(b / y),
            [&](double u) { return std::fabs(y - b * std::exp(-u)); }, cfg, &err);
    }
    return total;
}

const std::vector<std::string>& suite_check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& info : all_variants()) v.push_back(info.id);
        v.push_back("hh");
        return v;
    }();
    return ids;
}

SuiteReport run_suite(const SampleConfig& cfg,
                      const std::vector<FunctionSpec>& catalog,
                      const std::vector<std::string>& check_ids, int workers) {
    cfg.validate();
    SuiteReport report;
    report.cfg = cfg;

    struct Task {
        int check;
        int func;
        int index;
    };
    std::vector<Task> tasks;
    tasks.reserve(check_ids.size() * catalog.size() * static_cast<std::size_t>(cfg.samples));
    for (int c = 0; c < static_cast<int>(check_ids.size()); ++c)
        for (int f = 0; f < static_cast<int>(catalog.size()); ++f)
            for (int s = 0; s < cfg.samples; ++s) tasks.push_back({c, f, s});

    std::vector<std::optional<CheckResult>> results(tasks.size());
    std::vector<std::optional<double>> spec_devs(tasks.size());

    auto run_task = [&](std::size_t ti) {
        const Task& t = tasks[ti];
        const FunctionSpec& spec = catalog[t.func];
        const IneqParams p =
            sample_params(cfg, t.index, spec.domain_floor, spec.domain_ceil);
        const std::string& id = check_ids[t.check];
        if (id == "hh" && !ga_convex_check(spec, p.interval, 8).ga_convex) return;
        results[ti] = check_inequality(id, spec, p, cfg);
        // Sparse in-suite consistency audit of the bound lattice.
        if (id == "thm21" && t.func == 0 && t.index % 20 == 0)
            spec_devs[ti] = specialization_consistency_dev(p, 1.0);
    };

    int n_workers = workers > 0 ? workers
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1) n_workers = 1;
    n_workers = std::min<int>(n_workers, std::max<std::size_t>(tasks.size(), 1));

    if (n_workers == 1 || tasks.size() < 2) {
        for (std::size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr first_error;
        std::atomic<bool> errored{false};
        for (int w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t ti = next.fetch_add(1);
                    if (ti >= tasks.size() || errored.load()) break;
                    try {
                        run_task(ti);
                    } catch (...) {
                        if (!errored.exchange(true)) first_error = std::current_exception();
                        break;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    report.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        if (spec_devs[ti])
            report.specialization_max_dev =
                std::max(report.specialization_max_dev, *spec_devs[ti]);
        if (!results[ti]) continue;
        CheckResult& r = *results[ti];
        switch (r.verdict) {
            case Verdict::Pass: ++report.pass; break;
            case Verdict::Fail: ++report.fail; break;
            case Verdict::Inconclusive: ++report.inconclusive; break;
        }
        if (r.branch) ++report.branch_counts[to_string(*r.branch)];
        if (r.margin < report.worst_margin) {
            report.worst_margin = r.margin;
            report.worst_key = r.check_id + "/" + r.f_name;
        }
        if (r.verdict == Verdict::Fail) {
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "%s f=%s a=%.17g b=%.17g alpha=%.17g lambda=%.17g margin=%.3g",
                          r.check_id.c_str(), r.f_name.c_str(), r.params.interval.a,
                          r.params.interval.b, r.params.alpha, r.params.lambda, r.margin);
            report.failures.push_back(buf);
        }
        report.rows.push_back(std::move(r));
    }
    if (report.rows.empty()) report.worst_margin = 0.0;
    return report;
}

TightnessResult tightness_search(const std::string& check_id, const FunctionSpec& spec,
                                 int budget, double rhs_scale) {
    if (budget < 1) throw std::invalid_argument("tightness_search: budget must be >= 1");
    const auto variant = variant_from_id(check_id);
    if (!variant) throw std::invalid_argument("tightness_search: unknown check id '" + check_id + "'");
    const VariantInfo& info = variant_info(*variant);
    const SampleConfig cfg;  // default admissible ranges

    // Box coordinates, all in [0,1]: a, ratio, then the variant's free
    // parameters.  Positions map log-uniformly inside the admissible
    // ranges, with the function's domain clamps applied.
    enum { kA = 0, kRatio = 1 };
    std::vector<int> dims = {kA, kRatio};
    int d_alpha = -1, d_lambda = -1, d_x = -1, d_y = -1, d_delta = -1;
    auto add_dim = [&](int& slot) {
        slot = static_cast<int>(dims.size());
        dims.push_back(slot);
    };
    if (info.free_alpha) add_dim(d_alpha);
    if (info.free_lambda) add_dim(d_lambda);
    if (info.free_x) add_dim(d_x);
    if (info.free_y) add_dim(d_y);
    if (info.free_delta) add_dim(d_delta);

    const double a_floor = std::max(cfg.a_lo, spec.domain_floor * (1.0 + 1e-6));
    const double a_cap = std::max(a_floor * (1.0 + 1e-9),
                                  std::min(cfg.a_hi, spec.domain_ceil / cfg.ratio_lo));

    auto make_params = [&](const std::vector<double>& q) -> IneqParams {
        const double a = a_floor * std::pow(a_cap / a_floor, q[kA]);
        const double ratio_hi =
            std::max(cfg.ratio_lo, std::min(cfg.ratio_hi, spec.domain_ceil / a));
        const double ratio = cfg.ratio_lo * std::pow(ratio_hi / cfg.ratio_lo, q[kRatio]);
        GeometricInterval interval(a, a * ratio);
        IneqParams p{interval, 1.0, 0.5, interval.geometric_mid(), {}, {}};
        if (d_alpha >= 0) p.alpha = cfg.alpha_lo + (cfg.alpha_hi - cfg.alpha_lo) * q[d_alpha];
        if (d_lambda >= 0) p.lambda = q[d_lambda];
        if (d_x >= 0)
            p.x = interval.a * std::pow(interval.b / interval.a, q[d_x]);
        if (d_y >= 0) {
            // y between x and b so x <= y holds by construction
            p.y = p.x * std::pow(interval.b / p.x, q[d_y]);
        }
        if (d_delta >= 0) p.delta = 0.5 + 0.5 * q[d_delta];
        return p;
    };

    QuadConfig quad;
    int evals_left = budget;
    auto evaluate = [&](const std::vector<double>& q) -> double {
        if (evals_left <= 0) return -1.0;
        --evals_left;
        try {
            const IneqParams p = make_params(q);
            const double M = spec.analytic_lipschitz
                                 ? spec.analytic_lipschitz(p.interval)
                                 : lipschitz_estimate(spec, p.interval);
            ClosedFormBound cf = closed_form_bound(*variant, M, p);
            const double rhs = cf.rhs * rhs_scale;
            if (!(rhs > 1e-300)) return 0.0;
            const ValueWithError l = cf.lhs(spec, quad);
            return std::fabs(l.value) / rhs;
        } catch (const QuadratureError&) {
            return 0.0;
        } catch (const std::domain_error&) {
            return 0.0;
        }
    };

    CounterRng rng(0xA11CEull, 0x7157ull);
    std::vector<double> best_q(dims.size(), 0.5);
    double best = evaluate(best_q);

    const int starts = std::max(1, budget / 2);
    for (int s = 0; s < starts && evals_left > 0; ++s) {
        std::vector<double> q(dims.size());
        for (auto& qi : q) qi = rng.uniform01();
        const double r = evaluate(q);
        if (r > best) {
            best = r;
            best_q = q;
        }
    }

    // Coordinate-wise golden-section refinement around the incumbent.
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    while (evals_left > 12) {
        bool improved = false;
        for (std::size_t d = 0; d < dims.size() && evals_left > 12; ++d) {
            double lo = std::max(0.0, best_q[d] - 0.15);
            double hi = std::min(1.0, best_q[d] + 0.15);
            double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
            std::vector<double> q = best_q;
            q[d] = x1;
            double f1 = evaluate(q);
            q[d] = x2;
            double f2 = evaluate(q);
            for (int it = 0; it < 10 && evals_left > 0; ++it) {
                if (f1 < f2) {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + phi * (hi - lo);
                    q[d] = x2;
                    f2 = evaluate(q);
                } else {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - phi * (hi - lo);
                    q[d] = x1;
                    f1 = evaluate(q);
                }
            }
            const double cand = std::max(f1, f2);
            if (cand > best) {
                best = cand;
                best_q[d] = f1 > f2 ? x1 : x2;
                improved = true;
            }
        }
        if (!improved) break;
    }

    TightnessResult result;
    result.ratio = std::max(best, 0.0);
    result.argmax = make_params(best_q);
    result.counterexample_flag = result.ratio > 1.0 + 1e-8;
    return result;
}

}  // namespace fracineq
