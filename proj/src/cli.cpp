#include "fracineq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fracineq/means.hpp"
#include "fracineq/report.hpp"

namespace fracineq {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

int worker_count_from_env() {
    const char* raw = std::getenv("FRAC_INEQ_THREADS");
    if (!raw) return 0;
    const long n = std::strtol(raw, nullptr, 10);
    return n > 0 ? static_cast<int>(n) : 0;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Pass: return kExitPass;
        case Verdict::Fail: return kExitFail;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitFail;
}

std::string free_param_list(const VariantInfo& info) {
    std::string s = "a, b";
    if (info.free_alpha) s += ", alpha";
    if (info.free_lambda) s += ", lambda";
    if (info.free_x) s += ", x";
    if (info.free_y) s += ", y";
    if (info.free_delta) s += ", delta";
    return s;
}

struct CheckArgs {
    std::string ineq;
    std::string f = "identity";
    double a = 1.0, b = 2.0;
    double alpha = 1.0, lambda = 0.5, x = 0.0, y = 0.0, delta = 0.5;
    bool json = false;
    double tol_abs = 1e-8, tol_rel = 1e-8;
    CLI::Option *opt_alpha = nullptr, *opt_lambda = nullptr, *opt_x = nullptr,
                *opt_y = nullptr, *opt_delta = nullptr;
};

int cmd_check(const CheckArgs& in, std::ostream& out, std::ostream& err) {
    const bool is_hh = in.ineq == "hh";
    const auto variant = variant_from_id(in.ineq);
    if (!is_hh && !variant) {
        err << "check: unknown inequality id '" << in.ineq << "'\n";
        return kExitUsage;
    }

    // Reject flags a variant pins; the message names what it accepts.
    const VariantInfo hh_info{BoundVariant::Thm21, "hh", true, false, false, false, false};
    const VariantInfo& info = is_hh ? hh_info : variant_info(*variant);
    const struct {
        const char* flag;
        CLI::Option* opt;
        bool allowed;
    } gates[] = {{"--alpha", in.opt_alpha, info.free_alpha},
                 {"--lambda", in.opt_lambda, info.free_lambda},
                 {"--x", in.opt_x, info.free_x},
                 {"--y", in.opt_y, info.free_y},
                 {"--delta", in.opt_delta, info.free_delta}};
    for (const auto& g : gates) {
        if (g.opt->count() > 0 && !g.allowed) {
            err << "check: " << g.flag << " is not a free parameter of '" << in.ineq
                << "' (free: " << free_param_list(info) << ")\n";
            return kExitUsage;
        }
    }

    SampleConfig cfg;
    cfg.abs_tol = in.tol_abs;
    cfg.rel_tol = in.tol_rel;

    try {
        const FunctionSpec spec = parse_function(in.f);
        GeometricInterval interval(in.a, in.b);
        const double x = in.opt_x->count() ? in.x : interval.geometric_mid();
        IneqParams p{interval, in.alpha, in.lambda, x, {}, {}};
        if (info.free_y) p.y = in.opt_y->count() ? in.y : x;
        if (info.free_delta) p.delta = in.delta;

        const CheckResult r = check_inequality(in.ineq, spec, p, cfg);
        if (in.json) {
            out << json_object(r) << "\n";
        } else {
            out << kCsvHeader << "\n" << csv_row(r) << "\n";
            out << "verdict: " << to_string(r.verdict) << "  lhs=" << format_double(r.lhs)
                << " rhs=" << format_double(r.rhs) << " margin=" << format_double(r.margin)
                << "\n";
        }
        return verdict_exit(r.verdict);
    } catch (const std::exception& e) {
        err << "check: " << e.what() << "\n";
        return kExitUsage;
    }
}

struct SweepArgs {
    std::string ineq = "all";
    std::string f = "all";
    int samples = 100;
    std::uint64_t seed = 42;
    std::string out_path;
    bool json = false;
};

int cmd_sweep(const SweepArgs& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> check_ids;
    if (in.ineq == "all") {
        check_ids = suite_check_ids();
    } else if (in.ineq == "hh" || variant_from_id(in.ineq)) {
        check_ids.push_back(in.ineq);
    } else {
        err << "sweep: unknown inequality id '" << in.ineq << "'\n";
        return kExitUsage;
    }

    std::vector<FunctionSpec> catalog;
    try {
        if (in.f == "all") {
            catalog = default_catalog();
        } else {
            std::stringstream ss(in.f);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) catalog.push_back(parse_function(item));
        }
    } catch (const std::exception& e) {
        err << "sweep: " << e.what() << "\n";
        return kExitUsage;
    }
    if (catalog.empty()) {
        err << "sweep: empty function list\n";
        return kExitUsage;
    }

    SampleConfig cfg;
    cfg.samples = in.samples;
    cfg.seed = in.seed;

    SuiteReport report;
    try {
        report = run_suite(cfg, catalog, check_ids, worker_count_from_env());
    } catch (const std::exception& e) {
        err << "sweep: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ofstream file(in.out_path, std::ios::binary);
    if (!file) {
        err << "sweep: cannot open '" << in.out_path << "' for writing\n";
        return kExitIo;
    }
    if (in.json) {
        file << "[";
        for (std::size_t i = 0; i < report.rows.size(); ++i)
            file << (i ? ",\n " : "\n ") << json_object(report.rows[i]);
        file << "\n]\n";
    } else {
        write_csv(file, report);
    }
    file.close();
    if (!file) {
        err << "sweep: write to '" << in.out_path << "' failed\n";
        return kExitIo;
    }

    out << "sweep: " << report.rows.size() << " checks, pass=" << report.pass
        << " fail=" << report.fail << " inconclusive=" << report.inconclusive << "\n";
    if (!report.branch_counts.empty()) {
        out << "branch coverage:";
        for (const auto& [tag, count] : report.branch_counts)
            out << " " << tag << "=" << count;
        out << "\n";
    }
    out << "worst margin: " << format_double(report.worst_margin) << " ("
        << report.worst_key << ")\n";
    out << "lattice consistency max rel dev: "
        << format_double(report.specialization_max_dev) << "\n";
    for (const auto& f : report.failures) out << "FAIL " << f << "\n";
    return report.failed() ? kExitFail : kExitPass;
}

struct MeansArgs {
    double a = 1.0, b = 2.0;
    double lambda = 0.5;
    double n = 1.0;
    bool props = false;
};

int cmd_means(const MeansArgs& in, std::ostream& out, std::ostream& err) {
    MeanSet ms;
    try {
        ms = means_all(in.a, in.b);
    } catch (const std::exception& e) {
        err << "means: " << e.what() << "\n";
        return kExitUsage;
    }
    out << "a=" << format_double(in.a) << " b=" << format_double(in.b) << "\n";
    out << "A=" << format_double(ms.A) << " G=" << format_double(ms.G)
        << " H=" << format_double(ms.H) << " L=" << format_double(ms.L)
        << " I=" << format_double(ms.I) << "\n";
    if (!in.props) return kExitPass;

    for (const auto& note : discrepancy_notes()) out << note << "\n";
    bool any_fail = false;
    for (const PropId id :
         {PropId::P31, PropId::P32, PropId::P33, PropId::P_LOG, PropId::P_XLOGX}) {
        try {
            const PropCheck c = prop_check(id, in.a, in.b, in.lambda, in.n);
            out << to_string(id) << ": lhs=" << format_double(c.lhs)
                << " rhs=" << format_double(c.rhs)
                << " margin=" << format_double(c.margin) << " "
                << (c.pass ? "pass" : "fail") << "\n";
            any_fail = any_fail || !c.pass;
        } catch (const std::exception& e) {
            out << to_string(id) << ": skipped (" << e.what() << ")\n";
        }
        if (id == PropId::P31 || id == PropId::P32 || id == PropId::P33) {
            try {
                const RemarkChains rc = remark_chain(id, in.a, in.b, in.n);
                out << to_string(id) << " chain lam0: " << format_double(rc.lam0.lower)
                    << " <= " << format_double(rc.lam0.mid)
                    << " <= " << format_double(rc.lam0.upper) << "\n";
                out << to_string(id) << " chain lam1: " << format_double(rc.lam1.lower)
                    << " <= " << format_double(rc.lam1.mid)
                    << " <= " << format_double(rc.lam1.upper) << "\n";
            } catch (const std::exception& e) {
                out << to_string(id) << " chain: skipped (" << e.what() << ")\n";
            }
        }
    }
    return any_fail ? kExitFail : kExitPass;
}

struct OracleArgs {
    std::string target;
    int samples = 200;
    std::uint64_t seed = 3;
};

int cmd_oracle(const OracleArgs& in, std::ostream& out, std::ostream& err) {
    SampleConfig cfg;
    cfg.seed = in.seed;

    QuadConfig tight;
    tight.abs_tol = 1e-13;
    tight.rel_tol = 1e-12;
    tight.max_subdivisions = 5000;

    auto rel_dev = [](double u, double v) {
        const double denom = std::max({std::fabs(u), std::fabs(v), 1e-300});
        return std::fabs(u - v) / denom;
    };

    if (in.target == "c-alpha-lambda") {
        double max_dev = 0.0;
        std::map<std::string, long> branch_counts;
        for (int i = 0; i < in.samples; ++i) {
            const IneqParams p = sample_params_branch_stratified(cfg, i);
            const CAlphaLambda f = c_alpha_lambda(p);
            const double o = oracle_c_alpha_lambda(p, tight);
            max_dev = std::max(max_dev, rel_dev(f.value, o));
            ++branch_counts[to_string(f.branch)];
        }
        out << "c-alpha-lambda: max rel dev " << format_double(max_dev) << " over "
            << in.samples << " samples\n";
        out << "branch counts:";
        for (const auto& [tag, count] : branch_counts) out << " " << tag << "=" << count;
        out << "\n";
        return max_dev <= 1e-6 ? kExitPass : kExitFail;
    }
    if (in.target == "aux-integrals") {
        double max_dev = 0.0;
        for (int i = 0; i < in.samples; ++i) {
            CounterRng rng(cfg.seed, 0x0A0Bu + static_cast<std::uint64_t>(i));
            const double a = rng.log_uniform(cfg.a_lo, cfg.a_hi);
            const double b = a * rng.log_uniform(cfg.ratio_lo, cfg.ratio_hi);
            const double x = a * std::pow(b / a, rng.uniform01());
            const double alpha = rng.uniform(cfg.alpha_lo, cfg.alpha_hi);
            double ref_left, ref_right;
            if (alpha >= 1.0) {
                ref_left =
                    integrate_adaptive(
                        [&](double t) { return std::pow(std::log(t / a), alpha - 1.0); }, a,
                        x, tight)
                        .value;
                ref_right =
                    integrate_adaptive(
                        [&](double t) { return std::pow(std::log(b / t), alpha - 1.0); }, x,
                        b, tight)
                        .value;
            } else {
                ref_left = a * integrate_power_kernel([](double u) { return std::exp(u); },
                                                      0.0, std::log(x / a), alpha, tight)
                                   .value;
                ref_right = b * integrate_power_kernel([](double u) { return std::exp(-u); },
                                                       0.0, std::log(b / x), alpha, tight)
                                    .value;
            }
            max_dev = std::max(max_dev, rel_dev(aux_integral_left(a, x, alpha), ref_left));
            max_dev = std::max(max_dev, rel_dev(aux_integral_right(x, b, alpha), ref_right));
        }
        out << "aux-integrals: max rel dev " << format_double(max_dev) << " over "
            << in.samples << " samples\n";
        return max_dev <= 1e-9 ? kExitPass : kExitFail;
    }
    if (in.target == "alpha1-reduction") {
        double max_dev = 0.0;
        const std::vector<FunctionSpec> catalog = default_catalog();
        for (int i = 0; i < in.samples; ++i) {
            const FunctionSpec& f = catalog[static_cast<std::size_t>(i) % catalog.size()];
            const IneqParams p = sample_params(cfg, i, f.domain_floor, f.domain_ceil);
            const double a = p.interval.a, b = p.interval.b;
            const double jsum = gamma_fn(2.0) * (j_minus(f, 1.0, a, p.x, tight).value +
                                                 j_plus(f, 1.0, p.x, b, tight).value);
            const double direct =
                integrate_adaptive([&](double t) { return f.eval(t) / t; }, a, b, tight)
                    .value;
            max_dev = std::max(max_dev, rel_dev(jsum, direct));
        }
        out << "alpha1-reduction: max rel dev " << format_double(max_dev) << " over "
            << in.samples << " samples\n";
        return max_dev <= 1e-9 ? kExitPass : kExitFail;
    }
    err << "oracle: unknown target '" << in.target << "'\n";
    return kExitUsage;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical workbench for logarithmic-kernel fractional integral inequalities",
                 "fracineq"};
    app.require_subcommand(0, 1);

    CheckArgs ca;
    CLI::App* check = app.add_subcommand("check", "run one inequality check");
    check->add_option("--ineq", ca.ineq, "inequality id (thm21, thm22, cor-*, hh)")->required();
    check->add_option("--f", ca.f, "function, e.g. power:2, xexp, const:3")->required();
    check->add_option("--a", ca.a, "left endpoint")->required();
    check->add_option("--b", ca.b, "right endpoint")->required();
    ca.opt_alpha = check->add_option("--alpha", ca.alpha, "fractional order");
    ca.opt_lambda = check->add_option("--lambda", ca.lambda, "weight in [0,1]");
    ca.opt_x = check->add_option("--x", ca.x, "evaluation point");
    ca.opt_y = check->add_option("--y", ca.y, "second evaluation point");
    ca.opt_delta = check->add_option("--delta", ca.delta, "geometric-point parameter");
    check->add_flag("--json", ca.json, "emit a JSON object instead of text");
    check->add_option("--tol-abs", ca.tol_abs, "absolute verdict tolerance");
    check->add_option("--tol-rel", ca.tol_rel, "relative verdict tolerance");

    SweepArgs sa;
    CLI::App* sweep = app.add_subcommand("sweep", "seeded parameter sweep with CSV report");
    sweep->add_option("--ineq", sa.ineq, "inequality id or 'all'");
    sweep->add_option("--samples", sa.samples, "sample count")->check(CLI::NonNegativeNumber);
    sweep->add_option("--seed", sa.seed, "RNG seed");
    sweep->add_option("--out", sa.out_path, "CSV output path")->required();
    sweep->add_option("--f", sa.f, "comma-separated function list or 'all'");
    sweep->add_flag("--json", sa.json, "write a JSON array instead of CSV");

    MeansArgs ma;
    CLI::App* means = app.add_subcommand("means", "special means table and proposition checks");
    means->add_option("--a", ma.a, "left endpoint")->required();
    means->add_option("--b", ma.b, "right endpoint")->required();
    means->add_option("--lambda", ma.lambda, "weight in [0,1]");
    means->add_option("--n", ma.n, "exponent for the power proposition");
    means->add_flag("--props", ma.props, "also run the proposition checks and mean chains");

    OracleArgs oa;
    CLI::App* oracle = app.add_subcommand("oracle", "closed forms vs brute-force quadrature");
    oracle->add_option("--target", oa.target, "c-alpha-lambda | aux-integrals | alpha1-reduction")
        ->required();
    oracle->add_option("--samples", oa.samples, "sample count")->check(CLI::PositiveNumber);
    oracle->add_option("--seed", oa.seed, "RNG seed");

    std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed argv
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "fracineq: " << e.what() << "\n";
        return kExitUsage;
    }

    if (check->parsed()) return cmd_check(ca, out, err);
    if (sweep->parsed()) return cmd_sweep(sa, out, err);
    if (means->parsed()) return cmd_means(ma, out, err);
    if (oracle->parsed()) return cmd_oracle(oa, out, err);
    out << app.help();
    return kExitPass;
}

}  // namespace fracineq
