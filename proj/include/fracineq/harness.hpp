#pragma once

// Randomized-plus-stratified verification harness: deterministic parameter
// sampling, single-check evaluation with a three-valued verdict, the
// brute-force weight oracle, full-suite execution and tightness probing.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracineq/bounds.hpp"

namespace fracineq {

struct SampleConfig {
    std::uint64_t seed = 42;
    int samples = 1000;
    double a_lo = 0.05, a_hi = 50.0;
    double ratio_lo = 1.01, ratio_hi = 50.0;
    double alpha_lo = 0.2, alpha_hi = 3.0;
    int per_branch_min = 50;
    double abs_tol = 1e-8, rel_tol = 1e-8;
    QuadConfig quad;
    // Self-test fixture: scales every bound before the verdict; 0.5 turns
    // proven inequalities into detectable violations.
    double rhs_scale = 1.0;

    void validate() const;
};

// Deterministic counter RNG keyed by (seed, stream): draws are a pure
// function of the key, so parallel execution order never matters.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next_u64();
    double uniform01();                      // [0, 1)
    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

struct CheckResult {
    std::string check_id;
    std::string f_name;
    IneqParams params;  // effective parameters (pins applied)
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - |lhs|
    double quad_error = 0.0;
    std::optional<CaseBranch> branch;
    Verdict verdict = Verdict::Pass;
};

// Deterministic sample for (seed, index): a and b/a log-uniform, alpha and
// lambda uniform with forced strata, x <= y by construction, delta uniform
// in [1/2, 1].  Slots cycle through forced branch / midpoint / lambda /
// alpha strata so the measure-zero specializations are hit every run.
IneqParams sample_params(const SampleConfig& cfg, int index);

// Same, constrained to a function's admissible domain (a > floor, b <= ceil).
IneqParams sample_params(const SampleConfig& cfg, int index, double domain_floor,
                         double domain_ceil);

// Forces the two-point case branch = index % 3 (for oracle stratification).
IneqParams sample_params_branch_stratified(const SampleConfig& cfg, int index);

// Runs one inequality: check_id is a variant id or "hh".  M is the analytic
// Lipschitz constant when available, else the numeric estimate.
CheckResult check_inequality(const std::string& check_id, const FunctionSpec& spec,
                             const IneqParams& p, const SampleConfig& cfg);

// Brute-force int_a^C |x-t|/t (ln t/a)^{a-1} dt + int_C^b |y-t|/t (ln b/t)^{a-1} dt
// by adaptive quadrature with interior breakpoints at x and y; independent
// of the piecewise branch formulas it validates.
double oracle_c_alpha_lambda(const IneqParams& p, const QuadConfig& cfg = {});

// All check ids the suite runs, in report order (15 variants plus "hh").
const std::vector<std::string>& suite_check_ids();

struct SuiteReport {
    SampleConfig cfg;
    std::vector<CheckResult> rows;  // canonical (check, function, index) order
    long pass = 0;
    long fail = 0;
    long inconclusive = 0;
    std::map<std::string, long> branch_counts;
    double worst_margin = 0.0;
    std::string worst_key;
    double specialization_max_dev = 0.0;
    std::vector<std::string> failures;  // offending tuples, formatted

    bool failed() const { return fail > 0; }
};

// Executes check ids x catalog x samples; deterministic for a given config
// regardless of the worker count (0 = hardware concurrency).
SuiteReport run_suite(const SampleConfig& cfg,
                      const std::vector<FunctionSpec>& catalog,
                      const std::vector<std::string>& check_ids,
                      int workers = 0);

struct TightnessResult {
    double ratio = 0.0;  // sup |lhs| / rhs found
    std::optional<IneqParams> argmax;
    bool counterexample_flag = false;  // ratio exceeded 1 + tolerance
};

// Multi-start random search plus coordinate-wise golden-section refinement
// maximizing |lhs|/rhs over admissible parameters.  rhs_scale < 1 is the
// corrupted-bound self-test fixture.
TightnessResult tightness_search(const std::string& check_id, const FunctionSpec& spec,
                                 int budget, double rhs_scale = 1.0);

}  // namespace fracineq
