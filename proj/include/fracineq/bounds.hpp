#pragma once

// Right-hand-side bound formulas: the general one-point bound (thm21), the
// two-point bound with its three-case piecewise weight (thm22), and every
// closed-form specialization reachable from them.  Formulas are composed
// exactly as displayed, sourcing the two dt-integrals from numerics; no
// algebraic simplification, so transcription errors stay visible.

#include <functional>
#include <optional>
#include <vector>

#include "fracineq/hadamard.hpp"

namespace fracineq {

enum class CaseBranch {
    // ordering of (a, x, C, y, b) for the two-point weight
    C_LE_X,
    X_LE_C_LE_Y,
    Y_LE_C,
    // ordering of (lambda, 1-delta, delta) for the geometric-point corollary
    LAM_LE_1MD,
    MID,
    DELTA_LE_LAM,
};

const char* to_string(CaseBranch branch);

enum class BoundVariant {
    Thm21,
    Cor310,
    CorMidAlpha,
    Cor31,
    Cor320,
    Cor32,
    CorSimpsonFrac,
    Cor33,
    CorHalfFrac,
    Cor34,
    Cor35,
    Thm22,
    Cor21b,
    Cor21c,
    Cor21d,
};

// Which IneqParams fields a variant leaves free; everything else is pinned
// and computed internally (x = sqrt(ab), C, x = a^d b^{1-d}, ...).
struct VariantInfo {
    BoundVariant variant;
    const char* id;  // stable CLI string
    bool free_alpha;
    bool free_lambda;
    bool free_x;
    bool free_y;
    bool free_delta;
};

const std::vector<VariantInfo>& all_variants();
const VariantInfo& variant_info(BoundVariant v);
std::optional<BoundVariant> variant_from_id(const std::string& id);

// The general one-point bound:
// M { [(1-l)x - l a] ln^a(x/a) + a(2l-1) int_a^x (ln t/a)^{a-1} dt
//   + [l b - (1-l)x] ln^a(b/x) + a(1-2l) int_x^b (ln b/t)^{a-1} dt }.
double bound_thm21(double M, const IneqParams& p);

struct CAlphaLambda {
    double value;
    CaseBranch branch;
};

// The piecewise two-point weight C_{alpha,lambda}(x, y); branch selected by
// comparing x, y with C = a^{1-l} b^l, ties resolved to the lower-numbered
// case (the branch formulas agree on the boundaries).
CAlphaLambda c_alpha_lambda(const IneqParams& p);

// alpha * M * C_{alpha,lambda}(x,y) / ln^a(b/a).
double bound_thm22(double M, const IneqParams& p);

struct BranchValue {
    double value;
    CaseBranch branch;
};

// The three-case weight L(alpha, lambda, delta) of the geometric-point
// corollary, at x = a^d b^{1-d}, y = a^{1-d} b^d.
BranchValue delta_case_weight(double alpha, double lambda, double delta,
                              const GeometricInterval& interval);

struct ClosedFormBound {
    BoundVariant variant;
    double rhs;                          // the bound, >= 0 up to rounding
    std::optional<CaseBranch> branch;    // for the piecewise variants
    IneqParams effective;                // params actually used (pins applied)
    // Signed displayed left side; callers compare |lhs| against rhs.
    std::function<ValueWithError(const FunctionSpec&, const QuadConfig&)> lhs;
};

// Builds the displayed left-side evaluator and right-side bound for a
// variant.  p supplies the variant's free parameters; pinned ones are
// computed internally.
ClosedFormBound closed_form_bound(BoundVariant v, double M, const IneqParams& p);

// Max relative deviation over the corollary lattice at these parameters:
// every closed form against its parent bound at the pinned values,
// including the half-weight reductions of the two-point corollaries.
double specialization_consistency_dev(const IneqParams& p, double M);

}  // namespace fracineq
