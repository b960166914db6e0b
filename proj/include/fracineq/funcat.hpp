#pragma once

// Catalog of test functions with derivatives, closed-form Lipschitz
// constants and GA-convexity attributes, plus numeric estimation of both.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace fracineq {

// Validated 0 < a < b pair, the domain of every inequality.  The minimum
// ratio gap guards the ln(b/a) divisions downstream.
struct GeometricInterval {
    double a;
    double b;

    GeometricInterval(double a_, double b_);

    double log_ratio() const { return std::log(b / a); }
    double geometric_mid() const { return std::sqrt(a * b); }
};

inline constexpr double kMinRatioGap = 1e-6;  // b >= a * (1 + gap)

struct FunctionSpec {
    std::string name;
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
    // sup |f'| over the interval in closed form; empty when unknown.
    std::function<double(const GeometricInterval&)> analytic_lipschitz;
    // Closed-form GA-convexity claim for an interval; empty when unknown.
    std::function<bool(const GeometricInterval&)> ga_convex_on;
    double domain_floor = 0.0;  // smallest admissible a (exclusive)
    double domain_ceil = std::numeric_limits<double>::infinity();
};

enum class Builtin { Const, Identity, Power, XExp, Recip, Log, XLog };

// Builds a catalog entry; Const and Power require the parameter.
FunctionSpec builtin(Builtin kind, std::optional<double> parameter = {});

// Parses "const:<c>" | "identity" | "power:<n>" | "xexp" | "recip" |
// "log" | "xlog" (the CLI function syntax).
FunctionSpec parse_function(const std::string& text);

// The default verification catalog.
std::vector<FunctionSpec> default_catalog();

// Numeric sup |f'| over the interval: 2048-point geometric grid plus
// golden-section refinement around the grid argmax.
double lipschitz_estimate(const FunctionSpec& spec, const GeometricInterval& interval);

struct GaConvexReport {
    bool ga_convex;
    double worst_slack;  // most negative t f(x) + (1-t) f(y) - f(x^t y^{1-t})
};

// Brute lattice check of f(x^t y^{1-t}) <= t f(x) + (1-t) f(y) over a
// grid_size^3 lattice (x, y geometric on the interval, t uniform on [0,1]).
GaConvexReport ga_convex_check(const FunctionSpec& spec,
                               const GeometricInterval& interval, int grid_size);

}  // namespace fracineq
