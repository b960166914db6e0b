#pragma once

// Special means of two positive reals and the proposition checks that
// specialize the classical lambda-weighted bound to the catalog functions.

namespace fracineq {

// Arithmetic, geometric, harmonic, logarithmic and identric means.
// G is sqrt(ab); for 0 < a < b the classical chain H < G < L < I < A holds.
struct MeanSet {
    double A;
    double G;
    double H;
    double L;
    double I;
};

// All five means; a == b returns the common value for each (L and I by
// their limits).
MeanSet means_all(double a, double b);

enum class PropId { P31, P32, P33, P_LOG, P_XLOGX };

const char* to_string(PropId id);

struct PropCheck {
    PropId id;
    double lhs;
    double rhs;
    double margin;  // rhs - lhs
    bool pass;
};

// Evaluates one mean-inequality display: lhs and rhs exactly as printed.
// P31 needs n (integer >= 1 unless allow_real_n); P_XLOGX needs a > 1/e;
// P32 needs b small enough that e^b stays finite.
PropCheck prop_check(PropId id, double a, double b, double lambda,
                     double n = 1.0, bool allow_real_n = false);

struct RemarkChain {
    double lower;
    double mid;
    double upper;
};

// The two displayed mean chains (endpoint weights lambda = 0 and 1); the
// ordering lower <= mid <= upper is the test.  Defined for P31, P32, P33.
struct RemarkChains {
    RemarkChain lam0;
    RemarkChain lam1;
};

RemarkChains remark_chain(PropId id, double a, double b, double n = 1.0,
                          bool allow_real_n = false);

}  // namespace fracineq
