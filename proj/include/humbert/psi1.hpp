#ifndef HUMBERT_PSI1_HPP
#define HUMBERT_PSI1_HPP

#include "humbert/quadrature.hpp"
#include "humbert/series.hpp"

namespace humbert {

// Parameters of Psi1[a, b; c, c'; x, y]. Domain flags for the five
// evaluation strategies are computed once at construction.
struct Psi1Params {
    cplx a, b, c, c_prime;

    bool kummer_ok = true;
    bool large_x_ok = false;  // a-b and a-c not integers
    bool near_unit_ok = false; // a+b-c not an integer
    bool integral_ok = false;  // Re c > Re b > 0
    bool asym_ok = false;      // large_x_ok and Re(c-b) > 0

    Psi1Params(cplx a_, cplx b_, cplx c_, cplx c_prime_);

    Psi1Params kummer_image() const { return Psi1Params(a, c - b, c, c_prime); }
};

// Evaluation point. Construction enforces the analytic-continuation region
// D_Psi1: x != 1 and |arg(1-x)| < pi (i.e. x not on the real ray [1, inf)).
struct Psi1Point {
    cplx x, y;
    Psi1Point(cplx x_, cplx y_);

    Psi1Point kummer_image() const { return Psi1Point(x / (x - 1.0), y / (1.0 - x)); }
};

// The regime of condition (3.1): gamma = |y/(1-x)| confined to user bounds.
struct AsymRegime {
    double gamma = 0.0;
    double gamma_lo = 0.0;
    double gamma_hi = 0.0;

    AsymRegime(const Psi1Point& pt, double lo, double hi);
    bool in_bounds() const { return gamma_lo <= gamma && gamma <= gamma_hi; }
};

// Defining double series, summed by anti-diagonals m+n = s; |x| < 1.
EvalResult psi1_double_series(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl);

// Single-series analytic continuation: sum_n (a)_n/(c')_n 2F1[a+n,b;c;x] y^n/n!.
EvalResult psi1_single_series(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl);

enum class Psi1Inner { double_series, single_series, near_unit, large_x, integral };

// (1-x)^{-a} Psi1[a, c-b; c, c'; x/(x-1), y/(1-x)], delegating to the tagged
// inner evaluator at the transformed point.
EvalResult psi1_kummer(const Psi1Params& p, const Psi1Point& pt, Psi1Inner inner,
                       const SeriesControl& ctrl);

// Euler-type integral representation (requires Re c > Re b > 0).
EvalResult psi1_integral(const Psi1Params& p, const Psi1Point& pt, double abs_tol);

// Two-series representation around x = 1 (requires a+b-c not an integer).
EvalResult psi1_near_unit(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl);

// Large-x representation f_c(b,a)(1-x)^{-a} V1 + f_c(a,b)(1-x)^{-b} V2
// (requires |x-1| > 1 and a-b, a-c not integers).
EvalResult psi1_large_x(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl);

// The V1/V2 pieces of the large-x representation, exposed for remainder
// diagnostics.
struct LargeXParts {
    LogScaled v1, v2;       // the two series
    LogScaled pref1, pref2; // f_c(b,a)(1-x)^{-a} and f_c(a,b)(1-x)^{-b}
};
LargeXParts psi1_large_x_parts(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl);

// Leading asymptotic approximant for x -> inf, y -> +inf with y/(1-x)
// bounded: Gamma(c)Gamma(c')/(Gamma(a)Gamma(c-b)) (y/(1-x))^b y^{a-2b-c'} e^y.
// y must be real and positive.
LogScaled psi1_leading_asym(const Psi1Params& p, const Psi1Point& pt);

struct Psi1AutoPolicy {
    double disk_radius = 0.75;      // |x| below this: double series
    double near_unit_radius = 0.75; // |x-1| below this: near-unit
    double large_x_radius = 1.5;    // |x-1| above this: large-x candidate
    double large_x_y_cap = 8.0;     // "moderate |y|" bound for the large-x route
    double series_y_cap = 64.0;     // |y| budget for the power-series routes
};

// Region-aware dispatcher; the result carries the method tag actually used.
EvalResult psi1_auto(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl,
                     const Psi1AutoPolicy& policy = {});

} // namespace humbert

#endif
