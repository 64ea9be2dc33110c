#ifndef HUMBERT_SERIES_HPP
#define HUMBERT_SERIES_HPP

#include <vector>

#include "humbert/gamma.hpp"
#include "humbert/log_scaled.hpp"

namespace humbert {

// Truncation policy shared by every series evaluator: stop only after
// `stagnation_window` consecutive terms fall below rel_tol * |partial sum|,
// which guards against alternating or lacunary term patterns.
struct SeriesControl {
    double rel_tol = 1e-13;
    long max_terms = 100000;
    int stagnation_window = 3;
};

enum class Method {
    pfq_direct,
    f11_direct,
    f11_asym,
    f11_kummer_asym,
    f21_direct,
    f21_pfaff,
    f21_connection,
    f21_pfaff_connection,
    tanh_sinh,
    double_series,
    single_series,
    near_unit,
    large_x,
    integral,
    leading_asym,
    kummer_double_series,
    kummer_single_series,
    kummer_near_unit,
    kummer_large_x,
    kummer_integral,
    fields_series,
    luke_series,
};

const char* method_name(Method m);

struct EvalResult {
    LogScaled value;
    // Natural log of the estimated absolute error (same log-scale convention
    // as the value itself); -inf when the result is exact to rounding.
    double log_abs_err = -std::numeric_limits<double>::infinity();
    long terms_or_nodes = 0;
    Method method = Method::pfq_direct;
    bool converged = true;
    bool precision_loss = false;

    double rel_err() const {
        if (ls_is_zero(value)) return std::exp(log_abs_err);
        return std::exp(log_abs_err - ls_log_abs(value));
    }
};

struct HypParams {
    std::vector<cplx> numerator;
    std::vector<cplx> denominator;
};

// Defining series of pFq. p <= q converges everywhere; p = q+1 needs |z| < 1
// unless a numerator parameter terminates the series. Accumulation is
// log-scaled throughout, so terms of size e^3000 are fine.
EvalResult pfq_series(const HypParams& params, cplx z, const SeriesControl& ctrl);

// Regime-switched 1F1: direct series for |z| <= z_direct, the large-z
// asymptotic series (optimally truncated) for Re z > 0 beyond that, and the
// Kummer transform e^z 1F1[c-a; c; -z] for large negative real part.
EvalResult f11(cplx a, cplx c, cplx z, const SeriesControl& ctrl, double z_direct = 300.0);

// 2F1 by the two-term connection formula in (1-z); s = c-a-b must not be an
// integer. Usable for |1-z| < 1 and as the z -> 1 limit when Re s > 0.
EvalResult f21_connection(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctrl);

// Domain-policy router for 2F1: direct series, Pfaff transform, connection
// formula, or Pfaff + connection, whichever region contains z.
EvalResult f21(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctrl);

// Phi_a(x) = sum_{k>=1} k^a x^k / k!  (x > 0).
double phi_stirling(double a, double x, const SeriesControl& ctrl);

} // namespace humbert

#endif
