#include "humbert/pfq_asym.hpp"

#include <cfloat>
#include <cmath>

#include "humbert/errors.hpp"

namespace humbert {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogEps = std::log(DBL_EPSILON);
constexpr double kWarnTol = 1e-6;

cplx step(long k) { return cplx(double(k), 0.0); }

// Parameter differences like d-b drive terminating coefficients (d-b)_k;
// snap them to the exact integer when within the degeneracy threshold so
// termination is detected exactly despite IEEE rounding of the inputs.
cplx int_snapped(cplx v) {
    if (is_integer(v)) return cplx(std::round(v.real()), 0.0);
    return v;
}

void require_order(int order) {
    if (order < 1) throw hyp_error(errc::constraint_violation, "truncation order N >= 1");
}

} // namespace

const char* expansion_variant_name(ExpansionVariant v) {
    switch (v) {
        case ExpansionVariant::large_lambda:    return "LARGE_LAMBDA";
        case ExpansionVariant::minus_n:         return "MINUS_N";
        case ExpansionVariant::pfq_all_down:    return "PFQ_ALL_DOWN";
        case ExpansionVariant::pfp_one_down:    return "PFP_ONE_DOWN";
        case ExpansionVariant::f22_a_down:      return "F22_A_DOWN";
        case ExpansionVariant::f22_both_down:   return "F22_BOTH_DOWN";
        case ExpansionVariant::large_z_leading: return "LARGE_Z_LEADING";
    }
    return "UNKNOWN";
}

bool ExpansionRequest::integer_shift() const {
    return variant != ExpansionVariant::large_lambda &&
           variant != ExpansionVariant::large_z_leading;
}

ExpansionRequest::ExpansionRequest(int order_, double parameter_, ExpansionVariant variant_)
    : order(order_), parameter(parameter_), variant(variant_) {
    if (order < 1)
        throw hyp_error(errc::constraint_violation, "truncation order N >= 1");
    if (integer_shift() && (parameter < 1.0 || parameter != std::floor(parameter)))
        throw hyp_error(errc::constraint_violation,
                        "integer-shift variants need a positive integer parameter");
}

EvalResult f22_fields_series(cplx a, cplx b, cplx c, cplx d, cplx z, const SeriesControl& ctrl) {
    if (is_nonpos_integer(c) || is_nonpos_integer(d))
        throw hyp_error(errc::denominator_pole, "2F2 denominator parameter in Z_{<=0}");

    EvalResult res;
    res.method = Method::fields_series;

    LogScaled sum{};
    LogScaled coef = ls_one(); // (a)_k (d-b)_k / ((c)_k (d)_k) (-z)^k / k!
    double last_log = kNegInf, max_log = kNegInf, inner_err = kNegInf;
    int stag = 0;
    long nodes = 0;
    const double log_tol = std::log(ctrl.rel_tol);
    for (long k = 0;; ++k) {
        if (k > 0) {
            cplx f = (a + step(k - 1)) * (int_snapped(d - b) + step(k - 1)) * (-z) /
                     ((c + step(k - 1)) * (d + step(k - 1)) * double(k));
            coef = ls_mul(coef, f);
            if (ls_is_zero(coef)) break; // (d-b)_k terminated the series
        }
        EvalResult inner = f11(a + step(k), c + step(k), z, ctrl);
        nodes += inner.terms_or_nodes;
        if (nodes > ctrl.max_terms)
            throw hyp_error(errc::no_convergence, "Fields series hit max_terms");
        LogScaled term = ls_mul(coef, inner.value);
        sum = ls_add(sum, term);
        last_log = ls_log_abs(term);
        max_log = std::max(max_log, last_log);
        inner_err = log_add(inner_err, ls_log_abs(coef) + inner.log_abs_err);
        if (last_log < log_tol + ls_log_abs(sum)) {
            if (++stag >= ctrl.stagnation_window) break;
        } else {
            stag = 0;
        }
    }
    res.value = sum;
    res.terms_or_nodes = nodes;
    res.log_abs_err = log_add(log_add(last_log, kLogEps + max_log), inner_err);
    return res;
}

EvalResult pfp_luke_series(const std::vector<cplx>& num, const std::vector<cplx>& den, cplx b,
                           cplx d, cplx z, const SeriesControl& ctrl) {
    if (is_nonpos_integer(d))
        throw hyp_error(errc::denominator_pole, "Luke series needs d not in Z_{<=0}");
    for (cplx cj : den)
        if (is_nonpos_integer(cj))
            throw hyp_error(errc::denominator_pole, "Luke series denominator in Z_{<=0}");
    if (num.size() == den.size() + 1 && z.real() >= 0.5)
        throw hyp_error(errc::domain_violation, "p = q+1 Luke expansion needs Re z < 1/2");
    if (num.size() > den.size() + 1)
        throw hyp_error(errc::domain_violation, "p > q+1 not defined");

    EvalResult res;
    res.method = Method::luke_series;

    LogScaled sum{};
    LogScaled coef = ls_one();
    double last_log = kNegInf, max_log = kNegInf, inner_err = kNegInf;
    int stag = 0;
    long nodes = 0;
    const double log_tol = std::log(ctrl.rel_tol);
    std::vector<cplx> sn(num.size()), sd(den.size());
    for (long k = 0;; ++k) {
        if (k > 0) {
            cplx f = (int_snapped(d - b) + step(k - 1)) * (-z) / ((d + step(k - 1)) * double(k));
            for (cplx ai : num) f *= ai + step(k - 1);
            for (cplx cj : den) f /= cj + step(k - 1);
            coef = ls_mul(coef, f);
            if (ls_is_zero(coef)) break;
        }
        for (size_t i = 0; i < num.size(); ++i) sn[i] = num[i] + step(k);
        for (size_t i = 0; i < den.size(); ++i) sd[i] = den[i] + step(k);
        EvalResult inner = pfq_series(HypParams{sn, sd}, z, ctrl);
        nodes += inner.terms_or_nodes;
        if (nodes > ctrl.max_terms)
            throw hyp_error(errc::no_convergence, "Luke series hit max_terms");
        LogScaled term = ls_mul(coef, inner.value);
        sum = ls_add(sum, term);
        last_log = ls_log_abs(term);
        max_log = std::max(max_log, last_log);
        inner_err = log_add(inner_err, ls_log_abs(coef) + inner.log_abs_err);
        if (last_log < log_tol + ls_log_abs(sum)) {
            if (++stag >= ctrl.stagnation_window) break;
        } else {
            stag = 0;
        }
    }
    res.value = sum;
    res.terms_or_nodes = nodes;
    res.log_abs_err = log_add(log_add(last_log, kLogEps + max_log), inner_err);
    return res;
}

namespace {

// Common truncated-sum engine: value = scale * sum_{k<N} coef_k * inner(k),
// with coef given by its k -> k+1 ratio. Records the first omitted term and
// exact termination.
template <typename Ratio, typename Inner>
ExpansionResult truncated_expansion(int order, Ratio ratio, Inner inner, LogScaled scale) {
    ExpansionResult res;
    res.truncation_order = order;
    LogScaled sum{};
    LogScaled coef = ls_one();
    SeriesControl ctrl; // inner evaluations at default accuracy
    for (int k = 0; k < order; ++k) {
        if (k > 0) {
            coef = ls_mul(coef, ratio(k - 1));
            if (ls_is_zero(coef)) {
                res.exact = true;
                res.value = ls_mul(scale, sum);
                res.first_omitted_term = 0.0;
                return res;
            }
        }
        sum = ls_add(sum, ls_mul(coef, inner(k)));
    }
    coef = ls_mul(coef, ratio(order - 1));
    if (ls_is_zero(coef)) {
        res.exact = true;
        res.first_omitted_term = 0.0;
    } else {
        res.first_omitted_term = std::exp(ls_log_abs(ls_mul(coef, inner(order))));
    }
    res.value = ls_mul(scale, sum);
    return res;
}

} // namespace

ExpansionResult asym_f22_large_lambda(cplx a, cplx b, cplx c, cplx d, cplx z, cplx lambda,
                                      int order, double delta) {
    require_order(order);
    if (is_nonpos_integer(c))
        throw hyp_error(errc::denominator_pole, "c in Z_{<=0}");
    if (is_nonpos_integer(d + lambda))
        throw hyp_error(errc::denominator_pole, "d + lambda in Z_{<=0}");
    if (std::abs(std::arg(lambda + d)) > 3.14159265358979323846 - delta)
        throw hyp_error(errc::sector_violation, "lambda + d outside |arg| <= pi - delta");

    SeriesControl ctrl;
    ExpansionResult res = truncated_expansion(
        order,
        [&](long k) {
            return (a + step(k)) * (int_snapped(d - b) + step(k)) * (-z) /
                   ((c + step(k)) * (d + lambda + step(k)) * double(k + 1));
        },
        [&](long k) { return f11(a + step(k), c + step(k), z, ctrl).value; }, ls_one());
    res.degenerate_warning = is_near_integer(d - b, kWarnTol) && !is_integer(d - b);
    return res;
}

ExpansionResult asym_f22_minus_n(cplx a, cplx b, cplx c, cplx d, cplx z, long n, int order) {
    require_order(order);
    if (n < 1) throw hyp_error(errc::constraint_violation, "shift n must be a positive integer");
    if (is_nonpos_integer(c))
        throw hyp_error(errc::denominator_pole, "c in Z_{<=0}");
    if (is_integer(d))
        throw hyp_error(errc::integer_degeneracy, "d must not be an integer");

    // b-d in Z_{>=0} is the terminating case: (d-b)_k vanishes past k = b-d,
    // detected below as exact truncation.
    cplx bd = b - d;
    SeriesControl ctrl;
    ExpansionResult res = truncated_expansion(
        order,
        [&](long k) {
            return (a + step(k)) * (int_snapped(d - b) + step(k)) * (-z) /
                   ((c + step(k)) * (d - step(n) + step(k)) * double(k + 1));
        },
        [&](long k) { return f11(a + step(k), c + step(k), z, ctrl).value; }, ls_one());
    res.degenerate_warning = is_near_integer(d, kWarnTol) || (is_near_integer(bd, kWarnTol) && !is_integer(bd));
    return res;
}

ExpansionResult asym_pfq_all_down(const std::vector<cplx>& num_shift,
                                  const std::vector<cplx>& den_shift,
                                  const std::vector<cplx>& num_fix,
                                  const std::vector<cplx>& den_fix, cplx z, long n, int order) {
    require_order(order);
    if (n < 1) throw hyp_error(errc::constraint_violation, "shift n must be a positive integer");
    const size_t p = num_shift.size(), q = den_shift.size();
    const size_t r = num_fix.size(), s = den_fix.size();
    if (q < p + 1 || s + 1 < r)
        throw hyp_error(errc::shape_violation, "need q >= p+1 and s >= r-1");
    bool warn = false;
    for (cplx cj : den_shift) {
        if (is_integer(cj)) throw hyp_error(errc::integer_degeneracy, "shifted denominator in Z");
        warn = warn || is_near_integer(cj, kWarnTol);
    }
    for (cplx dj : den_fix)
        if (is_nonpos_integer(dj))
            throw hyp_error(errc::denominator_pole, "fixed denominator in Z_{<=0}");

    ExpansionResult res = truncated_expansion(
        order,
        [&](long k) {
            cplx f = z / double(k + 1);
            for (cplx ai : num_shift) f *= ai - step(n) + step(k);
            for (cplx bi : num_fix) f *= bi + step(k);
            for (cplx cj : den_shift) f /= cj - step(n) + step(k);
            for (cplx dj : den_fix) f /= dj + step(k);
            return f;
        },
        [&](long) { return ls_one(); }, ls_one());
    res.degenerate_warning = warn;
    return res;
}

ExpansionResult asym_pfp_one_down(const std::vector<cplx>& num, const std::vector<cplx>& den,
                                  cplx b, cplx d, cplx z, long n, int order) {
    require_order(order);
    if (n < 1) throw hyp_error(errc::constraint_violation, "shift n must be a positive integer");
    if (num.size() != den.size())
        throw hyp_error(errc::shape_violation, "need equally many shifted a's and c's");
    bool warn = false;
    for (cplx cj : den) {
        // enforced as the standard denominator condition; a positive-integer
        // c_j only sets the warning flag (see the module's open question)
        if (is_nonpos_integer(cj))
            throw hyp_error(errc::denominator_pole, "c_j in Z_{<=0}");
        warn = warn || is_integer(cj);
    }
    if (is_integer(b) || is_integer(d))
        throw hyp_error(errc::integer_degeneracy, "b, d must not be integers");

    SeriesControl ctrl;
    std::vector<cplx> sn(num.size()), sd(den.size());
    ExpansionResult res = truncated_expansion(
        order,
        [&](long k) {
            cplx f = (int_snapped(d - b) + step(k)) * (-z) /
                     ((d - step(n) + step(k)) * double(k + 1));
            for (cplx ai : num) f *= ai + step(k);
            for (cplx cj : den) f /= cj + step(k);
            return f;
        },
        [&](long k) {
            for (size_t i = 0; i < num.size(); ++i) sn[i] = num[i] + step(k);
            for (size_t i = 0; i < den.size(); ++i) sd[i] = den[i] + step(k);
            if (sn.empty()) return ls_from_log(z); // 0F0 = e^z
            return pfq_series(HypParams{sn, sd}, z, ctrl).value;
        },
        ls_one());
    res.degenerate_warning = warn;
    return res;
}

ExpansionResult asym_f22_a_down(cplx a, cplx b, cplx c, cplx d, cplx z, long n, int order) {
    require_order(order);
    if (n < 1) throw hyp_error(errc::constraint_violation, "shift n must be a positive integer");
    if (is_integer(c) || is_integer(d))
        throw hyp_error(errc::integer_degeneracy, "c, d must not be integers");

    ExpansionResult res = truncated_expansion(
        order,
        [&](long k) {
            return (a - step(n) + step(k)) * (b + step(k)) * z /
                   ((c - step(n) + step(k)) * (d - step(n) + step(k)) * double(k + 1));
        },
        [&](long) { return ls_one(); }, ls_one());
    res.degenerate_warning = is_near_integer(a, kWarnTol) || is_near_integer(b, kWarnTol);
    return res;
}

ExpansionResult asym_f22_both_down(cplx a, cplx b, cplx c, cplx d, cplx z, long n, int order) {
    require_order(order);
    if (n < 1) throw hyp_error(errc::constraint_violation, "shift n must be a positive integer");
    if (is_integer(a) || is_integer(b) || is_integer(c) || is_integer(d))
        throw hyp_error(errc::integer_degeneracy, "a, b, c, d must not be integers");

    // Inner factor is 1F1[c-a; c-n+k; -z]: the Kummer transform that produces
    // the e^z prefactor flips the 1F1 argument's sign.
    SeriesControl ctrl;
    return truncated_expansion(
        order,
        [&](long k) {
            return (a - step(n) + step(k)) * (int_snapped(d - b) + step(k)) * (-z) /
                   ((c - step(n) + step(k)) * (d - step(n) + step(k)) * double(k + 1));
        },
        [&](long k) { return f11(c - a, c - step(n) + step(k), -z, ctrl).value; },
        ls_from_log(z));
}

LogScaled asym_f22_large_z(cplx a, cplx b, cplx c, cplx d, long nu, cplx z) {
    if (std::abs(std::arg(z)) >= 1.5707963267948966)
        throw hyp_error(errc::sector_violation, "large-z leading term needs |arg z| < pi/2");
    if (is_nonpos_integer(a) || is_nonpos_integer(b + step(nu)) || is_nonpos_integer(c) ||
        is_nonpos_integer(d + step(nu)))
        throw hyp_error(errc::gamma_pole, "gamma prefactor pole or vanishing");
    cplx w = log_gamma(c) + log_gamma(d + step(nu)) - log_gamma(a) - log_gamma(b + step(nu)) +
             (a + b - c - d) * std::log(z) + z;
    return ls_from_log(w);
}

cplx pfq_series_ref(const std::vector<cplx>& num, const std::vector<cplx>& den, cplx z) {
    using lcplx = std::complex<long double>;
    for (cplx bj : den)
        if (is_nonpos_integer(bj))
            throw hyp_error(errc::denominator_pole, "pFq denominator parameter in Z_{<=0}");
    if (num.size() > den.size() + 1)
        throw hyp_error(errc::domain_violation, "p > q+1 diverges");

    lcplx zz(z.real(), z.imag());
    lcplx sum(1.0L, 0.0L), comp(0.0L, 0.0L), term(1.0L, 0.0L);
    int stag = 0;
    for (long k = 1; k <= 200000; ++k) {
        lcplx f = zz / (long double)k;
        for (cplx ai : num) f *= lcplx(ai.real() + (k - 1), ai.imag());
        for (cplx bj : den) f /= lcplx(bj.real() + (k - 1), bj.imag());
        term *= f;
        if (term == lcplx(0.0L, 0.0L)) break;
        // Kahan step
        lcplx t = term - comp;
        lcplx snew = sum + t;
        comp = (snew - sum) - t;
        sum = snew;
        if (std::abs(term) < 1e-22L * std::abs(sum)) {
            if (++stag >= 5) break;
        } else {
            stag = 0;
        }
        if (k == 200000)
            throw hyp_error(errc::no_convergence, "reference series hit max terms");
    }
    return cplx((double)sum.real(), (double)sum.imag());
}

} // namespace humbert
