#include "humbert/series.hpp"

#include <cfloat>
#include <cmath>

#include "humbert/errors.hpp"

namespace humbert {

const char* method_name(Method m) {
    switch (m) {
        case Method::pfq_direct:           return "PFQ_SERIES";
        case Method::f11_direct:           return "F11_DIRECT";
        case Method::f11_asym:             return "F11_ASYM";
        case Method::f11_kummer_asym:      return "F11_KUMMER_ASYM";
        case Method::f21_direct:           return "F21_DIRECT";
        case Method::f21_pfaff:            return "F21_PFAFF";
        case Method::f21_connection:       return "F21_CONNECTION";
        case Method::f21_pfaff_connection: return "F21_PFAFF_CONNECTION";
        case Method::tanh_sinh:            return "TANH_SINH";
        case Method::double_series:        return "DOUBLE_SERIES";
        case Method::single_series:        return "SINGLE_SERIES";
        case Method::near_unit:            return "NEAR_UNIT";
        case Method::large_x:              return "LARGE_X";
        case Method::integral:             return "INTEGRAL";
        case Method::leading_asym:         return "LEADING_ASYM";
        case Method::kummer_double_series: return "KUMMER+DOUBLE_SERIES";
        case Method::kummer_single_series: return "KUMMER+SINGLE_SERIES";
        case Method::kummer_near_unit:     return "KUMMER+NEAR_UNIT";
        case Method::kummer_large_x:       return "KUMMER+LARGE_X";
        case Method::kummer_integral:      return "KUMMER+INTEGRAL";
        case Method::fields_series:        return "FIELDS_SERIES";
        case Method::luke_series:          return "LUKE_SERIES";
    }
    return "UNKNOWN";
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogEps = std::log(DBL_EPSILON);

} // namespace

EvalResult pfq_series(const HypParams& params, cplx z, const SeriesControl& ctrl) {
    const auto& num = params.numerator;
    const auto& den = params.denominator;
    if (num.size() > den.size() + 1)
        throw hyp_error(errc::domain_violation, "pFq with p > q+1 diverges for z != 0");
    for (cplx bj : den)
        if (is_nonpos_integer(bj))
            throw hyp_error(errc::denominator_pole, "pFq denominator parameter in Z_{<=0}");

    bool terminating = false;
    for (cplx ai : num)
        if (is_nonpos_integer(ai)) terminating = true;
    if (num.size() == den.size() + 1 && std::abs(z) >= 1.0 && !terminating)
        throw hyp_error(errc::outside_disk, "p = q+1 series needs |z| < 1");

    EvalResult res;
    res.method = Method::pfq_direct;

    LogScaled sum = ls_one();
    LogScaled term = ls_one();
    double last_term_log = kNegInf;
    double max_term_log = 0.0;
    int stag = 0;
    const double log_tol = std::log(ctrl.rel_tol);
    long k = 1;
    for (; k <= ctrl.max_terms; ++k) {
        cplx f = z / double(k);
        for (cplx ai : num) f *= ai + cplx(double(k - 1), 0.0);
        for (cplx bj : den) f /= bj + cplx(double(k - 1), 0.0);
        term = ls_mul(term, f);
        if (ls_is_zero(term)) {
            last_term_log = kNegInf; // series terminated exactly
            break;
        }
        sum = ls_add(sum, term);
        last_term_log = ls_log_abs(term);
        max_term_log = std::max(max_term_log, last_term_log);
        if (last_term_log < log_tol + ls_log_abs(sum)) {
            if (++stag >= ctrl.stagnation_window) break;
        } else {
            stag = 0;
        }
    }
    if (k > ctrl.max_terms)
        throw hyp_error(errc::no_convergence, "pFq series hit max_terms");

    res.value = sum;
    res.terms_or_nodes = k;
    // rounding floor grows like sqrt(#terms) (random-walk accumulation)
    res.log_abs_err =
        log_add(last_term_log, kLogEps + max_term_log + 0.5 * std::log(double(k)));
    res.converged = true;
    return res;
}

namespace {

// Optimally truncated large-z series Gamma(c)/Gamma(a) e^z z^{a-c}
// sum_k (c-a)_k (1-a)_k / (k! z^k); dominant branch, Re z > 0.
EvalResult f11_asym_series(cplx a, cplx c, cplx z, const SeriesControl& ctrl) {
    cplx s(1.0, 0.0);
    cplx term(1.0, 0.0);
    double prev = 1.0;
    double first_omitted = 0.0;
    bool exact = false;
    long k = 0;
    const long kmax = static_cast<long>(std::abs(z)) + 64;
    for (; k < kmax; ++k) {
        cplx next = term * (c - a + cplx(double(k), 0.0)) * (1.0 - a + cplx(double(k), 0.0)) /
                    (z * double(k + 1));
        if (next == cplx(0.0, 0.0)) {
            exact = true; // (1-a)_k or (c-a)_k vanished: terminating, exact
            break;
        }
        double an = std::abs(next);
        if (an >= prev) {
            first_omitted = an; // smallest term reached
            break;
        }
        term = next;
        s += term;
        prev = an;
        if (an < 1e-18 * std::abs(s)) {
            first_omitted = an;
            ++k;
            break;
        }
    }
    if (!exact && first_omitted == 0.0) first_omitted = prev; // budget exhausted

    EvalResult res;
    LogScaled pref = ls_from_log(log_gamma(c) - log_gamma(a) + z + (a - c) * std::log(z));
    res.value = ls_mul(pref, ls_from_complex(s));
    res.method = Method::f11_asym;
    res.terms_or_nodes = k + 1;
    if (exact || first_omitted == 0.0) {
        res.log_abs_err = kLogEps + ls_log_abs(res.value);
    } else {
        res.log_abs_err = ls_log_abs(pref) + std::log(first_omitted);
        double rel = first_omitted / std::abs(s);
        res.precision_loss = rel > ctrl.rel_tol;
        res.converged = !res.precision_loss;
    }
    return res;
}

} // namespace

EvalResult f11(cplx a, cplx c, cplx z, const SeriesControl& ctrl, double z_direct) {
    if (is_nonpos_integer(c))
        throw hyp_error(errc::denominator_pole, "1F1 denominator parameter in Z_{<=0}");
    if (is_nonpos_integer(a) || std::abs(z) <= z_direct) {
        EvalResult res = pfq_series(HypParams{{a}, {c}}, z, ctrl);
        res.method = Method::f11_direct;
        return res;
    }
    if (z.real() >= 0.0) return f11_asym_series(a, c, z, ctrl);
    if (is_nonpos_integer(c - a)) {
        // Kummer image is a polynomial: e^z 1F1[c-a; c; -z] exactly.
        EvalResult res = pfq_series(HypParams{{c - a}, {c}}, -z, ctrl);
        res.value = ls_mul(ls_from_log(z), res.value);
        res.log_abs_err += z.real();
        res.method = Method::f11_kummer_asym;
        return res;
    }
    EvalResult res = f11_asym_series(c - a, c, -z, ctrl);
    res.value = ls_mul(ls_from_log(z), res.value);
    res.log_abs_err += z.real();
    res.method = Method::f11_kummer_asym;
    return res;
}

EvalResult f21_connection(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctrl) {
    if (is_nonpos_integer(c))
        throw hyp_error(errc::denominator_pole, "2F1 denominator parameter in Z_{<=0}");
    cplx s = c - a - b;
    if (is_integer(s))
        throw hyp_error(errc::degenerate_connection, "c-a-b is an integer");
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw hyp_error(errc::branch_cut, "arg z = pi");
    cplx u = 1.0 - z;
    if (u == cplx(0.0, 0.0)) {
        // Gauss summation as the z -> 1 limit; finite only for Re s > 0.
        if (s.real() <= 0.0)
            throw hyp_error(errc::branch_cut, "2F1 diverges at z = 1 for Re(c-a-b) <= 0");
        EvalResult res;
        res.value = gamma_ratio({c, s}, {c - a, c - b});
        res.method = Method::f21_connection;
        res.log_abs_err = kLogEps + ls_log_abs(res.value);
        res.terms_or_nodes = 1;
        return res;
    }
    if (u.imag() == 0.0 && u.real() < 0.0)
        throw hyp_error(errc::branch_cut, "arg(1-z) = pi");
    if (std::abs(u) >= 1.0)
        throw hyp_error(errc::outside_domain, "connection series needs |1-z| < 1");

    EvalResult t1 = pfq_series(HypParams{{a, b}, {1.0 - s}}, u, ctrl);
    EvalResult t2 = pfq_series(HypParams{{c - b, c - a}, {1.0 + s}}, u, ctrl);
    LogScaled p1 = gamma_ratio({c, s}, {c - a, c - b});
    LogScaled p2 = ls_mul(gamma_ratio({c, -s}, {a, b}), ls_from_log(s * std::log(u)));
    LogScaled v1 = ls_mul(p1, t1.value);
    LogScaled v2 = ls_mul(p2, t2.value);

    EvalResult res;
    res.value = ls_add(v1, v2);
    res.method = Method::f21_connection;
    res.terms_or_nodes = t1.terms_or_nodes + t2.terms_or_nodes;
    double parts_err = log_add(ls_log_abs(p1) + t1.log_abs_err, ls_log_abs(p2) + t2.log_abs_err);
    double cancel = kLogEps + std::max(ls_log_abs(v1), ls_log_abs(v2));
    res.log_abs_err = log_add(parts_err, cancel);
    return res;
}

EvalResult f21(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctrl) {
    if (is_nonpos_integer(c))
        throw hyp_error(errc::denominator_pole, "2F1 denominator parameter in Z_{<=0}");
    if (z == cplx(0.0, 0.0)) {
        EvalResult res;
        res.value = ls_one();
        res.method = Method::f21_direct;
        res.log_abs_err = kNegInf;
        res.terms_or_nodes = 1;
        return res;
    }
    if (is_nonpos_integer(a) || is_nonpos_integer(b) || std::abs(z) <= 0.8) {
        EvalResult res = pfq_series(HypParams{{a, b}, {c}}, z, ctrl);
        res.method = Method::f21_direct;
        return res;
    }
    cplx w = z / (z - 1.0);
    LogScaled pfaff = ls_from_log(-a * std::log(1.0 - z));
    if (std::abs(w) <= 0.8) {
        EvalResult res = pfq_series(HypParams{{a, c - b}, {c}}, w, ctrl);
        res.value = ls_mul(pfaff, res.value);
        res.log_abs_err += ls_log_abs(pfaff);
        res.method = Method::f21_pfaff;
        return res;
    }
    if (std::abs(1.0 - z) <= 0.8 || z == cplx(1.0, 0.0)) {
        return f21_connection(a, b, c, z, ctrl);
    }
    if (std::abs(1.0 - w) <= 0.8) {
        EvalResult res = f21_connection(a, c - b, c, w, ctrl);
        res.value = ls_mul(pfaff, res.value);
        res.log_abs_err += ls_log_abs(pfaff);
        res.method = Method::f21_pfaff_connection;
        return res;
    }
    throw hyp_error(errc::outside_domain, "2F1 argument outside the evaluation policy regions");
}

double phi_stirling(double a, double x, const SeriesControl& ctrl) {
    if (!(x > 0.0))
        throw hyp_error(errc::constraint_violation, "phi_stirling needs x > 0");
    LogScaled term = ls_from_double(x); // k = 1 term
    LogScaled sum = term;
    int stag = 0;
    const double log_tol = std::log(ctrl.rel_tol);
    for (long k = 1; k < ctrl.max_terms; ++k) {
        double f = std::pow((k + 1.0) / k, a) * x / (k + 1.0);
        term = ls_mul(term, cplx(f, 0.0));
        sum = ls_add(sum, term);
        if (ls_log_abs(term) < log_tol + ls_log_abs(sum)) {
            if (++stag >= ctrl.stagnation_window) return ls_to_double(sum);
        } else {
            stag = 0;
        }
    }
    throw hyp_error(errc::no_convergence, "phi_stirling hit max_terms");
}

} // namespace humbert
