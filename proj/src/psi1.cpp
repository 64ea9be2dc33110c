#include "humbert/psi1.hpp"

#include <cfloat>
#include <cmath>

#include "humbert/errors.hpp"

namespace humbert {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogEps = std::log(DBL_EPSILON);

EvalResult exact_one(Method m) {
    EvalResult res;
    res.value = ls_one();
    res.method = m;
    res.log_abs_err = kNegInf;
    res.terms_or_nodes = 1;
    return res;
}

bool at_origin(const Psi1Point& pt) {
    return pt.x == cplx(0.0, 0.0) && pt.y == cplx(0.0, 0.0);
}

} // namespace

Psi1Params::Psi1Params(cplx a_, cplx b_, cplx c_, cplx c_prime_)
    : a(a_), b(b_), c(c_), c_prime(c_prime_) {
    if (is_nonpos_integer(c) || is_nonpos_integer(c_prime))
        throw hyp_error(errc::denominator_pole, "Psi1 requires c, c' not in Z_{<=0}");
    large_x_ok = !is_integer(a - b) && !is_integer(a - c);
    near_unit_ok = !is_integer(a + b - c);
    integral_ok = c.real() > b.real() && b.real() > 0.0;
    asym_ok = large_x_ok && (c - b).real() > 0.0;
}

Psi1Point::Psi1Point(cplx x_, cplx y_) : x(x_), y(y_) {
    if (x.imag() == 0.0 && x.real() >= 1.0)
        throw hyp_error(errc::branch_cut, "x on [1, inf) is outside D_Psi1");
}

AsymRegime::AsymRegime(const Psi1Point& pt, double lo, double hi)
    : gamma(std::abs(pt.y / (1.0 - pt.x))), gamma_lo(lo), gamma_hi(hi) {
    if (!(lo > 0.0) || !(hi >= lo))
        throw hyp_error(errc::constraint_violation, "need 0 < gamma_lo <= gamma_hi");
}

EvalResult psi1_double_series(const Psi1Params& p, const Psi1Point& pt,
                              const SeriesControl& ctrl) {
    if (std::abs(pt.x) >= 1.0)
        throw hyp_error(errc::outside_domain, "double series needs |x| < 1");
    if (at_origin(pt)) return exact_one(Method::double_series);
    if (pt.y == cplx(0.0, 0.0)) {
        EvalResult res = pfq_series(HypParams{{p.a, p.b}, {p.c}}, pt.x, ctrl);
        res.method = Method::double_series;
        return res;
    }
    if (pt.x == cplx(0.0, 0.0)) {
        EvalResult res = pfq_series(HypParams{{p.a}, {p.c_prime}}, pt.y, ctrl);
        res.method = Method::double_series;
        return res;
    }

    EvalResult res;
    res.method = Method::double_series;

    LogScaled total = ls_one(); // s = 0 diagonal
    // base_s = (a)_s y^s / ((c')_s s!), the m = 0 term of diagonal s
    LogScaled base = ls_one();
    double last_log = kNegInf, max_log = 0.0;
    int stag = 0;
    long terms_used = 1;
    const double log_tol = std::log(ctrl.rel_tol);
    for (long s = 1;; ++s) {
        base = ls_mul(base, (p.a + cplx(double(s - 1), 0.0)) * pt.y /
                                ((p.c_prime + cplx(double(s - 1), 0.0)) * double(s)));
        LogScaled diag = base;
        LogScaled t = base;
        max_log = std::max(max_log, ls_log_abs(base));
        for (long m = 0; m < s; ++m) {
            // m -> m+1 along the diagonal m + n = s
            cplx f = (p.b + cplx(double(m), 0.0)) * pt.x /
                     ((p.c + cplx(double(m), 0.0)) * double(m + 1));
            f *= (p.c_prime + cplx(double(s - m - 1), 0.0)) * double(s - m) / pt.y;
            t = ls_mul(t, f);
            diag = ls_add(diag, t);
            max_log = std::max(max_log, ls_log_abs(t)); // intra-diagonal cancellation
        }
        terms_used += s + 1;
        if (terms_used > ctrl.max_terms)
            throw hyp_error(errc::no_convergence, "Psi1 double series hit max_terms");
        total = ls_add(total, diag);
        last_log = ls_log_abs(diag);
        max_log = std::max(max_log, last_log);
        if (last_log < log_tol + ls_log_abs(total)) {
            if (++stag >= ctrl.stagnation_window) break;
        } else {
            stag = 0;
        }
    }
    res.value = total;
    res.terms_or_nodes = terms_used;
    res.log_abs_err =
        log_add(last_log, kLogEps + max_log + 0.5 * std::log(double(terms_used)));
    return res;
}

EvalResult psi1_single_series(const Psi1Params& p, const Psi1Point& pt,
                              const SeriesControl& ctrl) {
    if (at_origin(pt)) return exact_one(Method::single_series);

    EvalResult res;
    res.method = Method::single_series;

    LogScaled total{};
    LogScaled coef = ls_one(); // (a)_n y^n / ((c')_n n!)
    double last_log = kNegInf, max_log = kNegInf, inner_err = kNegInf;
    int stag = 0;
    long nodes = 0;
    const double log_tol = std::log(ctrl.rel_tol);
    for (long n = 0;; ++n) {
        if (n > 0) {
            if (pt.y == cplx(0.0, 0.0)) {
                last_log = kNegInf; // every further term is exactly zero
                break;
            }
            coef = ls_mul(coef, (p.a + cplx(double(n - 1), 0.0)) * pt.y /
                                    ((p.c_prime + cplx(double(n - 1), 0.0)) * double(n)));
        }
        EvalResult inner = f21(p.a + cplx(double(n), 0.0), p.b, p.c, pt.x, ctrl);
        nodes += inner.terms_or_nodes;
        if (nodes > ctrl.max_terms)
            throw hyp_error(errc::no_convergence, "Psi1 single series hit max_terms");
        LogScaled term = ls_mul(coef, inner.value);
        total = ls_add(total, term);
        last_log = ls_log_abs(term);
        max_log = std::max(max_log, last_log);
        inner_err = log_add(inner_err, ls_log_abs(coef) + inner.log_abs_err);
        if (last_log < log_tol + ls_log_abs(total)) {
            if (++stag >= ctrl.stagnation_window) break;
        } else {
            stag = 0;
        }
    }
    res.value = total;
    res.terms_or_nodes = nodes;
    res.log_abs_err = log_add(log_add(last_log, kLogEps + max_log), inner_err);
    return res;
}

EvalResult psi1_kummer(const Psi1Params& p, const Psi1Point& pt, Psi1Inner inner,
                       const SeriesControl& ctrl) {
    Psi1Params pk = p.kummer_image();
    Psi1Point ptk = pt.kummer_image();
    LogScaled pref = ls_from_log(-p.a * std::log(1.0 - pt.x));

    EvalResult res;
    switch (inner) {
        case Psi1Inner::double_series:
            res = psi1_double_series(pk, ptk, ctrl);
            res.method = Method::kummer_double_series;
            break;
        case Psi1Inner::single_series:
            res = psi1_single_series(pk, ptk, ctrl);
            res.method = Method::kummer_single_series;
            break;
        case Psi1Inner::near_unit:
            res = psi1_near_unit(pk, ptk, ctrl);
            res.method = Method::kummer_near_unit;
            break;
        case Psi1Inner::large_x:
            res = psi1_large_x(pk, ptk, ctrl);
            res.method = Method::kummer_large_x;
            break;
        case Psi1Inner::integral:
            res = psi1_integral(pk, ptk, ctrl.rel_tol * 100.0);
            res.method = Method::kummer_integral;
            break;
    }
    res.value = ls_mul(pref, res.value);
    res.log_abs_err += ls_log_abs(pref);
    return res;
}

EvalResult psi1_integral(const Psi1Params& p, const Psi1Point& pt, double abs_tol) {
    if (!p.integral_ok)
        throw hyp_error(errc::constraint_violation, "integral route needs Re c > Re b > 0");
    if (at_origin(pt)) return exact_one(Method::integral);

    const cplx a = p.a, b = p.b, c = p.c, cp = p.c_prime;
    const cplx x = pt.x, y = pt.y;
    SeriesControl inner_ctrl;
    inner_ctrl.rel_tol = std::min(1e-13, abs_tol * 1e-2);

    auto integrand = [&](double t, double omt) -> LogScaled {
        cplx base = 1.0 - x * t;
        cplx w = y / base;
        LogScaled alg = ls_from_log((b - 1.0) * std::log(t) + (c - b - 1.0) * std::log(omt) -
                                    a * std::log(base));
        if (w == cplx(0.0, 0.0)) return alg;
        return ls_mul(alg, f11(a, cp, w, inner_ctrl).value);
    };

    EvalResult res = tanh_sinh_integrate(integrand, abs_tol);
    LogScaled pref = gamma_ratio({c}, {b, c - b});
    res.value = ls_mul(pref, res.value);
    res.log_abs_err += ls_log_abs(pref);
    res.method = Method::integral;
    return res;
}

namespace {

// Shared engine for the near-unit and large-x double sums: both are
// sum_n coef_n * 2F2[...](z_n) * u_pow^n / n! with simple coefficient ratios.
struct OuterSeries {
    LogScaled sum{};
    double last_log = kNegInf;
    double max_log = kNegInf;
    double inner_err = kNegInf;
    long terms = 0;
};

template <typename CoefRatio, typename InnerEval>
OuterSeries sum_outer(const SeriesControl& ctrl, CoefRatio ratio, InnerEval inner_eval) {
    OuterSeries s;
    LogScaled coef = ls_one();
    int stag = 0;
    const double log_tol = std::log(ctrl.rel_tol);
    for (long n = 0;; ++n) {
        if (n > 0) coef = ls_mul(coef, ratio(n - 1));
        EvalResult inner = inner_eval(n);
        s.terms += inner.terms_or_nodes;
        if (s.terms > ctrl.max_terms)
            throw hyp_error(errc::no_convergence, "outer series hit max_terms");
        LogScaled term = ls_mul(coef, inner.value);
        s.sum = ls_add(s.sum, term);
        s.last_log = ls_log_abs(term);
        s.max_log = std::max(s.max_log, s.last_log);
        s.inner_err = log_add(s.inner_err, ls_log_abs(coef) + inner.log_abs_err);
        if (s.last_log < log_tol + ls_log_abs(s.sum)) {
            if (++stag >= ctrl.stagnation_window) break;
        } else {
            stag = 0;
        }
    }
    return s;
}

double outer_err(const OuterSeries& s) {
    return log_add(log_add(s.last_log, kLogEps + s.max_log), s.inner_err);
}

} // namespace

EvalResult psi1_near_unit(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl) {
    if (!p.near_unit_ok)
        throw hyp_error(errc::degenerate_case,
                        "a+b-c is an integer (logarithmic connection case is out of scope)");
    const cplx u = 1.0 - pt.x;
    if (std::abs(u) >= 1.0)
        throw hyp_error(errc::outside_domain, "near-unit expansion needs |x-1| < 1");

    const cplx a = p.a, b = p.b, c = p.c, cp = p.c_prime;
    const cplx y = pt.y;

    OuterSeries s1 = sum_outer(
        ctrl,
        [&](long n) {
            return (a + cplx(double(n), 0.0)) * (b + cplx(double(n), 0.0)) * u /
                   ((a + b - c + 1.0 + cplx(double(n), 0.0)) * double(n + 1));
        },
        [&](long n) {
            cplx nn(double(n), 0.0);
            return pfq_series(HypParams{{a - c + 1.0, a + nn}, {cp, a + b - c + 1.0 + nn}}, y,
                              ctrl);
        });

    OuterSeries s2 = sum_outer(
        ctrl,
        [&](long n) {
            return (c - a + cplx(double(n), 0.0)) * (c - b + cplx(double(n), 0.0)) * u /
                   ((c - a - b + 1.0 + cplx(double(n), 0.0)) * double(n + 1));
        },
        [&](long n) {
            cplx nn(double(n), 0.0);
            return pfq_series(HypParams{{a - c + 1.0, a + b - c - nn}, {cp, a - c + 1.0 - nn}},
                              y / u, ctrl);
        });

    LogScaled c1 = gamma_ratio({c, c - a - b}, {c - a, c - b});
    LogScaled c2 = ls_mul(gamma_ratio({c, a + b - c}, {a, b}),
                          ls_from_log((c - a - b) * std::log(u)));
    LogScaled v1 = ls_mul(c1, s1.sum);
    LogScaled v2 = ls_mul(c2, s2.sum);

    EvalResult res;
    res.value = ls_add(v1, v2);
    res.method = Method::near_unit;
    res.terms_or_nodes = s1.terms + s2.terms;
    double parts = log_add(ls_log_abs(c1) + outer_err(s1), ls_log_abs(c2) + outer_err(s2));
    res.log_abs_err = log_add(parts, kLogEps + std::max(ls_log_abs(v1), ls_log_abs(v2)));
    return res;
}

namespace {

struct LargeXState {
    OuterSeries s1, s2;
    LogScaled pref1, pref2;
};

LargeXState large_x_compute(const Psi1Params& p, const Psi1Point& pt,
                            const SeriesControl& ctrl) {
    if (!p.large_x_ok)
        throw hyp_error(errc::degenerate_case,
                        "a-b or a-c is an integer (degenerate large-x case is out of scope)");
    const cplx u = 1.0 - pt.x;
    if (std::abs(u) <= 1.0)
        throw hyp_error(errc::outside_domain, "large-x representation needs |x-1| > 1");

    const cplx a = p.a, b = p.b, c = p.c, cp = p.c_prime;
    const cplx y = pt.y;

    LargeXState st;
    st.s1 = sum_outer(
        ctrl,
        [&](long n) {
            return (a + cplx(double(n), 0.0)) * (c - b + cplx(double(n), 0.0)) /
                   ((a - b + 1.0 + cplx(double(n), 0.0)) * double(n + 1) * u);
        },
        [&](long n) {
            cplx nn(double(n), 0.0);
            return pfq_series(HypParams{{a - c + 1.0, a + nn}, {cp, a - b + 1.0 + nn}}, y / u,
                              ctrl);
        });
    st.s2 = sum_outer(
        ctrl,
        [&](long n) {
            return (b + cplx(double(n), 0.0)) * (c - a + cplx(double(n), 0.0)) /
                   ((b - a + 1.0 + cplx(double(n), 0.0)) * double(n + 1) * u);
        },
        [&](long n) {
            cplx nn(double(n), 0.0);
            return pfq_series(HypParams{{a - c + 1.0, a - b - nn}, {cp, a - c + 1.0 - nn}}, y,
                              ctrl);
        });
    st.pref1 = ls_mul(gamma_ratio({c, b - a}, {b, c - a}), ls_from_log(-a * std::log(u)));
    st.pref2 = ls_mul(gamma_ratio({c, a - b}, {a, c - b}), ls_from_log(-b * std::log(u)));
    return st;
}

} // namespace

LargeXParts psi1_large_x_parts(const Psi1Params& p, const Psi1Point& pt,
                               const SeriesControl& ctrl) {
    LargeXState st = large_x_compute(p, pt, ctrl);
    return LargeXParts{st.s1.sum, st.s2.sum, st.pref1, st.pref2};
}

EvalResult psi1_large_x(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl) {
    LargeXState st = large_x_compute(p, pt, ctrl);
    LogScaled t1 = ls_mul(st.pref1, st.s1.sum);
    LogScaled t2 = ls_mul(st.pref2, st.s2.sum);

    EvalResult res;
    res.value = ls_add(t1, t2);
    res.method = Method::large_x;
    res.terms_or_nodes = st.s1.terms + st.s2.terms;
    double parts = log_add(ls_log_abs(st.pref1) + outer_err(st.s1),
                           ls_log_abs(st.pref2) + outer_err(st.s2));
    res.log_abs_err = log_add(parts, kLogEps + std::max(ls_log_abs(t1), ls_log_abs(t2)));
    return res;
}

LogScaled psi1_leading_asym(const Psi1Params& p, const Psi1Point& pt) {
    if (!p.asym_ok)
        throw hyp_error(errc::constraint_violation,
                        "leading asymptotics need a-b, a-c not integers and Re(c-b) > 0");
    if (pt.y.imag() != 0.0 || pt.y.real() <= 0.0)
        throw hyp_error(errc::constraint_violation,
                        "condition (3.1) takes y real and positive");
    const cplx a = p.a, b = p.b, c = p.c, cp = p.c_prime;
    cplx w = log_gamma(c) + log_gamma(cp) - log_gamma(a) - log_gamma(c - b) +
             b * std::log(pt.y / (1.0 - pt.x)) + (a - 2.0 * b - cp) * std::log(pt.y.real()) +
             pt.y;
    return ls_from_log(w);
}

EvalResult psi1_auto(const Psi1Params& p, const Psi1Point& pt, const SeriesControl& ctrl,
                     const Psi1AutoPolicy& policy) {
    const double ax = std::abs(pt.x);
    const double axm1 = std::abs(pt.x - 1.0);
    const double ay = std::abs(pt.y);

    if (ax < policy.disk_radius && ay <= policy.series_y_cap)
        return psi1_double_series(p, pt, ctrl);
    if (axm1 < policy.near_unit_radius && p.near_unit_ok && ay <= policy.series_y_cap)
        return psi1_near_unit(p, pt, ctrl);
    if (axm1 > policy.large_x_radius && p.large_x_ok && ay <= policy.large_x_y_cap)
        return psi1_large_x(p, pt, ctrl);
    if (p.integral_ok) return psi1_integral(p, pt, std::max(ctrl.rel_tol * 100.0, 1e-12));
    try {
        return psi1_single_series(p, pt, ctrl);
    } catch (const hyp_error& e) {
        if (e.code() == errc::no_convergence) throw;
        throw hyp_error(errc::no_applicable_method,
                        std::string("every route failed; single series reported ") + e.what());
    }
}

} // namespace humbert
