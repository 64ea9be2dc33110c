#ifndef HUMBERT_LOG_SCALED_HPP
#define HUMBERT_LOG_SCALED_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace humbert {

using cplx = std::complex<double>;

// Complex value stored as mantissa * e^exponent, so quantities on the scale
// of e^1000 (and their products and sums) stay representable in ordinary
// doubles. Canonical (normalized) form: 1 <= |mantissa| < e, or the exact
// zero (0, 0). Values straight from ls_from_complex carry exponent 0 and are
// not yet normalized; every arithmetic op returns a normalized result.
struct LogScaled {
    cplx mantissa{0.0, 0.0};
    double exponent = 0.0;
};

inline bool ls_is_zero(const LogScaled& v) {
    return v.mantissa == cplx(0.0, 0.0);
}

inline bool ls_is_finite(const LogScaled& v) {
    return std::isfinite(v.mantissa.real()) && std::isfinite(v.mantissa.imag()) &&
           std::isfinite(v.exponent);
}

inline LogScaled ls_normalize(LogScaled v) {
    if (ls_is_zero(v)) return LogScaled{};
    double m = std::abs(v.mantissa);
    if (m >= 1.0 && m < 2.718281828459045) return v;
    double k = std::floor(std::log(m));
    v.mantissa *= std::exp(-k);
    v.exponent += k;
    m = std::abs(v.mantissa);
    if (m < 1.0) {
        v.mantissa *= 2.718281828459045;
        v.exponent -= 1.0;
    } else if (m >= 2.718281828459045) {
        v.mantissa *= 0.36787944117144233;
        v.exponent += 1.0;
    }
    return v;
}

// Exponent 0 keeps the round-trip through ls_to_complex bit-exact.
inline LogScaled ls_from_complex(cplx v) { return LogScaled{v, 0.0}; }
inline LogScaled ls_from_double(double v) { return LogScaled{cplx(v, 0.0), 0.0}; }
inline LogScaled ls_one() { return LogScaled{cplx(1.0, 0.0), 0.0}; }

// value = exp(w) for a complex log w (the principal-log convention is the
// caller's; 2*pi*i offsets change nothing after exponentiation).
inline LogScaled ls_from_log(cplx w) {
    return ls_normalize(LogScaled{std::polar(1.0, w.imag()), w.real()});
}

inline cplx ls_to_complex(const LogScaled& v) {
    if (v.exponent == 0.0) return v.mantissa;
    return v.mantissa * std::exp(v.exponent);
}

inline double ls_to_double(const LogScaled& v) { return ls_to_complex(v).real(); }

// log|value|; -inf for the canonical zero.
inline double ls_log_abs(const LogScaled& v) {
    if (ls_is_zero(v)) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(v.mantissa)) + v.exponent;
}

inline double ls_arg(const LogScaled& v) { return std::arg(v.mantissa); }

inline LogScaled ls_mul(LogScaled u, LogScaled v) {
    if (ls_is_zero(u) || ls_is_zero(v)) return LogScaled{};
    u = ls_normalize(u);
    v = ls_normalize(v);
    return ls_normalize(LogScaled{u.mantissa * v.mantissa, u.exponent + v.exponent});
}

inline LogScaled ls_mul(LogScaled u, cplx s) {
    if (s == cplx(0.0, 0.0) || ls_is_zero(u)) return LogScaled{};
    u = ls_normalize(u);
    return ls_normalize(LogScaled{u.mantissa * s, u.exponent});
}

inline LogScaled ls_div(LogScaled u, LogScaled v) {
    u = ls_normalize(u);
    v = ls_normalize(v);
    return ls_normalize(LogScaled{u.mantissa / v.mantissa, u.exponent - v.exponent});
}

inline LogScaled ls_neg(LogScaled u) {
    u.mantissa = -u.mantissa;
    return u;
}

// Exponent alignment factors out the larger scale, so operands whose
// exponents differ by thousands add without overflow.
inline LogScaled ls_add(LogScaled u, LogScaled v) {
    if (ls_is_zero(u)) return ls_normalize(v);
    if (ls_is_zero(v)) return ls_normalize(u);
    u = ls_normalize(u);
    v = ls_normalize(v);
    if (u.exponent < v.exponent) std::swap(u, v);
    double d = v.exponent - u.exponent;
    if (d < -80.0) return u;
    return ls_normalize(LogScaled{u.mantissa + v.mantissa * std::exp(d), u.exponent});
}

inline LogScaled ls_sub(const LogScaled& u, const LogScaled& v) {
    return ls_add(u, ls_neg(v));
}

// value^p on the principal branch: arg(value) = arg(mantissa) in (-pi, pi].
inline LogScaled ls_pow_real(LogScaled u, double p) {
    u = ls_normalize(u);
    if (ls_is_zero(u)) {
        if (p > 0.0) return LogScaled{};
        if (p == 0.0) return ls_one();
        return LogScaled{cplx(std::numeric_limits<double>::infinity(), 0.0), 0.0};
    }
    double log_abs = std::log(std::abs(u.mantissa)) + u.exponent;
    double theta = std::arg(u.mantissa);
    return ls_from_log(cplx(p * log_abs, p * theta));
}

// Relative distance |u - v| / max(|u|, |v|), computed on the log scale.
inline double ls_rel_diff(const LogScaled& u, const LogScaled& v) {
    if (ls_is_zero(u) && ls_is_zero(v)) return 0.0;
    double scale = std::max(ls_log_abs(u), ls_log_abs(v));
    return std::exp(ls_log_abs(ls_sub(u, v)) - scale);
}

// log(exp(a) + exp(b)) without overflow; used when combining error estimates.
inline double log_add(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

} // namespace humbert

#endif
