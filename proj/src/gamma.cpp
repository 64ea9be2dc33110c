#include "humbert/gamma.hpp"

#include <cmath>

#include "humbert/errors.hpp"

namespace humbert {

bool is_integer(cplx z, double tol) {
    return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

bool is_nonpos_integer(cplx z, double tol) {
    return is_integer(z, tol) && std::round(z.real()) <= 0.0;
}

bool is_near_integer(cplx z, double warn_tol) {
    return is_integer(z, warn_tol);
}

namespace {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey). Relative accuracy
// of exp(log_gamma) is ~1e-15 on the right half plane.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kLogPi = 1.1447298858494001741;

cplx log_gamma_lanczos(cplx z) {
    cplx sum(kLanczosC[0], 0.0);
    for (int i = 1; i < 15; ++i) sum += kLanczosC[i] / (z + cplx(i - 1, 0.0));
    cplx t = z + cplx(kLanczosG - 0.5, 0.0);
    return kLogSqrt2Pi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) chosen so that the reflected log_gamma stays on the
// principal branch (Kolbig). Requires Im z >= 0.
cplx log_sin_pi(cplx z) {
    constexpr double pi = 3.14159265358979323846;
    if (z.imag() > 110.0) {
        // sin(pi z) ~ -exp(-i pi z) / (2i) up to e^{-2 pi Im z}
        return cplx(0.0, -pi) * z + cplx(-0.69314718055994530942, pi / 2.0);
    }
    double n = std::floor(z.real());
    cplx eps = z - n;
    return std::log(std::sin(pi * eps)) - cplx(0.0, pi * n);
}

} // namespace

cplx log_gamma(cplx z) {
    if (is_nonpos_integer(z))
        throw hyp_error(errc::gamma_pole, "log_gamma at nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    if (z.imag() >= 0.0) return kLogPi - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
    return std::conj(log_gamma(std::conj(z)));
}

cplx pochhammer(cplx a, long n) {
    cplx p(1.0, 0.0);
    for (long k = 0; k < n; ++k) p *= a + cplx(double(k), 0.0);
    return p;
}

LogScaled pochhammer_ratio(const PochhammerQuery& q) {
    if (is_nonpos_integer(q.b))
        throw hyp_error(errc::denominator_pole, "pochhammer_ratio with b in Z_{<=0}");
    if (q.n == 0) return ls_one();
    if (is_nonpos_integer(q.a) && q.n > -std::lround(q.a.real()))
        return LogScaled{}; // a factor (a + |a|) = 0 entered the product
    if (q.n <= 32 || is_nonpos_integer(q.a)) {
        LogScaled r = ls_one();
        for (long k = 0; k < q.n; ++k)
            r = ls_mul(r, (q.a + cplx(double(k), 0.0)) / (q.b + cplx(double(k), 0.0)));
        return r;
    }
    cplx nn(double(q.n), 0.0);
    return ls_from_log(log_gamma(q.a + nn) - log_gamma(q.a) - log_gamma(q.b + nn) +
                       log_gamma(q.b));
}

LogScaled gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
    cplx w(0.0, 0.0);
    for (cplx z : num) w += log_gamma(z); // throws on numerator poles
    for (cplx z : den) {
        if (is_nonpos_integer(z)) return LogScaled{}; // 1/Gamma vanishes
        w -= log_gamma(z);
    }
    return ls_from_log(w);
}

} // namespace humbert
