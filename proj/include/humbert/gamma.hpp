#ifndef HUMBERT_GAMMA_HPP
#define HUMBERT_GAMMA_HPP

#include <cstdint>
#include <initializer_list>

#include "humbert/log_scaled.hpp"

namespace humbert {

// Distance-to-integer tolerance for degeneracy detection. Everything the
// tables and sweeps feed through here is either an exact double or a small
// rational whose rounding noise is far below this.
inline constexpr double kIntegerTol = 1e-9;

bool is_integer(cplx z, double tol = kIntegerTol);
bool is_nonpos_integer(cplx z, double tol = kIntegerTol);
bool is_near_integer(cplx z, double warn_tol);

// Principal branch of log Gamma(z), continuous on C minus (-inf, 0].
// Lanczos (g = 607/128, 15 terms) for Re z >= 0.5, reflection with Kolbig's
// log-sin construction otherwise. Throws gamma_pole on nonpositive integers.
cplx log_gamma(cplx z);

// Rising factorial a (a+1) ... (a+n-1); (a)_0 = 1.
cplx pochhammer(cplx a, long n);

struct PochhammerQuery {
    cplx a;
    cplx b;
    long n = 0;
};

// (a)_n / (b)_n, stable up to n ~ 1e6: direct product for n <= 32 (or when a
// is a nonpositive integer and the product terminates or vanishes), else
// log-gamma differences. Throws denominator_pole when b is in Z_{<=0}.
LogScaled pochhammer_ratio(const PochhammerQuery& q);

// exp(sum log Gamma(num) - sum log Gamma(den)) as a LogScaled value.
// A pole in a denominator makes the whole ratio zero (reciprocal gamma);
// a pole in a numerator throws gamma_pole.
LogScaled gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den);

} // namespace humbert

#endif
