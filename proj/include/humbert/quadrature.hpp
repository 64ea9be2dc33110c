#ifndef HUMBERT_QUADRATURE_HPP
#define HUMBERT_QUADRATURE_HPP

#include <functional>

#include "humbert/series.hpp"

namespace humbert {

// Doubly-exponential quadrature over (0, 1). The integrand receives both t
// and 1-t so endpoint factors like t^{b-1} (1-t)^{c-b-1} can be formed
// without cancellation; it returns a LogScaled value, so magnitudes of
// e^3000 and algebraic endpoint singularities of exponent > -1 are fine.
// Levels double until successive estimates agree to `tol` relative
// (compared on the log scale); node/weight tables are built once at first
// use and read-only afterwards.
using LogScaledIntegrand = std::function<LogScaled(double t, double one_minus_t)>;

EvalResult tanh_sinh_integrate(const LogScaledIntegrand& f, double tol, int max_level = 12);

} // namespace humbert

#endif
