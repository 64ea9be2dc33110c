#ifndef HUMBERT_PFQ_ASYM_HPP
#define HUMBERT_PFQ_ASYM_HPP

#include <vector>

#include "humbert/series.hpp"

namespace humbert {

struct ExpansionResult {
    LogScaled value;
    int truncation_order = 0;
    double first_omitted_term = 0.0; // magnitude of the k = N term
    bool exact = false;              // the underlying series terminated before N
    bool degenerate_warning = false; // inputs within 1e-6 of a degeneracy
};

enum class ExpansionVariant {
    large_lambda,   // 2F2 with b, d shifted by +lambda
    minus_n,        // 2F2 with b, d shifted by -n
    pfq_all_down,   // pFq with all shifted parameters at -n
    pfp_one_down,   // p+1Fp+1 with one numerator/denominator pair at -n
    f22_a_down,     // 2F2 with a, c, d at -n
    f22_both_down,  // 2F2 with all four parameters at -n
    large_z_leading // leading large-z behavior
};

const char* expansion_variant_name(ExpansionVariant v);

// Truncation order and regime selector for the expansions below. The integer
// shift variants require the scale parameter to be a positive integer.
struct ExpansionRequest {
    int order = 1;
    double parameter = 0.0; // lambda or n
    ExpansionVariant variant = ExpansionVariant::large_lambda;

    ExpansionRequest(int order_, double parameter_, ExpansionVariant variant_);
    bool integer_shift() const;
};

// Exact rearrangement 2F2[a,b;c,d;z] = sum_k (a)_k (d-b)_k / ((c)_k (d)_k)
// (-z)^k / k! * 1F1[a+k; c+k; z].
EvalResult f22_fields_series(cplx a, cplx b, cplx c, cplx d, cplx z, const SeriesControl& ctrl);

// Luke's expansion of p+1Fq+1 in terms of parameter-shifted pFq values.
// p <= q for any z; p = q+1 needs Re z < 1/2.
EvalResult pfp_luke_series(const std::vector<cplx>& num, const std::vector<cplx>& den, cplx b,
                           cplx d, cplx z, const SeriesControl& ctrl);

// 2F2[a, b+lambda; c, d+lambda; z], lambda -> inf in |arg(lambda+d)| <= pi - delta;
// remainder O(lambda^-N).
ExpansionResult asym_f22_large_lambda(cplx a, cplx b, cplx c, cplx d, cplx z, cplx lambda,
                                      int order, double delta = 0.1);

// 2F2[a, b-n; c, d-n; z], n -> +inf through integers; remainder O(n^-N).
// Terminates (exact) when b-d is a positive integer and order >= b-d+1.
ExpansionResult asym_f22_minus_n(cplx a, cplx b, cplx c, cplx d, cplx z, long n, int order);

// p+rFq+s[a_1-n..a_p-n, b_1..b_r; c_1-n..c_q-n, d_1..d_s; z] with q >= p+1,
// s >= r-1; remainder O(n^{(p-q)N}).
ExpansionResult asym_pfq_all_down(const std::vector<cplx>& num_shift,
                                  const std::vector<cplx>& den_shift,
                                  const std::vector<cplx>& num_fix,
                                  const std::vector<cplx>& den_fix, cplx z, long n, int order);

// p+1Fp+1[a_1..a_p, b-n; c_1..c_p, d-n; z]; remainder O(n^-N).
ExpansionResult asym_pfp_one_down(const std::vector<cplx>& num, const std::vector<cplx>& den,
                                  cplx b, cplx d, cplx z, long n, int order);

// 2F2[a-n, b; c-n, d-n; z]; remainder O(n^-N).
ExpansionResult asym_f22_a_down(cplx a, cplx b, cplx c, cplx d, cplx z, long n, int order);

// 2F2[a-n, b-n; c-n, d-n; z]; remainder O(n^-N). The e^z factor is carried
// in LogScaled.
ExpansionResult asym_f22_both_down(cplx a, cplx b, cplx c, cplx d, cplx z, long n, int order);

// Leading large-z behavior Gamma(c)Gamma(d+nu)/(Gamma(a)Gamma(b+nu))
// z^{a+b-c-d} e^z of 2F2[a, b+nu; c, d+nu; z], |arg z| < pi/2.
LogScaled asym_f22_large_z(cplx a, cplx b, cplx c, cplx d, long nu, cplx z);

// Extended-precision direct summation of pFq (long double, compensated),
// the oracle the error-scaling sweeps measure against. Deliberately a
// separate code path from pfq_series.
cplx pfq_series_ref(const std::vector<cplx>& num, const std::vector<cplx>& den, cplx z);

} // namespace humbert

#endif
