#ifndef HUMBERT_ERRORS_HPP
#define HUMBERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace humbert {

// Structured error conditions. The CLI maps these to exit code 3 and prints
// the condition name, so the names are part of the interface.
enum class errc {
    denominator_pole,
    no_convergence,
    outside_disk,
    outside_domain,
    degenerate_connection,
    branch_cut,
    degenerate_case,
    constraint_violation,
    max_level_exceeded,
    non_finite_integrand,
    sector_violation,
    integer_degeneracy,
    shape_violation,
    domain_violation,
    gamma_pole,
    no_applicable_method,
};

const char* errc_name(errc code);

class hyp_error : public std::runtime_error {
public:
    hyp_error(errc code, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace humbert

#endif
