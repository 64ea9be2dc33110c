#include "humbert/errors.hpp"

namespace humbert {

const char* errc_name(errc code) {
    switch (code) {
        case errc::denominator_pole:      return "DenominatorPole";
        case errc::no_convergence:        return "NoConvergence";
        case errc::outside_disk:          return "OutsideDisk";
        case errc::outside_domain:        return "OutsideDomain";
        case errc::degenerate_connection: return "DegenerateConnection";
        case errc::branch_cut:            return "BranchCut";
        case errc::degenerate_case:       return "DegenerateCase";
        case errc::constraint_violation:  return "ConstraintViolation";
        case errc::max_level_exceeded:    return "MaxLevelExceeded";
        case errc::non_finite_integrand:  return "NonFinite";
        case errc::sector_violation:      return "SectorViolation";
        case errc::integer_degeneracy:    return "IntegerDegeneracy";
        case errc::shape_violation:       return "ShapeViolation";
        case errc::domain_violation:      return "DomainViolation";
        case errc::gamma_pole:            return "GammaPole";
        case errc::no_applicable_method:  return "NoApplicableMethod";
    }
    return "UnknownError";
}

} // namespace humbert
