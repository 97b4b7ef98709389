#ifndef MODPHI_ERRORS_HPP
#define MODPHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modphi {

// Validation failures (bad arguments, unsupported sizes). CLI maps these to exit 2.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failures (non-convergence, degenerate models). CLI maps these to exit 1.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct out_of_range_error : validation_error {
    using validation_error::validation_error;
};
struct domain_error : validation_error {
    using validation_error::validation_error;
};
struct too_large_error : validation_error {
    using validation_error::validation_error;
};
struct not_lattice_error : validation_error {
    using validation_error::validation_error;
};
struct is_lattice_error : validation_error {
    using validation_error::validation_error;
};
struct unsupported_order_error : validation_error {
    using validation_error::validation_error;
};
struct not_admissible_error : validation_error {
    using validation_error::validation_error;
};
struct too_many_variables_error : validation_error {
    using validation_error::validation_error;
};
struct insufficient_points_error : validation_error {
    using validation_error::validation_error;
};
struct disconnected_error : validation_error {
    using validation_error::validation_error;
};
struct budget_exceeded_error : validation_error {
    using validation_error::validation_error;
};

struct non_convergence_error : numeric_error {
    using numeric_error::numeric_error;
};
struct non_positive_variance_error : numeric_error {
    using numeric_error::numeric_error;
};
struct degenerate_error : numeric_error {
    using numeric_error::numeric_error;
};
struct zero_acceptance_error : numeric_error {
    using numeric_error::numeric_error;
};
struct not_positive_error : numeric_error {
    using numeric_error::numeric_error;
};

} // namespace modphi

#endif
