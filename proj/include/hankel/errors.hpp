#ifndef HANKEL_ERRORS_HPP
#define HANKEL_ERRORS_HPP

#include <stdexcept>

namespace hankel {

// Mismatched centers/orders, broken path continuity, and similar misuse.
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Reversion of a series with vanishing linear coefficient.
struct degenerate_reversion_error : structural_error {
    using structural_error::structural_error;
};

// Parameter outside the mathematical domain of an operation
// (pole collisions, near-singular prefactors, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace hankel

#endif
