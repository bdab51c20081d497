#ifndef WHEELS_ERRORS_HPP
#define WHEELS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wheels {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on arguments was violated (bad vertex id, length mismatch, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

// Checked 128-bit arithmetic would wrap.
struct OverflowError : Error {
    using Error::Error;
};

// An enumeration was requested beyond the configured scan budget.
struct BudgetError : Error {
    using Error::Error;
};

// psi_p(n) was requested for a p outside the covered closed-form range.
struct NoClosedFormError : Error {
    using Error::Error;
};

}  // namespace wheels

#endif  // WHEELS_ERRORS_HPP
