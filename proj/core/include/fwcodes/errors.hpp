#ifndef FWCODES_ERRORS_HPP
#define FWCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fwc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live in different ambient dimensions m.
struct DimensionError : Error {
    using Error::Error;
};

// An argument violates a documented precondition (parameter bounds,
// enumeration caps, empty defining sets, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Two independently computed results disagree.
struct VerificationError : Error {
    using Error::Error;
};

// A structural invariant that should hold by construction was violated;
// indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace fwc

#endif
