#ifndef KTDUAL_ERRORS_HPP
#define KTDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ktdual {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input from the caller: mismatched groups, malformed documents,
// unparseable representation specs, non-genuine arguments.
class UserError : public Error {
public:
    using Error::Error;
};

// A guarantee of the theory failed to hold at runtime (e.g. Newton's
// identity produced a non-integral multiplicity). Always a bug, never
// a usage problem.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace ktdual

#endif
