#ifndef FILTQ_ERRORS_HPP
#define FILTQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace filtq {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, problem files).  Carries the
/// byte offset of the offending token.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

/// Semantically invalid input: incompatible ambients, non-homogeneous
/// generators, violated preconditions.
struct InputError : Error {
    using Error::Error;
};

/// A computation reached its working bound before its certification
/// window closed.  The message always contains an escalation hint.
struct BoundError : Error {
    using Error::Error;
};

/// An internal cross-check failed (e.g. e_0 does not match l(M/JM)).
/// This is never reported as a result; callers must abort.
struct CrossCheckError : Error {
    using Error::Error;
};

} // namespace filtq

#endif
