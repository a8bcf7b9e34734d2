#ifndef EVIDENTIA_ERRORS_HPP
#define EVIDENTIA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evidentia {

/// Base class of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: bad construction arguments, violated preconditions,
/// malformed serialized data.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An operation received values bound to two different frames of
/// discernment. Cross-frame arithmetic is always rejected; align the
/// frames explicitly with a coarsening or refinement first.
class FrameMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when a combination has no support left to renormalize
/// (Dempster's rule with conflict mass 1, or a Bayesian update whose
/// prior and evidence share no positive singleton).
class TotalConflict : public Error {
public:
    using Error::Error;
};

} // namespace evidentia

#endif
