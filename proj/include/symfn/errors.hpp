#ifndef SYMFN_ERRORS_HPP
#define SYMFN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symfn {

// Base class for every error raised by the library. The C API maps each
// subclass onto a distinct status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument: size mismatch, out-of-range parameter, malformed text.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A series operation needs degrees beyond the truncation it was given.
class TruncationError : public Error {
public:
    using Error::Error;
};

// The requested computation exceeds the configured degree budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Unknown identity id or family descriptor.
class UnknownName : public Error {
public:
    using Error::Error;
};

}  // namespace symfn

#endif  // SYMFN_ERRORS_HPP
