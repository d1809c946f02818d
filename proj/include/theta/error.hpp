#pragma once

#include <stdexcept>
#include <string>

namespace theta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define THETA_DEFINE_ERROR(Name)          \
    class Name : public Error {           \
    public:                               \
        using Error::Error;               \
    }

THETA_DEFINE_ERROR(InvalidEdge);
THETA_DEFINE_ERROR(InvalidVertex);
THETA_DEFINE_ERROR(ParseError);
THETA_DEFINE_ERROR(SpecError);
THETA_DEFINE_ERROR(NotPrimePower);
THETA_DEFINE_ERROR(SizeLimit);
THETA_DEFINE_ERROR(PreconditionError);
THETA_DEFINE_ERROR(RangeError);

#undef THETA_DEFINE_ERROR

// Parity and multiplicity failures are spec errors with a narrower meaning.
class ParityError : public SpecError {
public:
    using SpecError::SpecError;
};

class MultiplicityError : public SpecError {
public:
    using SpecError::SpecError;
};

}  // namespace theta
