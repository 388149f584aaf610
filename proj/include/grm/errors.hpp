#pragma once

#include <stdexcept>
#include <string>

namespace grm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeError : Error {
    using Error::Error;
};
struct SizeExceededError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct IndexOutOfRangeError : Error {
    using Error::Error;
};
struct FieldMismatchError : Error {
    using Error::Error;
};
struct ArityMismatchError : Error {
    using Error::Error;
};
struct TooManyVariablesError : Error {
    using Error::Error;
};
struct LengthMismatchError : Error {
    using Error::Error;
};
struct ShapeMismatchError : Error {
    using Error::Error;
};
struct NotNonPrimeError : Error {
    using Error::Error;
};
struct NoSeparatorError : Error {
    using Error::Error;
};

} // namespace grm
