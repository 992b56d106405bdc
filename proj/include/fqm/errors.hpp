#pragma once

#include <stdexcept>
#include <string>

namespace fqm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonInvertibleError : Error {
    using Error::Error;
};

struct EvenModulusError : Error {
    using Error::Error;
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct NotPrimePowerError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct DegenerateSolutionSpaceError : Error {
    using Error::Error;
};

struct SizeLimitError : Error {
    using Error::Error;
};

} // namespace fqm
