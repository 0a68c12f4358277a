#pragma once

#include <stdexcept>
#include <string>

namespace ctsurg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// front module
struct InvalidDiagram : Error {
    using Error::Error;
};
struct InvalidComponent : Error {
    using Error::Error;
};
struct InvalidTransverseFront : Error {
    using Error::Error;
};

// surgery module
struct IndexError : Error {
    using Error::Error;
};
struct NotACancellingPair : Error {
    using Error::Error;
};
struct UnresolvableLinking : Error {
    using Error::Error;
};
struct MalformedPair : Error {
    using Error::Error;
};

// homotopy / exact linear algebra
struct DegenerateMatrix : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};

// lutz module
struct ZeroNotAllowed : Error {
    using Error::Error;
};

// io
struct ParseError : Error {
    using Error::Error;
};

} // namespace ctsurg
