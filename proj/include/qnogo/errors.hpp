#pragma once

#include <stdexcept>
#include <string>

namespace qnogo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteEntry : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct BadSubsystemIndex : Error {
    using Error::Error;
};
struct NotAProjector : Error {
    using Error::Error;
};
struct InvalidChannel : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct BadPartition : Error {
    using Error::Error;
};
struct InvalidScenario : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace qnogo
