#ifndef SCHMIDT_ERROR_HPP
#define SCHMIDT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace schmidt {

enum class ErrorKind {
    NotFundamental,
    ZeroIdeal,
    NotPrime,
    ZeroArgument,
    NotUnitNorm,
    MixedArrangement,
    NotLatticePreserving,
    NotSdMatrix,
    NotIntersecting,
    CoincidentCircles,
    InvalidD,
    EmptyArrangement,
    WindowTooLarge,
    InvalidWindow,
    SeedNotInArrangement,
    DegenerateSeed,
    UnsupportedOrder,
    InsufficientData,
    UncoveredPoint,
    NonPositive,
    DepthExceeded,
    ParseError,
    InvariantViolation,
    EmptyRender,
    UsageError,
    Internal,
};

const char* error_kind_name(ErrorKind k);

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(k)) + ": " + msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

} // namespace schmidt

#endif
