#pragma once

#include <stdexcept>
#include <string>

namespace rank2sep {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
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
struct NotNormalized : Error {
    using Error::Error;
};
struct AlphaOutOfRange : Error {
    using Error::Error;
};
struct NotRealInput : Error {
    using Error::Error;
};
struct RankDegenerate : Error {
    using Error::Error;
};
struct E2Product : Error {
    using Error::Error;
};
struct CommonRootViolation : Error {
    using Error::Error;
};
struct EqualRoots : Error {
    using Error::Error;
};
struct WeightOutOfRange : Error {
    using Error::Error;
};
struct NotProduct : Error {
    using Error::Error;
};
struct NotDensityMatrix : Error {
    using Error::Error;
};
struct UnsupportedRank : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};

// Malformed input text; carries a 1-based position when known (0 = unknown).
struct ParseError : Error {
    std::size_t line = 0;
    std::size_t column = 0;
    ParseError(const std::string& what, std::size_t l = 0, std::size_t c = 0)
        : Error(what), line(l), column(c) {}
};

// A consistency check that cannot fail for valid inputs did fail anyway.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace rank2sep
