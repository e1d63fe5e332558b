#pragma once

#include <stdexcept>
#include <string>

namespace leotopo {

// Base for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two endpoints do not define a unique great-circle plane (identical or antipodal).
struct DegeneratePair : Error {
    using Error::Error;
};

// Shell or policy parameters outside the supported range.
struct ConfigError : Error {
    using Error::Error;
};

// A value does not fit its fixed-width TLE column.
struct FormatError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DuplicateId : Error {
    using Error::Error;
};

struct CoordinateRange : Error {
    using Error::Error;
};

struct EmptySeries : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

// Every snapshot of a pair's series was unreachable; the pair has no summary.
struct NeverReachable : Error {
    using Error::Error;
};

struct MissingRun : Error {
    using Error::Error;
};

// A computed summary violated a metric invariant (S_m >= 1, S_g > 1, ...).
struct MetricInvariant : Error {
    using Error::Error;
};

}  // namespace leotopo
