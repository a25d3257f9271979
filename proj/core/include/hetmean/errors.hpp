#pragma once

#include <stdexcept>
#include <string>

namespace hetmean {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad or insufficient input data (missing file, unparseable cell, series too short).
class InputError : public Error {
public:
    using Error::Error;
};

/// Data for which the statistic is undefined, e.g. a constant series with zero
/// long run variance.
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

/// Tuning parameters outside their admissible range.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace hetmean
