#ifndef PHOTSUB_ERRORS_HPP
#define PHOTSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace photsub {

/// Parameter outside its physical range (negative mean, efficiency > 1, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Conditioning on an event of (numerically) zero probability, or an empty
/// selection when building an empirical conditional histogram.
class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Statistic undefined for the given distribution (e.g. Fano of a zero-mean state).
class StatisticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Detected count outside the linear response range of the detector model.
class SaturationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Voltage sample set carries no usable comb structure (e.g. all zeros).
class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened / written.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File opened but its content is malformed; message names the line or byte offset.
class ParseError : public FileError {
public:
    using FileError::FileError;
};

} // namespace photsub

#endif
