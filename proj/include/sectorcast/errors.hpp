#pragma once

#include <stdexcept>
#include <string>

namespace sectorcast {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad configuration value or violated type invariant.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed input document (missing column, unreadable header, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

// Structurally valid input with semantically invalid content.
class DataError : public Error {
public:
    using Error::Error;
};

// Input contained no usable rows at all.
class EmptyDataError : public Error {
public:
    using Error::Error;
};

// Remote data acquisition failed. The kind keeps the failure modes distinct.
class FetchError : public Error {
public:
    enum class Kind { transport, unknown_ticker, empty_payload, disabled };

    FetchError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// A feature was constant over the scaler fit span.
class ScaleError : public Error {
public:
    using Error::Error;
};

// Series too short for the requested windowing.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// A chronological split produced an empty part.
class SplitError : public Error {
public:
    using Error::Error;
};

// Tensor/parameter shape disagreement.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Non-finite value where a finite one is required (inputs, losses, gradients).
class NumericError : public Error {
public:
    using Error::Error;
};

// Filesystem trouble, reported with the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace sectorcast
