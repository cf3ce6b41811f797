#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace caf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape/extent mismatches between tensors or layer wiring.
struct ShapeError : Error {
    using Error::Error;
};

// Invalid argument values (bad ranges, unknown characters, bad config).
struct ValueError : Error {
    using Error::Error;
};

// Requested more unique samples than the label space holds.
struct CapacityError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Malformed on-disk data (bad PGM header, bad manifest, ...).
struct FormatError : IoError {
    using IoError::IoError;
};

// Checkpoint digest mismatch or truncation.
struct CorruptionError : IoError {
    using IoError::IoError;
};

struct VersionError : IoError {
    using IoError::IoError;
};

// Non-finite loss or gradient during training; carries the iteration.
struct DivergedError : Error {
    int64_t iteration;
    DivergedError(const std::string& msg, int64_t iter)
        : Error(msg + " at iteration " + std::to_string(iter)), iteration(iter) {}
};

}  // namespace caf
