#pragma once

#include <stdexcept>
#include <string>

namespace miscale {

// Error taxonomy. The CLI maps these onto exit codes:
//   ConfigError -> 2, ComputeError -> 3, IoError -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : ComputeError {
    using ComputeError::ComputeError;
};
struct InvalidPartitionError : ComputeError {
    using ComputeError::ComputeError;
};
struct NotPositiveDefiniteError : ComputeError {
    using ComputeError::ComputeError;
};
struct DominanceViolationError : ComputeError {
    using ComputeError::ComputeError;
};
struct UnsupportedOperationError : ComputeError {
    using ComputeError::ComputeError;
};
struct TrainingDivergedError : ComputeError {
    using ComputeError::ComputeError;
};
struct EstimationFailedError : ComputeError {
    using ComputeError::ComputeError;
};
struct ValueError : ComputeError {
    using ComputeError::ComputeError;
};
struct FormatError : IoError {
    using IoError::IoError;
};

} // namespace miscale
