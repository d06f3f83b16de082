#pragma once

#include <stdexcept>
#include <string>

namespace pdcrib {

// Base classes: ConfigError -> CLI exit 2, ComputeError -> CLI exit 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// materials
struct OutOfRange : ComputeError { using ComputeError::ComputeError; };
struct NonConvergence : ComputeError { using ComputeError::ComputeError; };
struct PoleProximity : ComputeError { using ComputeError::ComputeError; };
struct DegenerateAnchors : ConfigError { using ConfigError::ConfigError; };

// modesolver
struct NoGuidedMode : ComputeError { using ComputeError::ComputeError; };
struct SolverFailure : ComputeError { using ComputeError::ComputeError; };
struct ZeroPower : ComputeError { using ComputeError::ComputeError; };
struct AmbiguousMode : ComputeError { using ComputeError::ComputeError; };
struct TrackingLost : ComputeError { using ComputeError::ComputeError; };
struct NoBracket : ComputeError { using ComputeError::ComputeError; };
struct SchemaError : ConfigError { using ConfigError::ConfigError; };
struct NonMonotonicWavelengths : ConfigError { using ConfigError::ConfigError; };

// nonlinear
struct GridMismatch : ConfigError { using ConfigError::ConfigError; };
struct StepFailure : ComputeError { using ComputeError::ComputeError; };

// pdc
struct OutOfTableRange : ComputeError { using ComputeError::ComputeError; };
struct NonPositiveMismatch : ComputeError { using ComputeError::ComputeError; };
struct GridTooCoarse : ConfigError { using ConfigError::ConfigError; };

}  // namespace pdcrib
