#pragma once

#include <stdexcept>
#include <string>

namespace rqct {

// Error taxonomy. Every throwing operation documents which of these it uses.

struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IncompatibleGridsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateFamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidStatesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnattainableProbabilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidStrategyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Infrastructure faults, distinct from protocol-level Abort outcomes.
struct SimulationFaultError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunawaySimulationError : SimulationFaultError {
    using SimulationFaultError::SimulationFaultError;
};

// Configuration problems carry the offending field path in the message.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rqct
