#ifndef SDNLB_SCENARIO_HPP
#define SDNLB_SCENARIO_HPP

// Scenario file ingestion. The format is versioned JSON (see README for the
// schema); every invariant is checked at load time and violations raise a
// distinct error class so callers can map them to exit codes and messages.

#include <stdexcept>
#include <string>

#include "sdnlb/sim.hpp"

namespace sdnlb {

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File unreadable or unwritable.
struct ScenarioIoError : ScenarioError {
    using ScenarioError::ScenarioError;
};

// Not valid JSON; message carries the parser's position.
struct ScenarioParseError : ScenarioError {
    using ScenarioError::ScenarioError;
};

// A required field is absent or has the wrong type.
struct ScenarioMissingFieldError : ScenarioError {
    using ScenarioError::ScenarioError;
};

// A reference to an undefined controller or switch id.
struct ScenarioDanglingIdError : ScenarioError {
    using ScenarioError::ScenarioError;
};

// Hop matrix not dense over switches x controllers, or entries below 1.
struct ScenarioHopMatrixError : ScenarioError {
    using ScenarioError::ScenarioError;
};

// A field value outside its documented range.
struct ScenarioValueError : ScenarioError {
    using ScenarioError::ScenarioError;
};

Scenario parse_scenario(const std::string& text, const std::string& origin);
Scenario load_scenario(const std::string& path);

}  // namespace sdnlb

#endif  // SDNLB_SCENARIO_HPP
