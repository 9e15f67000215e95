// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace seqweak {

enum class SimErrc {
    invalid_axis = 1,     // measurement axis not unit length
    invalid_unitary,      // operator fails the unitarity check
    invalid_state,        // amplitudes not normalizable / out of tolerance
    degenerate_branch,    // outcome probability below threshold
    schedule_violation,   // mu outside (0, F(theta)) at some branch
    product_state,        // eta in {0, pi/2}: no CHSH violation possible
    incomplete_level,     // level/family passed in is not complete
    invalid_config,       // bad run configuration (depth cap, parse, ...)
};

const char* to_string(SimErrc code);

class SimError : public std::runtime_error {
  public:
    SimError(SimErrc code, const std::string& message, std::string history = {})
        : std::runtime_error(message), code_(code), history_(std::move(history)) {}

    SimErrc code() const { return code_; }

    // Canonical history of the offending branch, when one exists.
    const std::string& history() const { return history_; }

  private:
    SimErrc code_;
    std::string history_;
};

} // namespace seqweak
