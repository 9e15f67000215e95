// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace seqweak {

// Parses an angle given either as a rational multiple of pi ("pi/40",
// "2pi/3", "3*pi/8", "-pi") or as a plain decimal ("0.349"). Rational forms
// are reduced exactly and converted to double once. Throws invalid_config
// on malformed input.
double parse_angle(const std::string& text);

// Comma-separated list of angles.
std::vector<double> parse_angle_list(const std::string& text);

} // namespace seqweak
