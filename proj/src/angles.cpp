// SPDX-License-Identifier: Apache-2.0

#include "seqweak/angles.hpp"

#include <cctype>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "seqweak/errors.hpp"

namespace seqweak {

namespace {

[[noreturn]] void bad(const std::string& text) {
    throw SimError(SimErrc::invalid_config, "cannot parse angle '" + text + "'");
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

} // namespace

double parse_angle(const std::string& raw) {
    const std::string text = strip(raw);
    if (text.empty()) bad(raw);

    const std::size_t pi_pos = text.find("pi");
    if (pi_pos == std::string::npos) {
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end != text.c_str() + text.size()) bad(raw);
        return v;
    }

    // [sign][numerator][*] pi [/ denominator]
    double sign = 1.0;
    std::string num = strip(text.substr(0, pi_pos));
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
        if (num.front() == '-') sign = -1.0;
        num = strip(num.substr(1));
    }
    if (!num.empty() && num.back() == '*') num = strip(num.substr(0, num.size() - 1));

    double numerator = 1.0;
    if (!num.empty()) {
        char* end = nullptr;
        numerator = std::strtod(num.c_str(), &end);
        if (end != num.c_str() + num.size()) bad(raw);
    }

    std::string rest = strip(text.substr(pi_pos + 2));
    double denominator = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') bad(raw);
        rest = strip(rest.substr(1));
        if (rest.empty()) bad(raw);
        char* end = nullptr;
        denominator = std::strtod(rest.c_str(), &end);
        if (end != rest.c_str() + rest.size() || denominator == 0.0) bad(raw);
    }

    return sign * numerator * std::numbers::pi / denominator;
}

std::vector<double> parse_angle_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        if (!strip(item).empty()) out.push_back(parse_angle(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty())
        throw SimError(SimErrc::invalid_config, "empty angle list");
    return out;
}

} // namespace seqweak
