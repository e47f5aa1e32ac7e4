#pragma once

#include <string>

#include <json.hpp>

namespace framelab::io {

/// Renders a double with the given number of significant digits ("%.*g").
/// 17 digits round-trip IEEE doubles exactly.
std::string format_double(double value, int sig_digits);

/// Serializes JSON with doubles at a fixed significant-digit count
/// (17 for machine output, 6 for pretty mode). indent < 0 gives a single
/// line.
std::string dump_json(const nlohmann::json& j, int sig_digits = 17, int indent = 2);

}  // namespace framelab::io
