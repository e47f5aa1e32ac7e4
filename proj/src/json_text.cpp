#include "framelab/json_text.hpp"

#include <cstdio>

namespace framelab::io {

namespace {

void dump_value(const nlohmann::json& j, int sig_digits, int indent, int depth, std::string& out) {
  const std::string pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* newline = indent >= 0 ? "\n" : "";
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += newline;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += newline;
        }
        first = false;
        out += pad;
        out += nlohmann::json(it.key()).dump();
        out += indent >= 0 ? ": " : ":";
        dump_value(it.value(), sig_digits, indent, depth + 1, out);
      }
      out += newline;
      out += close_pad;
      out += "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // scalar-only arrays stay on one line
      bool scalars_only = true;
      for (const auto& item : j) {
        if (item.is_structured()) {
          scalars_only = false;
          break;
        }
      }
      out += "[";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += scalars_only ? (indent >= 0 ? ", " : ",") : ",";
        if (!scalars_only) {
          out += newline;
          out += pad;
        }
        first = false;
        dump_value(item, sig_digits, indent, depth + 1, out);
      }
      if (!scalars_only) {
        out += newline;
        out += close_pad;
      }
      out += "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_double(j.get<double>(), sig_digits);
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double value, int sig_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", sig_digits, value);
  return buffer;
}

std::string dump_json(const nlohmann::json& j, int sig_digits, int indent) {
  std::string out;
  dump_value(j, sig_digits, indent, 0, out);
  return out;
}

}  // namespace framelab::io
