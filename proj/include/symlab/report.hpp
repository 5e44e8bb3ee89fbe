#pragma once

// Structured results of one command. The JSON form is versioned with
// "schema": "symlab/1"; the text form is rendered from the same data.

#include <string>
#include <vector>

#include <json.hpp>

namespace symlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "symlab/1";

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;

  friend bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.inputs == b.inputs && a.results == b.results && a.warnings == b.warnings;
  }
};

enum class OutputMode { text, json };

Json to_json(const Report& r);
/// Throws InputError on a missing or foreign schema.
Report report_from_json(const Json& j);

std::string emit_report(const Report& r, OutputMode mode);
Report parse_report(const std::string& json_text);

}  // namespace symlab
