#include "symlab/report.hpp"

#include <sstream>

#include "symlab/error.hpp"

namespace symlab {

Json to_json(const Report& r) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

Report report_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchema)
    throw InputError(std::string("report is not in the ") + kSchema + " schema");
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    if (j.contains("warnings")) r.warnings = j["warnings"].get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool flat(const Json& v) {
  if (v.is_array()) {
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  }
  return !v.is_object();
}

void render(std::ostringstream& os, const Json& v, int depth);

void render_value(std::ostringstream& os, const std::string& label, const Json& v, int depth) {
  const std::string pad(2 * depth, ' ');
  if (flat(v)) {
    os << pad << label << (label == "-" ? "" : ":");
    if (v.is_array()) {
      if (v.empty()) {
        os << " (none)\n";
        return;
      }
      std::string sep = " ";
      for (const auto& x : v) {
        os << sep << scalar(x);
        sep = ", ";
      }
      os << "\n";
    } else {
      os << " " << scalar(v) << "\n";
    }
    return;
  }
  os << pad << label << ":\n";
  render(os, v, depth + 1);
}

void render(std::ostringstream& os, const Json& v, int depth) {
  const std::string pad(2 * depth, ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_value(os, k, x, depth);
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object() && !x.empty()) {
        // First key on the dash line.
        std::ostringstream sub;
        render(sub, x, depth + 1);
        os << pad << "- " << sub.str().substr(pad.size() + 2);
      } else {
        render_value(os, "-", x, depth);
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string emit_report(const Report& r, OutputMode mode) {
  if (mode == OutputMode::json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << r.command << "\n";
  render(os, r.inputs, 1);
  os << "results:\n";
  render(os, r.results, 1);
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

Report parse_report(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("not JSON: ") + e.what());
  }
  return report_from_json(j);
}

}  // namespace symlab
