#include "bgf/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bgf {

using json = nlohmann::ordered_json;

std::string spec_to_json(const CumulantSpec& spec) {
  json doc;
  doc["theta"] = format_rational(spec.theta);
  doc["c"] = json::array();
  for (const auto& [nu, value] : spec.c) {
    json entry;
    entry["partition"] = std::vector<int>(nu.parts().begin(), nu.parts().end());
    entry["value"] = format_rational(value);
    doc["c"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

CumulantSpec spec_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("theta") || !doc["theta"].is_string()) {
    throw std::invalid_argument("spec needs a string field \"theta\"");
  }
  CumulantSpec spec;
  spec.theta = parse_rational(doc["theta"].get<std::string>());
  if (doc.contains("c")) {
    if (!doc["c"].is_array()) throw std::invalid_argument("\"c\" must be an array");
    for (const auto& entry : doc["c"]) {
      if (!entry.is_object() || !entry.contains("partition") || !entry.contains("value") ||
          !entry["partition"].is_array() || !entry["value"].is_string()) {
        throw std::invalid_argument("each entry needs \"partition\" and string \"value\"");
      }
      std::vector<int> parts;
      for (const auto& p : entry["partition"]) {
        if (!p.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
        parts.push_back(p.get<int>());
      }
      const Partition nu(parts);
      if (!spec.c.emplace(nu, parse_rational(entry["value"].get<std::string>())).second) {
        throw std::invalid_argument("duplicate partition " + nu.to_string());
      }
    }
  }
  spec.validate();
  return spec;
}

CumulantSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return spec_from_json(buffer.str());
}

void save_spec(const CumulantSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << spec_to_json(spec);
}

}  // namespace bgf
