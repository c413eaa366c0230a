#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace suq2 {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  Json measured;  // number or string
  std::string expected;
};

/// Structured outcome of a verification run. Overall pass is the conjunction
/// of the individual checks; an empty report passes vacuously.
struct Report {
  std::string command;
  Json params = Json::object();
  Json conventions = Json::object();
  std::vector<Check> checks;
  /// Auxiliary arrays (tail sequences, tables) for external plotting.
  Json data = Json::object();

  bool pass() const;
  Check& add(std::string name, bool ok, Json measured, std::string expected);
  /// Append another report's checks as "prefix: name" and file its data under prefix.
  void merge(const Report& other, const std::string& prefix);

  Json to_json() const;
  std::string to_text() const;
};

}  // namespace suq2
