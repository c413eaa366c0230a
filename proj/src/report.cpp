#include "suq2/report.hpp"

#include <algorithm>
#include <sstream>

namespace suq2 {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check& Report::add(std::string name, bool ok, Json measured, std::string expected) {
  checks.push_back({std::move(name), ok, std::move(measured), std::move(expected)});
  return checks.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const Check& c : other.checks) checks.push_back({prefix.empty() ? c.name : prefix + ": " + c.name, c.pass, c.measured, c.expected});
  for (const auto& [k, v] : other.conventions.items()) conventions[k] = v;
  if (!other.data.empty()) data[prefix.empty() ? other.command : prefix] = other.data;
}

Json Report::to_json() const {
  Json out;
  out["command"] = command;
  out["params"] = params;
  out["conventions"] = conventions;
  Json list = Json::array();
  for (const Check& c : checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["measured"] = c.measured;
    j["expected"] = c.expected;
    list.push_back(std::move(j));
  }
  out["checks"] = std::move(list);
  out["pass"] = pass();
  if (!data.empty()) out["data"] = data;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const Check& c : checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "  measured="
       << (c.measured.is_string() ? c.measured.get<std::string>() : c.measured.dump())
       << "  expected=" << c.expected << "\n";
  }
  return os.str();
}

}  // namespace suq2
