#include "latvoa/report.hpp"

#include <json.hpp>

#include <sstream>

namespace latvoa {

bool CheckReport::passed() const {
  for (const auto& c : checks)
    if (c.status != "pass" && c.status != "skipped") return false;
  return true;
}

std::string CheckReport::status() const { return passed() ? "pass" : "fail"; }

void CheckReport::add_pass(std::string name, std::string detail) {
  checks.push_back({std::move(name), "pass", std::move(detail), {}});
}

void CheckReport::add_fail(std::string name, std::string detail,
                           std::vector<std::pair<std::string, std::string>> witness) {
  checks.push_back({std::move(name), "fail", std::move(detail), std::move(witness)});
}

void CheckReport::add_resource(std::string name, std::string detail) {
  checks.push_back({std::move(name), "resource", std::move(detail), {}});
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["claim"] = claim;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["status"] = status();
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["status"] = c.status;
    if (!c.detail.empty()) item["detail"] = c.detail;
    if (!c.witness.empty()) {
      nlohmann::ordered_json w = nlohmann::ordered_json::object();
      for (const auto& [label, value] : c.witness) w[label] = value;
      item["witness"] = w;
    }
    items.push_back(item);
  }
  j["checks"] = items;
  return j.dump(2);
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  os << "claim: " << claim << "\n";
  for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
  for (const auto& c : checks) {
    os << "  [" << c.status << "] " << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
    for (const auto& [label, value] : c.witness) {
      os << "      " << label << ":\n";
      std::istringstream lines(value);
      std::string line;
      while (std::getline(lines, line)) os << "        " << line << "\n";
    }
  }
  os << "result: " << status() << "\n";
  return os.str();
}

}  // namespace latvoa
