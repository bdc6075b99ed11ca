#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace latvoa {

// One verified sub-identity inside a suite. A failing item always carries the
// bit-exact witness (both computed sides, serialized).
struct CheckItem {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped" | "resource"
  std::string detail;
  std::vector<std::pair<std::string, std::string>> witness;  // (label, serialized value)
};

struct CheckReport {
  std::string suite;
  std::string claim;  // human-readable statement of what the suite certifies
  std::map<std::string, std::string> parameters;
  std::vector<CheckItem> checks;
  double elapsed_seconds = 0.0;  // informational only; never serialized

  bool passed() const;
  std::string status() const;  // "pass" if every item passed, else "fail"

  void add_pass(std::string name, std::string detail = "");
  void add_fail(std::string name, std::string detail,
                std::vector<std::pair<std::string, std::string>> witness = {});
  void add_resource(std::string name, std::string detail);

  // Deterministic serializations (no timing, no environment data).
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace latvoa
