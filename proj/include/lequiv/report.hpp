#pragma once

// Machine-readable run report emitted by the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lequiv {

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json lhs;
  nlohmann::json rhs;
  friend bool operator==(CheckResult const&, CheckResult const&) = default;
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<CheckResult> checks;
  std::optional<std::uint64_t> seed;

  void check(std::string name, bool pass, nlohmann::json lhs, nlohmann::json rhs);
  bool all_pass() const;
  friend bool operator==(RunReport const&, RunReport const&) = default;
};

nlohmann::json to_json(RunReport const& r);
RunReport report_from_json(nlohmann::json const& j);

}  // namespace lequiv
