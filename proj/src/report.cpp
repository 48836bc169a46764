#include "lequiv/report.hpp"

#include <algorithm>

namespace lequiv {

void RunReport::check(std::string name, bool pass, nlohmann::json lhs, nlohmann::json rhs) {
  checks.push_back({std::move(name), pass, std::move(lhs), std::move(rhs)});
}

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.pass; });
}

nlohmann::json to_json(RunReport const& r) {
  auto checks = nlohmann::json::array();
  for (auto const& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  nlohmann::json j{{"command", r.command},
                   {"inputs", r.inputs},
                   {"outputs", r.outputs},
                   {"checks", checks},
                   {"all_pass", r.all_pass()}};
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  return j;
}

RunReport report_from_json(nlohmann::json const& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.outputs = j.at("outputs");
  for (auto const& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("lhs"),
                        c.at("rhs")});
  }
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

}  // namespace lequiv
