#pragma once

#include <chrono>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "extq/scalar.hpp"

namespace extq {

/// One named verification with its provenance and outcome.
struct Check {
  std::string name;
  std::string paper_ref;
  std::string status;  // pass | fail | inconclusive
  std::string expected;
  std::string actual;
  long long runtime_ms = 0;
};

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct Report {
  nlohmann::json session = nlohmann::json::object();
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }

  bool all_passed() const {
    for (auto& c : checks)
      if (c.status != "pass") return false;
    return true;
  }

  /// pass only when every check passes; fail dominates inconclusive.
  std::string overall() const {
    bool inconclusive = false;
    for (auto& c : checks) {
      if (c.status == "fail") return "fail";
      if (c.status != "pass") inconclusive = true;
    }
    return inconclusive ? "inconclusive" : "pass";
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["session"] = session;
    j["checks"] = nlohmann::json::array();
    for (auto& c : checks) {
      j["checks"].push_back({{"name", c.name},
                             {"paper_ref", c.paper_ref},
                             {"status", c.status},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"runtime_ms", c.runtime_ms}});
    }
    return j;
  }

  void write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open report path: " + path);
    out << to_json().dump(2) << "\n";
  }
};

}  // namespace extq
