#pragma once

#include <string>
#include <utility>
#include <vector>

namespace premetric::verify {

inline constexpr const char* kReportSchema = "premetric-report/1";

enum class Status { Pass, Fail };

struct CheckResult {
  std::string id;        ///< unique, e.g. "conservation/residual#003"
  std::string suite;     ///< e.g. "conservation"
  std::string equation;  ///< stable tag, e.g. "en-mom"
  Status status = Status::Pass;
  std::string witness;   ///< offending component in expression grammar (FAIL only)
};

/// Named values produced by a command (split fields, derived G, ...).
using Artifact = std::pair<std::string, std::string>;

struct Report {
  std::string command;
  std::vector<CheckResult> checks;
  std::vector<Artifact> artifacts;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  bool all_passed() const;
  std::size_t failed() const;
  /// Sorts checks by id so output does not depend on evaluation order.
  void finalize();

  std::string to_text() const;
  std::string to_structured() const;
};

}  // namespace premetric::verify
