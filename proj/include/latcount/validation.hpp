#pragma once

#include <functional>
#include <string>
#include <vector>

namespace latcount {

struct Verdict {
  std::string name;
  bool passed = false;
  std::string details;
};

/// Outcome of one CLI invocation. Any failed verdict means a nonzero exit.
struct RunReport {
  std::string command;
  double wall_seconds = 0.0;
  std::string engine;
  std::vector<Verdict> verdicts;

  bool ok() const;
  /// Command, engine, failed checks and a pass count.
  std::string render() const;
};

enum class ValidationScope { Quick, Full };

/// Runs the cross-engine, oracle and table reproduction checks. `progress`,
/// when set, sees each verdict as it lands.
RunReport run_validation(ValidationScope scope, const std::function<void(const Verdict&)>& progress = {});

}  // namespace latcount
