#pragma once

#include <string>
#include <vector>

namespace qsh {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

/// Aggregated outcome of a verification suite. Rendering is deterministic:
/// results keep insertion order.
struct Report {
  std::string title;
  std::vector<CheckResult> results;

  void add(std::string name, bool pass, std::string details = {}) {
    results.push_back({std::move(name), pass, std::move(details)});
  }
  void merge(const Report& o) {
    for (const auto& r : o.results) results.push_back(r);
  }
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  int num_fail() const {
    int n = 0;
    for (const auto& r : results) n += r.pass ? 0 : 1;
    return n;
  }

  /// "PASS name -- details" lines followed by a summary line.
  std::string to_text() const;
};

}  // namespace qsh
