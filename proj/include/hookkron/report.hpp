#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hookkron {

struct CheckReport {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  bool against_oracle = false;  // a failure here is a rule-vs-oracle mismatch
  std::vector<std::string> counterexamples;  // first few

  bool ok() const { return failures == 0; }
  void fail(std::string what) {
    ++failures;
    if (counterexamples.size() < 5) counterexamples.push_back(std::move(what));
  }
  // counts a case, recording `what` when cond is false
  void check(bool cond, const std::string& what) {
    ++cases;
    if (!cond) fail(what);
  }
};

}  // namespace hookkron
