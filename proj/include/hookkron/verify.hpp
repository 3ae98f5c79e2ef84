#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hookkron/report.hpp"

namespace hookkron {

struct VerifyOptions {
  int n = 6;                      // exhaustive size bound
  std::uint64_t seed = 20240601;  // sampled cases
  int samples = 10000;
  int sample_len = 8;
  int sample_values = 4;  // letters 1..sample_values in sampled words
  int jobs = 1;
};

std::vector<CheckReport> verify_insertion(const VerifyOptions& o);
std::vector<CheckReport> verify_rules(const VerifyOptions& o);
std::vector<CheckReport> verify_symmetries(const VerifyOptions& o);
std::vector<CheckReport> verify_lascoux(const VerifyOptions& o);
// "all", "insertion", "rules", "symmetries" or "lascoux"
std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& o);

// kronecker_hook against the character oracle for every lambda, nu |- k <= n, d < k.
CheckReport rule_agreement(int n);
// Same for skew nu of size <= n fitting in a rows x rows box.
CheckReport skew_rule_agreement(int n, int rows);

}  // namespace hookkron
