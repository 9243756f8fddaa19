#pragma once

#include "serialize.hpp"

namespace gk {

struct SuiteConfig {
  std::size_t trials = 200;
  std::size_t max_n = 5;
  std::uint64_t seed = 7;
  bool parallel = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t retries = 0;
  std::string detail;
  json counterexample;  // null when none
};

// Child seed for trial `index` of criterion `stream`.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg);
json to_json(const CriterionResult& r);

}  // namespace gk
