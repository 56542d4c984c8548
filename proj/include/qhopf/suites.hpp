#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/report.hpp"

namespace qhopf {

struct SuiteOptions {
  // Variant, orders and rewrite budget; level and copies are set per suite.
  AlgebraConfig base;
  int n = 2;
  int max_overlap = 3;
  std::uint64_t seed = 20240601;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
};

const std::vector<SuiteInfo>& suite_list();
bool suite_exists(const std::string& name);
// Throws UnknownSuite.
Report run_suite(const std::string& name, const SuiteOptions& opt);

// Numeric falsifier: every residual specialized at (q, u, p).
struct NumericVerdict {
  bool applicable = false;  // the check carries residuals
  bool zero = true;
  mpq_class u, p;           // the point actually used
};
// u, p are drawn from rng and redrawn while a residual has a pole there.
NumericVerdict numeric_verdict(const Check& c, const mpq_class& q, std::uint64_t seed);

}  // namespace qhopf
