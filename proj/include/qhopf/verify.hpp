#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhopf/suites.hpp"

namespace qhopf {

struct VerifyOptions {
  SuiteOptions suite;
  std::vector<std::string> suites;
  std::optional<mpq_class> q_numeric;
  int jobs = 1;
  std::string dump_dir;
  bool timing = true;
};

struct VerifyResult {
  nlohmann::ordered_json json;
  int exit_code = 0;  // 0 all pass, 1 any fail or error
};

// Runs the suites ("all" expands to every registered suite). Throws
// UnknownSuite before any suite runs.
VerifyResult verify(const VerifyOptions& opt);

// "11,12,21,22" (or indices 0..3) to positions; throws ConfigError.
std::array<int, 4> parse_order(const std::string& list);
// KIND=LIST with KIND in xi, pd, x.
void apply_order(AlgebraConfig& c, const std::string& spec);
// JSON (by extension .json) or TOML; fills fields that are present.
void load_config(const std::string& path, VerifyOptions& opt);

}  // namespace qhopf
