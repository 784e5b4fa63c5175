#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace solitonlab::cli {

struct CheckResult {
  std::string check;
  std::string paper_ref;  // the formula or statement being checked
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  // first failure detail, empty when passing
};

struct VerifyConfig {
  std::uint64_t seed = 20240607;
  std::optional<double> tol;  // overrides every per-check tolerance
  int samples = 100;
  int lemma_pairs = 10000;
};

// Runs the identity and inequality suite; results are sorted by check name.
std::vector<CheckResult> run_verify_suite(const VerifyConfig& config);

nlohmann::json report_json(const std::vector<CheckResult>& results);
void write_report_csv(std::ostream& os, const std::vector<CheckResult>& results);
bool all_pass(const std::vector<CheckResult>& results);

}  // namespace solitonlab::cli
