#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace secant {

struct AcceptanceOptions {
  unsigned jobs = 1;
  bool include_stretch = true;  // AC13
  std::uint64_t seed = 20240601;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;
};

std::vector<std::string> criterion_ids();

// ValidationError for an unknown id.
CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace secant
