#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "liechar/spectra.hpp"

namespace liechar {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool flagged = false;  ///< part of the criterion was skipped by a guard
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// JSON file holding measured mixing times; written when missing.
  std::string golden_path;
  std::uint32_t seed = kDefaultSeed;
  /// Criterion ids to run; empty runs all 17.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// Number of acceptance criteria.
constexpr int kCriteriaCount = 17;

}  // namespace liechar
