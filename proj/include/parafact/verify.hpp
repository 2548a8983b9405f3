#pragma once

// End-to-end reproduction checks for the two- and three-point classification.
// Every check reads its fixed quantities from a PaperConstants value, so a
// perturbed constant fails the checks that depend on it and no others.

#include <cstdint>
#include <string>
#include <vector>

#include "parafact/classifier.hpp"
#include "parafact/json_output.hpp"

namespace parafact {

struct VerifyOptions {
  std::int64_t bound_2pt = 40;          // exhaustive two-point scan
  std::int64_t coprime_d_bound = 10000;  // eps = -1 coprimality obstruction
  std::int64_t classify_bound = 30;
  std::int64_t isometry_box = 1000;     // Q(Z v) = Q(v) for |v| <= box
  std::int64_t markov_max = 1000;       // tree vs brute force
  std::int64_t product_max = 500;       // three-point products
  std::int64_t bound_3pt = 50;          // eps = -1 three-point scan
  std::int64_t mixed_bound_3pt = 8;
  int symmetry_depth = 5;
  std::int64_t roundtrip_grid = 50;
  int braid_cases = 1000;
  int cancel_cases = 10000;
  int transpose_cases = 500;
  std::uint64_t seed = 20240601;
  unsigned workers = 1;
};

struct CheckResult {
  std::string id;
  std::string anchor;   // which part of the classification the check reproduces
  Json bounds = Json::object();
  bool passed = false;
  Json witness = Json::object();
  std::string message;  // failure description, empty on success
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::vector<std::string> failed_ids() const;
  /// Check records in fixed order; timing is left out so that the output is
  /// reproducible.
  Json to_json() const;
};

/// Check ids in report order.
const std::vector<std::string>& check_ids();

/// Ids of the checks that read the named constant.
std::vector<std::string> checks_using_constant(const std::string& constant);

VerifyReport verify_paper(const PaperConstants& constants = PaperConstants::reference(),
                          const VerifyOptions& options = {});

}  // namespace parafact
