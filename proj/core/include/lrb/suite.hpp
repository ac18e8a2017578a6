#pragma once

#include <string>
#include <vector>

namespace lrb::suite {

struct CheckResult {
  int criterion = 0;
  std::string block;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
  bool within_budget() const { return seconds < budget_seconds; }
};

/// Criteria 1..criterion_count(), each tied to one block.
int criterion_count();
std::string block_of(int criterion);
/// Block names in sorted order.
std::vector<std::string> block_names();

/// Runs one criterion and times it. Exceptions become failures whose detail
/// carries the message; an out-of-range number throws InputError.
CheckResult run_criterion(int criterion);

/// Runs every criterion whose block is in `only` (all when empty), blocks
/// in parallel; results are ordered by block name, then criterion.
std::vector<CheckResult> run_suite(const std::vector<std::string>& only = {});

/// Cohomology dimensions behind criterion 3, exposed for golden checks.
std::vector<std::size_t> n3_ce_dims();

}  // namespace lrb::suite
