#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ars/partition.hpp"

namespace ars {

/// Row sums (6,5,4,3,3,2,2,1,1) and column sums (7,3,3,2,2,1^10): a
/// nonempty class in which no single matrix attains the minimum t-term rank
/// for every t = 1..6.
Partition counterexample_rows();
Partition counterexample_cols();

/// Expected class minima for t = 1..6.
inline constexpr int kCounterexampleMinima[6] = {6, 9, 11, 13, 14, 15};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CounterexampleReport {
  std::vector<CheckResult> checks;
  /// Number of prefix-cover witness combinations shown infeasible.
  int combinations = 0;

  bool pass() const;
};

/// Recomputes the tables, the minima and their cover witnesses, and shows
/// that no combination of prefix-cover witnesses (one per t) is carried by a
/// single class member. This supports, but does not prove, nonexistence of a
/// uniform minimizer: covers need not be prefixes.
CounterexampleReport verify_counterexample();

}  // namespace ars
