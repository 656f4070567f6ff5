#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ars/binary_matrix.hpp"
#include "ars/partition.hpp"

namespace ars {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct EnumerationOutcome {
  std::uint64_t visited = 0;
  /// False when the budget ran out or the visitor stopped early.
  bool complete = true;
};

/// Brute-force enumeration of every (0,1)-matrix with the given margins.
/// Columns are filled left to right; each column takes its rows as a
/// lexicographically increasing index combination, and branches whose
/// remaining margins fail Gale-Ryser are pruned. Every yielded matrix is
/// distinct and lies in the class.
class ClassEnumeration {
 public:
  using Visitor = std::function<bool(const BinaryMatrix&)>;

  ClassEnumeration(Sequence row_sums, Sequence col_sums,
                   std::optional<std::uint64_t> budget = kDefaultBudget);
  ClassEnumeration(const Partition& r, const Partition& s,
                   std::optional<std::uint64_t> budget = kDefaultBudget)
      : ClassEnumeration(r.sequence(), s.sequence(), budget) {}

  /// Streams matrices to `visit` until it returns false, the budget is
  /// spent, or the class is exhausted.
  EnumerationOutcome run(const Visitor& visit) const;

 private:
  Sequence row_sums_;
  Sequence col_sums_;
  std::optional<std::uint64_t> budget_;
};

/// Collects the class; `complete` is false if the budget cut it short.
struct ClassListing {
  std::vector<BinaryMatrix> matrices;
  bool complete = true;
};
ClassListing enumerate_class(const Partition& r, const Partition& s,
                             std::optional<std::uint64_t> budget = kDefaultBudget);

/// Exhaustive t-term rank: every column is either unselected or assigned to
/// one row holding a 1 in it, with at most t columns per row.
int brute_t_term_rank(const BinaryMatrix& a, int t);

/// Minimum brute_t_term_rank over the enumerated class. Throws EmptyClass,
/// or BudgetExceeded when the class does not fit in the budget.
int brute_min_t_term_rank(const Partition& r, const Partition& s, int t,
                          std::optional<std::uint64_t> budget = kDefaultBudget);

enum class SearchStatus { Found, Absent, Undetermined };

struct UniformSearch {
  SearchStatus status = SearchStatus::Undetermined;
  std::optional<BinaryMatrix> matrix;
  /// Class minima of the k-term rank for k = 1..t_max (empty when
  /// undetermined).
  std::vector<int> minima;
};

/// First enumerated class member with rank_k equal to the class minimum for
/// every k = 1..t_max. Throws EmptyClass.
UniformSearch find_uniform_minimizer(const Partition& r, const Partition& s, int t_max,
                                     std::optional<std::uint64_t> budget = kDefaultBudget);

}  // namespace ars
