#pragma once

#include <optional>
#include <vector>

#include "ars/binary_matrix.hpp"
#include "ars/partition.hpp"
#include "ars/structure.hpp"

namespace ars {

/// Stable permutation putting a sequence into nonincreasing order:
/// position i of the sorted sequence holds source index order[i]. Equal
/// values keep their original relative order.
struct SortPermutation {
  std::vector<int> order;

  static SortPermutation descending(std::span<const int> values);
  Sequence apply(std::span<const int> values) const;
  int size() const noexcept { return static_cast<int>(order.size()); }
};

/// Canonical matrix of the class: start from left-justified rows, then for
/// columns n..1 move the last 1 of the S_k rows with the largest remaining
/// sum into column k, bottommost rows first on ties. Throws EmptyClass.
BinaryMatrix ryser_canonical(const Partition& r, const Partition& s);

/// Same algorithm on nonnegative margins that may contain zeros.
BinaryMatrix ryser_canonical(std::span<const int> row_sums, std::span<const int> col_sums);

/// Interchanges turning `a` into `b`: both are driven to the canonical
/// matrix of their class and the second route is replayed backwards.
/// Throws NotSameClass.
std::vector<Interchange> interchange_path(const BinaryMatrix& a, const BinaryMatrix& b);

/// Block of columns f+1..n produced by shifting within the first e rows.
struct ShiftedBlock {
  BinaryMatrix block;  ///< e x (n - f)
  Sequence row_sums;   ///< row sums of `block`, length e
};

/// Runs the shifting phase on the first e rows of the left-justified matrix
/// with row sums r, for columns n down to f+1 (1-based) with column sums s.
/// Throws InfeasibleShift when a column cannot be filled or a row would no
/// longer fit in the columns left.
ShiftedBlock canonical_column_submatrix(const Partition& r, const Partition& s, int e, int f);

/// A class member whose 1s all lie in the first e rows or first f columns.
/// Throws InfeasibleShift or ResidualInfeasible when no such matrix comes
/// out of the construction; callers can pre-check with cover_exists.
BinaryMatrix modified_ryser(const Partition& r, const Partition& s, int e, int f);

/// A class member carrying both prefix covers of `covers`.
/// Throws InfeasibleShift, ResidualInfeasible or BadRange.
BinaryMatrix two_cover_construct(const Partition& r, const Partition& s, const CoverPair& covers);

/// Accepts the two covers in any order. When one cover implies the other
/// this reduces to modified_ryser on the stronger one.
BinaryMatrix two_cover_construct(const Partition& r, const Partition& s, const CoverSpec& first,
                                 const CoverSpec& second);

/// When uniform_minimizer_hypotheses holds for t, builds the class member
/// covered by (1 row, f' columns) and (2 rows, f columns) and checks it
/// realizes every minimum k-term rank for k <= t. Absent otherwise.
/// Throws VerificationFailed if the check fails.
std::optional<BinaryMatrix> construct_uniform_minimizer(const Partition& r, const Partition& s,
                                                        int t);

}  // namespace ars
