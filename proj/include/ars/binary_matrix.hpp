#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ars/partition.hpp"

namespace ars {

using Entries = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic,
                              Eigen::RowMajor>;
using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic,
                                Eigen::RowMajor>;

/// Dense m x n (0,1)-matrix with cached row and column sums. Immutable;
/// operations return new values. Indices are 0-based.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  /// All-zero m x n matrix.
  BinaryMatrix(int m, int n);
  /// Throws DimensionMismatch if any entry is outside {0,1}.
  explicit BinaryMatrix(Entries entries);
  explicit BinaryMatrix(const IntMatrix& values);
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const noexcept { return static_cast<int>(entries_.rows()); }
  int cols() const noexcept { return static_cast<int>(entries_.cols()); }
  int operator()(int i, int j) const { return entries_(i, j); }
  const Entries& entries() const noexcept { return entries_; }
  const Sequence& row_sums() const noexcept { return row_sums_; }
  const Sequence& col_sums() const noexcept { return col_sums_; }
  int weight() const noexcept;

  IntMatrix to_int() const { return entries_.cast<int>(); }
  BinaryMatrix transpose() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
  }

 private:
  void refresh_sums();

  Entries entries_;
  Sequence row_sums_;
  Sequence col_sums_;
};

/// Rows {i1,i2} and columns {j1,j2} of an interchange.
struct Interchange {
  int i1 = 0;
  int i2 = 0;
  int j1 = 0;
  int j2 = 0;
  friend bool operator==(const Interchange&, const Interchange&) = default;
};

/// A set of e rows and f columns. Without explicit index sets the cover is
/// the prefix one: rows 0..e-1 and columns 0..f-1.
struct CoverSpec {
  int e = 0;
  int f = 0;
  std::optional<std::vector<int>> row_set;
  std::optional<std::vector<int>> col_set;

  static CoverSpec prefix(int e, int f) { return {e, f, std::nullopt, std::nullopt}; }
  static CoverSpec explicit_sets(std::vector<int> rows, std::vector<int> cols);

  /// Throws BadRange when counts or index sets do not fit an m x n matrix.
  void validate(int m, int n) const;
  bool is_prefix() const noexcept { return !row_set && !col_set; }
};

bool in_class(const BinaryMatrix& a, const Partition& r, const Partition& s);
bool in_class(const BinaryMatrix& a, std::span<const int> r, std::span<const int> s);

/// Swaps [[1,0],[0,1]] <-> [[0,1],[1,0]] on the given rows and columns.
/// Throws InvalidInterchange for any other 2x2 pattern.
BinaryMatrix apply_interchange(const BinaryMatrix& a, const Interchange& x);

bool is_covered(const BinaryMatrix& a, const CoverSpec& cover);

struct CoverValue {
  int value = 0;
  CoverSpec witness;
};

/// Minimum of t*e + f over all covers of `a`, by exhaustion over row
/// subsets. Ties go to the smallest e, then the lexicographically smallest
/// row set.
CoverValue min_cover_value(const BinaryMatrix& a, int t);

}  // namespace ars
