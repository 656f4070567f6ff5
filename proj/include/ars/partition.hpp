#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ars {

/// Plain integer sequence. Used for margins that may contain zeros or be
/// out of order (residual row/column sums, margins of arbitrary matrices).
using Sequence = std::vector<int>;

/// Nonincreasing sequence of positive integers with its cached weight.
///
/// The empty partition (no parts, weight 0) is allowed; it arises when a
/// residual margin is all zeros after promotion.
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidPartition unless parts are positive and nonincreasing.
  explicit Partition(Sequence parts);
  Partition(std::initializer_list<int> parts) : Partition(Sequence(parts)) {}

  /// Sorts into nonincreasing order and drops zeros. Throws on negatives.
  static Partition from_sequence(std::span<const int> values);

  std::span<const int> parts() const noexcept { return parts_; }
  const Sequence& sequence() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept { return weight_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// Prefix of the first k parts, as a plain sequence.
  Sequence head(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Sequence parts_;
  int weight_ = 0;
};

/// Conjugate partition: part j counts the parts that are >= j.
Partition conjugate(const Partition& p);

/// Conjugate of a nonnegative sequence, truncated or zero-padded to `length`.
Sequence conjugate(std::span<const int> values, int length);

/// True iff every prefix sum of `s` is at most the matching prefix sum of
/// `r` and the totals agree. The shorter sequence is padded with zeros.
bool majorized_by(std::span<const int> s, std::span<const int> r);
bool majorized_by(const Partition& s, const Partition& r);

/// Gale-Ryser: the class with row sums r and column sums s is nonempty.
bool is_nonempty(const Partition& r, const Partition& s);

/// Gale-Ryser for arbitrary nonnegative margins (any order, zeros allowed).
/// Negative entries make the answer false.
bool margins_realizable(std::span<const int> row_sums,
                        std::span<const int> col_sums);

/// Comma-separated parts, e.g. "6,5,4,3,3,2,2,1,1".
Partition parse_partition(std::string_view text);
Sequence parse_sequence(std::string_view text);
std::string format_sequence(std::span<const int> values);

}  // namespace ars
