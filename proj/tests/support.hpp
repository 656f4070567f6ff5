#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "ars/binary_matrix.hpp"
#include "ars/partition.hpp"

namespace testing_support {

/// Every partition of `weight` with at most `max_parts` parts, each at most
/// `max_part`.
inline std::vector<ars::Partition> partitions(int weight, int max_parts, int max_part) {
  std::vector<ars::Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> grow = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      current.push_back(p);
      grow(left - p, p);
      current.pop_back();
    }
  };
  grow(weight, max_part);
  return out;
}

/// All (R, S) with m, n <= max_dim and equal weight in 1..max_weight. Parts
/// are unrestricted in size so that empty classes are included.
inline std::vector<std::pair<ars::Partition, ars::Partition>> small_pairs(int max_dim = 4,
                                                                          int max_weight = 8) {
  std::vector<std::pair<ars::Partition, ars::Partition>> out;
  for (int w = 1; w <= max_weight; ++w) {
    const auto ps = partitions(w, max_dim, w);
    for (const auto& r : ps) {
      for (const auto& s : ps) out.emplace_back(r, s);
    }
  }
  return out;
}

/// Calls `visit` on every m x n (0,1)-matrix.
template <typename F>
void for_each_matrix(int m, int n, F&& visit) {
  const int cells = m * n;
  for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
    ars::IntMatrix v(m, n);
    for (int c = 0; c < cells; ++c) v(c / n, c % n) = static_cast<int>((bits >> c) & 1u);
    visit(ars::BinaryMatrix(v));
  }
}

inline ars::BinaryMatrix random_matrix(std::mt19937& rng, int m, int n, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  ars::IntMatrix v(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) v(i, j) = bit(rng) ? 1 : 0;
  }
  return ars::BinaryMatrix(v);
}

/// Rows and columns both sorted nonincreasing by sum, so the margins are
/// partitions (after dropping trailing zero lines the caller may not want).
inline bool has_partition_margins(const ars::BinaryMatrix& a) {
  const auto positive_nonincreasing = [](const ars::Sequence& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || (i > 0 && v[i - 1] < v[i])) return false;
    }
    return true;
  };
  return positive_nonincreasing(a.row_sums()) && positive_nonincreasing(a.col_sums());
}

}  // namespace testing_support
