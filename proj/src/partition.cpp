#include "ars/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "ars/error.hpp"

namespace ars {

Partition::Partition(Sequence parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw Error(ErrorCode::InvalidPartition,
                  "parts must be positive, got " + format_sequence(parts_));
    }
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw Error(ErrorCode::InvalidPartition,
                  "parts must be nonincreasing, got " + format_sequence(parts_));
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_sequence(std::span<const int> values) {
  Sequence parts;
  parts.reserve(values.size());
  for (int v : values) {
    if (v < 0) {
      throw Error(ErrorCode::InvalidPartition, "negative entry in sequence");
    }
    if (v > 0) parts.push_back(v);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Sequence Partition::head(int k) const {
  k = std::clamp(k, 0, size());
  return Sequence(parts_.begin(), parts_.begin() + k);
}

Sequence conjugate(std::span<const int> values, int length) {
  Sequence out(static_cast<std::size_t>(std::max(length, 0)), 0);
  for (int v : values) {
    for (int j = 0; j < std::min(v, length); ++j) ++out[static_cast<std::size_t>(j)];
  }
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  return Partition(conjugate(p.parts(), p[0]));
}

bool majorized_by(std::span<const int> s, std::span<const int> r) {
  const std::size_t len = std::max(s.size(), r.size());
  long long prefix_s = 0;
  long long prefix_r = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (k < s.size()) prefix_s += s[k];
    if (k < r.size()) prefix_r += r[k];
    if (prefix_s > prefix_r) return false;
  }
  return prefix_s == prefix_r;
}

bool majorized_by(const Partition& s, const Partition& r) {
  if (s.weight() != r.weight()) return false;
  return majorized_by(s.parts(), r.parts());
}

bool is_nonempty(const Partition& r, const Partition& s) {
  return r.weight() == s.weight() && majorized_by(s, conjugate(r));
}

bool margins_realizable(std::span<const int> row_sums,
                        std::span<const int> col_sums) {
  if (std::any_of(row_sums.begin(), row_sums.end(), [](int v) { return v < 0; }) ||
      std::any_of(col_sums.begin(), col_sums.end(), [](int v) { return v < 0; })) {
    return false;
  }
  const int n = static_cast<int>(col_sums.size());
  if (std::any_of(row_sums.begin(), row_sums.end(), [n](int v) { return v > n; })) {
    return false;
  }
  Sequence cols(col_sums.begin(), col_sums.end());
  std::sort(cols.begin(), cols.end(), std::greater<>());
  return majorized_by(cols, conjugate(row_sums, n));
}

Sequence parse_sequence(std::string_view text) {
  Sequence out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::Parse, "bad integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  return Partition(parse_sequence(text));
}

std::string format_sequence(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace ars
