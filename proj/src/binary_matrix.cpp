#include "ars/binary_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "ars/error.hpp"

namespace ars {

BinaryMatrix::BinaryMatrix(int m, int n) : entries_(Entries::Zero(m, n)) {
  if (m < 0 || n < 0) throw Error(ErrorCode::DimensionMismatch, "negative size");
  refresh_sums();
}

BinaryMatrix::BinaryMatrix(Entries entries) : entries_(std::move(entries)) {
  if ((entries_.array() > 1).any()) {
    throw Error(ErrorCode::DimensionMismatch, "entries must be 0 or 1");
  }
  refresh_sums();
}

BinaryMatrix::BinaryMatrix(const IntMatrix& values) {
  if (values.size() > 0 && ((values.array() < 0).any() || (values.array() > 1).any())) {
    throw Error(ErrorCode::DimensionMismatch, "entries must be 0 or 1");
  }
  entries_ = values.cast<std::uint8_t>();
  refresh_sums();
}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> data;
  for (const auto& row : rows) data.emplace_back(row);
  *this = from_rows(data);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix values(m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    }
    for (int j = 0; j < n; ++j) values(i, j) = rows[i][j];
  }
  return BinaryMatrix(values);
}

void BinaryMatrix::refresh_sums() {
  const IntMatrix values = entries_.cast<int>();
  row_sums_.assign(static_cast<std::size_t>(rows()), 0);
  col_sums_.assign(static_cast<std::size_t>(cols()), 0);
  if (values.size() == 0) return;
  Eigen::VectorXi r = values.rowwise().sum();
  Eigen::RowVectorXi c = values.colwise().sum();
  std::copy(r.data(), r.data() + r.size(), row_sums_.begin());
  std::copy(c.data(), c.data() + c.size(), col_sums_.begin());
}

int BinaryMatrix::weight() const noexcept {
  return std::accumulate(row_sums_.begin(), row_sums_.end(), 0);
}

BinaryMatrix BinaryMatrix::transpose() const {
  return BinaryMatrix(Entries(entries_.transpose()));
}

CoverSpec CoverSpec::explicit_sets(std::vector<int> rows, std::vector<int> cols) {
  CoverSpec c;
  c.e = static_cast<int>(rows.size());
  c.f = static_cast<int>(cols.size());
  c.row_set = std::move(rows);
  c.col_set = std::move(cols);
  return c;
}

namespace {

void check_index_set(const std::vector<int>& set, int count, int bound,
                     const char* what) {
  if (static_cast<int>(set.size()) != count) {
    throw Error(ErrorCode::BadRange, std::string(what) + " set size differs from count");
  }
  std::vector<int> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::BadRange, std::string(what) + " set has duplicates");
  }
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= bound)) {
    throw Error(ErrorCode::BadRange, std::string(what) + " index out of range");
  }
}

}  // namespace

void CoverSpec::validate(int m, int n) const {
  if (e < 0 || e > m || f < 0 || f > n) {
    throw Error(ErrorCode::BadRange, "cover (" + std::to_string(e) + "," +
                                         std::to_string(f) + ") outside " +
                                         std::to_string(m) + "x" + std::to_string(n));
  }
  if (row_set) check_index_set(*row_set, e, m, "row");
  if (col_set) check_index_set(*col_set, f, n, "column");
}

bool in_class(const BinaryMatrix& a, std::span<const int> r, std::span<const int> s) {
  return a.rows() == static_cast<int>(r.size()) && a.cols() == static_cast<int>(s.size()) &&
         std::equal(r.begin(), r.end(), a.row_sums().begin()) &&
         std::equal(s.begin(), s.end(), a.col_sums().begin());
}

bool in_class(const BinaryMatrix& a, const Partition& r, const Partition& s) {
  return in_class(a, r.parts(), s.parts());
}

BinaryMatrix apply_interchange(const BinaryMatrix& a, const Interchange& x) {
  const auto in_rows = [&](int i) { return i >= 0 && i < a.rows(); };
  const auto in_cols = [&](int j) { return j >= 0 && j < a.cols(); };
  if (!in_rows(x.i1) || !in_rows(x.i2) || !in_cols(x.j1) || !in_cols(x.j2) ||
      x.i1 == x.i2 || x.j1 == x.j2) {
    throw Error(ErrorCode::InvalidInterchange, "indices out of range or repeated");
  }
  const int p = a(x.i1, x.j1);
  const bool diagonal = p == 1 && a(x.i1, x.j2) == 0 && a(x.i2, x.j1) == 0 && a(x.i2, x.j2) == 1;
  const bool anti = p == 0 && a(x.i1, x.j2) == 1 && a(x.i2, x.j1) == 1 && a(x.i2, x.j2) == 0;
  if (!diagonal && !anti) {
    throw Error(ErrorCode::InvalidInterchange, "submatrix is not [[1,0],[0,1]] or [[0,1],[1,0]]");
  }
  Entries e = a.entries();
  for (int i : {x.i1, x.i2}) {
    for (int j : {x.j1, x.j2}) e(i, j) = static_cast<std::uint8_t>(1 - e(i, j));
  }
  return BinaryMatrix(std::move(e));
}

bool is_covered(const BinaryMatrix& a, const CoverSpec& cover) {
  cover.validate(a.rows(), a.cols());
  std::vector<char> row_in(static_cast<std::size_t>(a.rows()), 0);
  std::vector<char> col_in(static_cast<std::size_t>(a.cols()), 0);
  if (cover.row_set) {
    for (int i : *cover.row_set) row_in[static_cast<std::size_t>(i)] = 1;
  } else {
    std::fill_n(row_in.begin(), cover.e, 1);
  }
  if (cover.col_set) {
    for (int j : *cover.col_set) col_in[static_cast<std::size_t>(j)] = 1;
  } else {
    std::fill_n(col_in.begin(), cover.f, 1);
  }
  for (int i = 0; i < a.rows(); ++i) {
    if (row_in[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 1 && !col_in[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

CoverValue min_cover_value(const BinaryMatrix& a, int t) {
  if (t < 1) throw Error(ErrorCode::BadRange, "t must be positive");
  const int m = a.rows();
  const int n = a.cols();
  std::optional<CoverValue> best;
  // Subsets by size, each size in lexicographic order; only strict
  // improvements replace the incumbent.
  for (int e = 0; e <= m; ++e) {
    std::vector<char> mask(static_cast<std::size_t>(m), 0);
    std::fill_n(mask.begin(), e, 1);
    do {
      std::vector<int> rows;
      std::vector<int> cols;
      for (int i = 0; i < m; ++i) {
        if (mask[static_cast<std::size_t>(i)]) rows.push_back(i);
      }
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
          if (!mask[static_cast<std::size_t>(i)] && a(i, j) == 1) {
            cols.push_back(j);
            break;
          }
        }
      }
      const int value = t * e + static_cast<int>(cols.size());
      if (!best || value < best->value) {
        best = CoverValue{value, CoverSpec::explicit_sets(std::move(rows), std::move(cols))};
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return *best;
}

}  // namespace ars
