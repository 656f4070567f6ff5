#include "ars/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ars/error.hpp"
#include "ars/flow.hpp"

namespace ars {

SortPermutation SortPermutation::descending(std::span<const int> values) {
  SortPermutation p;
  p.order.resize(values.size());
  std::iota(p.order.begin(), p.order.end(), 0);
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  return p;
}

Sequence SortPermutation::apply(std::span<const int> values) const {
  Sequence out;
  out.reserve(order.size());
  for (int i : order) out.push_back(values[static_cast<std::size_t>(i)]);
  return out;
}

namespace {

struct Shift {
  Entries block;
  Sequence live;
};

// Shifting phase shared by the canonical construction and its column
// submatrix variant. `live` holds the row sums of the rows taking part; the
// block covers columns f..n-1 (0-based).
Shift shift_columns(Sequence live, std::span<const int> col_sums, int f) {
  const int rows = static_cast<int>(live.size());
  const int n = static_cast<int>(col_sums.size());
  for (int v : live) {
    if (v < 0 || v > n) {
      throw Error(ErrorCode::InfeasibleShift,
                  "row sum " + std::to_string(v) + " does not fit in " + std::to_string(n) +
                      " columns");
    }
  }
  Shift out{Entries::Zero(rows, n - f), {}};
  std::vector<int> candidates;
  for (int k = n - 1; k >= f; --k) {
    candidates.clear();
    for (int i = 0; i < rows; ++i) {
      if (live[i] > 0) candidates.push_back(i);
    }
    const int need = col_sums[static_cast<std::size_t>(k)];
    if (static_cast<int>(candidates.size()) < need) {
      throw Error(ErrorCode::InfeasibleShift, "column " + std::to_string(k) + " needs " +
                                                  std::to_string(need) + " ones, " +
                                                  std::to_string(candidates.size()) +
                                                  " rows available");
    }
    // Largest remaining sum first; bottommost row among equals.
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return live[a] != live[b] ? live[a] > live[b] : a > b;
    });
    for (int c = 0; c < need; ++c) {
      const int i = candidates[static_cast<std::size_t>(c)];
      out.block(i, k - f) = 1;
      --live[i];
    }
    for (int i = 0; i < rows; ++i) {
      if (live[i] > k) {
        throw Error(ErrorCode::InfeasibleShift, "row " + std::to_string(i) +
                                                    " no longer fits after column " +
                                                    std::to_string(k));
      }
    }
  }
  out.live = std::move(live);
  return out;
}

void check_cover_range(const Partition& r, const Partition& s, int e, int f) {
  if (e < 0 || e > r.size() || f < 0 || f > s.size()) {
    throw Error(ErrorCode::BadRange, "cover (" + std::to_string(e) + "," + std::to_string(f) +
                                         ") outside " + std::to_string(r.size()) + "x" +
                                         std::to_string(s.size()));
  }
}

// Residual top-left block: canonical matrix of the sorted residual margins,
// moved back to the original row and column order.
Entries residual_block(const Sequence& row_residual, const Sequence& col_residual) {
  const SortPermutation rows = SortPermutation::descending(row_residual);
  const SortPermutation cols = SortPermutation::descending(col_residual);
  const Sequence sorted_rows = rows.apply(row_residual);
  const Sequence sorted_cols = cols.apply(col_residual);
  if (!margins_realizable(sorted_rows, sorted_cols)) {
    throw Error(ErrorCode::ResidualInfeasible,
                "residual margins (" + format_sequence(row_residual) + ") and (" +
                    format_sequence(col_residual) + ") admit no (0,1)-matrix");
  }
  const BinaryMatrix sorted = ryser_canonical(sorted_rows, sorted_cols);
  Entries out = Entries::Zero(rows.size(), cols.size());
  for (int i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols.size(); ++j) {
      out(rows.order[static_cast<std::size_t>(i)], cols.order[static_cast<std::size_t>(j)]) =
          static_cast<std::uint8_t>(sorted(i, j));
    }
  }
  return out;
}

// Block layout for covers (e1 rows, f1 columns) and (e2 rows, f2 columns)
// with e1 <= e2 and f1 >= f2:
//   rows [0,e2) x cols [0,f1)   residual block
//   rows [0,e1) x cols [f1,n)   shifted block of R against S
//   rows [e2,m) x cols [0,f2)   transposed shifted block of S against R
// and zeros elsewhere.
BinaryMatrix assemble(const Partition& r, const Partition& s, int e1, int f1, int e2, int f2) {
  const int m = r.size();
  const int n = s.size();
  const ShiftedBlock top = canonical_column_submatrix(r, s, e1, f1);
  const ShiftedBlock left = canonical_column_submatrix(s, r, f2, e2);

  Sequence row_residual = r.head(e2);
  for (int i = 0; i < e1; ++i) row_residual[i] -= top.row_sums[i];
  Sequence col_residual = s.head(f1);
  for (int j = 0; j < f2; ++j) col_residual[j] -= left.row_sums[j];
  const auto negative = [](const Sequence& v) {
    return std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
  };
  if (negative(row_residual) || negative(col_residual)) {
    throw Error(ErrorCode::ResidualInfeasible, "shifted blocks exceed the margins");
  }

  Entries out = Entries::Zero(m, n);
  out.topLeftCorner(e2, f1) = residual_block(row_residual, col_residual);
  out.block(0, f1, e1, n - f1) = top.block.entries();
  out.block(e2, 0, m - e2, f2) = left.block.entries().transpose();
  return BinaryMatrix(std::move(out));
}

}  // namespace

BinaryMatrix ryser_canonical(std::span<const int> row_sums, std::span<const int> col_sums) {
  if (!margins_realizable(row_sums, col_sums) ||
      std::accumulate(row_sums.begin(), row_sums.end(), 0) !=
          std::accumulate(col_sums.begin(), col_sums.end(), 0)) {
    throw Error(ErrorCode::EmptyClass, "no (0,1)-matrix has row sums " +
                                           format_sequence(row_sums) + " and column sums " +
                                           format_sequence(col_sums));
  }
  Shift shift = shift_columns(Sequence(row_sums.begin(), row_sums.end()), col_sums, 0);
  return BinaryMatrix(std::move(shift.block));
}

BinaryMatrix ryser_canonical(const Partition& r, const Partition& s) {
  return ryser_canonical(r.parts(), s.parts());
}

ShiftedBlock canonical_column_submatrix(const Partition& r, const Partition& s, int e, int f) {
  check_cover_range(r, s, e, f);
  Shift shift = shift_columns(r.head(e), s.parts(), f);
  BinaryMatrix block(std::move(shift.block));
  Sequence sums = block.row_sums();
  return ShiftedBlock{std::move(block), std::move(sums)};
}

BinaryMatrix modified_ryser(const Partition& r, const Partition& s, int e, int f) {
  check_cover_range(r, s, e, f);
  if (r.weight() != s.weight()) throw Error(ErrorCode::WeightMismatch, "weights differ");
  return assemble(r, s, e, f, e, f);
}

BinaryMatrix two_cover_construct(const Partition& r, const Partition& s, const CoverPair& c) {
  CoverPair::ordered(c.e1, c.f1, c.e2, c.f2);
  check_cover_range(r, s, c.e1, c.f1);
  check_cover_range(r, s, c.e2, c.f2);
  if (r.weight() != s.weight()) throw Error(ErrorCode::WeightMismatch, "weights differ");
  return assemble(r, s, c.e1, c.f1, c.e2, c.f2);
}

BinaryMatrix two_cover_construct(const Partition& r, const Partition& s, const CoverSpec& first,
                                 const CoverSpec& second) {
  if (!first.is_prefix() || !second.is_prefix()) {
    throw Error(ErrorCode::BadRange, "two-cover construction takes prefix covers only");
  }
  check_cover_range(r, s, first.e, first.f);
  check_cover_range(r, s, second.e, second.f);
  if (first.e <= second.e && first.f <= second.f) return modified_ryser(r, s, first.e, first.f);
  if (second.e <= first.e && second.f <= first.f) {
    return modified_ryser(r, s, second.e, second.f);
  }
  const CoverSpec& fewer_rows = first.e < second.e ? first : second;
  const CoverSpec& more_rows = first.e < second.e ? second : first;
  return two_cover_construct(
      r, s, CoverPair::ordered(fewer_rows.e, fewer_rows.f, more_rows.e, more_rows.f));
}

std::vector<Interchange> interchange_path(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.row_sums() != b.row_sums() ||
      a.col_sums() != b.col_sums()) {
    throw Error(ErrorCode::NotSameClass, "matrices have different sizes or margins");
  }
  if (a == b) return {};
  const SortPermutation rows = SortPermutation::descending(a.row_sums());
  const SortPermutation cols = SortPermutation::descending(a.col_sums());
  const BinaryMatrix sorted =
      ryser_canonical(rows.apply(a.row_sums()), cols.apply(a.col_sums()));
  Entries target = Entries::Zero(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      target(rows.order[static_cast<std::size_t>(i)], cols.order[static_cast<std::size_t>(j)]) =
          static_cast<std::uint8_t>(sorted(i, j));
    }
  }

  // Fix target columns in the order the canonical construction filled them.
  // Within the unfixed columns a target row chosen for column k has at least
  // as many 1s as a row that was passed over, so the row losing its 1 in
  // column k always has a partner column for the interchange.
  const auto to_target = [&](BinaryMatrix x) {
    std::vector<Interchange> path;
    for (int p = x.cols() - 1; p >= 0; --p) {
      const int k = cols.order[static_cast<std::size_t>(p)];
      for (;;) {
        int extra = -1;
        int missing = -1;
        for (int i = 0; i < x.rows(); ++i) {
          if (x(i, k) == 1 && target(i, k) == 0 && extra < 0) extra = i;
          if (x(i, k) == 0 && target(i, k) == 1 && missing < 0) missing = i;
        }
        if (extra < 0) break;
        int partner = -1;
        for (int q = 0; q < p && partner < 0; ++q) {
          const int j = cols.order[static_cast<std::size_t>(q)];
          if (x(extra, j) == 0 && x(missing, j) == 1) partner = j;
        }
        if (partner < 0) {
          throw Error(ErrorCode::VerificationFailed, "no interchange reaches the canonical matrix");
        }
        const Interchange step{extra, missing, partner, k};
        x = apply_interchange(x, step);
        path.push_back(step);
      }
    }
    return path;
  };

  std::vector<Interchange> path = to_target(a);
  std::vector<Interchange> back = to_target(b);
  path.insert(path.end(), back.rbegin(), back.rend());
  return path;
}

std::optional<BinaryMatrix> construct_uniform_minimizer(const Partition& r, const Partition& s,
                                                        int t) {
  if (t < 1) throw Error(ErrorCode::BadRange, "t must be positive");
  if (!is_nonempty(r, s) || r.size() <= 2 || s.size() <= 2) return std::nullopt;
  const ClassTables tables = analyze(r, s);
  const UniformHypotheses hyp = uniform_minimizer_hypotheses(tables, t);
  if (!hyp.holds) return std::nullopt;
  BinaryMatrix a = two_cover_construct(r, s, CoverPair::ordered(1, hyp.f_prime, 2, hyp.f));
  for (int k = 1; k <= t; ++k) {
    const int expected = min_t_term_rank(tables, k).value;
    const int actual = t_term_rank(a, k);
    if (actual != expected) {
      throw Error(ErrorCode::VerificationFailed,
                  "built matrix has " + std::to_string(k) + "-term rank " +
                      std::to_string(actual) + ", class minimum is " + std::to_string(expected));
    }
  }
  return a;
}

}  // namespace ars
