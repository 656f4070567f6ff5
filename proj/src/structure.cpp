#include "ars/structure.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ars/error.hpp"

namespace ars {

namespace {

void require_same_weight(const Partition& r, const Partition& s) {
  if (r.weight() != s.weight()) {
    throw Error(ErrorCode::WeightMismatch,
                "weights differ: " + std::to_string(r.weight()) + " vs " +
                    std::to_string(s.weight()));
  }
}

void require_nonempty(const Partition& r, const Partition& s) {
  require_same_weight(r, s);
  if (!is_nonempty(r, s)) {
    throw Error(ErrorCode::EmptyClass, "no (0,1)-matrix has row sums " +
                                           format_sequence(r.parts()) + " and column sums " +
                                           format_sequence(s.parts()));
  }
}

}  // namespace

StructureTable structure_matrix(const Partition& r, const Partition& s) {
  require_same_weight(r, s);
  const int m = r.size();
  const int n = s.size();
  // tail[k] = R_{k+1} + ... + R_m, head[l] = S_1 + ... + S_l (1-based).
  std::vector<int> tail(static_cast<std::size_t>(m) + 1, 0);
  for (int k = m - 1; k >= 0; --k) tail[k] = tail[k + 1] + r[k];
  std::vector<int> head(static_cast<std::size_t>(n) + 1, 0);
  for (int l = 1; l <= n; ++l) head[l] = head[l - 1] + s[l - 1];

  StructureTable out{TableKind::Structure, Table(m + 1, n + 1)};
  for (int k = 0; k <= m; ++k) {
    for (int l = 0; l <= n; ++l) out.values(k, l) = k * l - head[l] + tail[k];
  }
  return out;
}

bool nonempty_by_structure(const StructureTable& t) {
  return t.values.size() == 0 || t.values.minCoeff() >= 0;
}

StructureTable phi_matrix(const StructureTable& t) {
  const int m = t.rows() - 1;
  const int n = t.cols() - 1;
  StructureTable out{TableKind::Phi, Table(m + 1, n + 1)};
  for (int k = 0; k <= m; ++k) {
    for (int l = 0; l <= n; ++l) {
      int best = std::numeric_limits<int>::max();
      for (int i1 = 0; i1 <= k; ++i1) {
        for (int j2 = 0; l + j2 <= n; ++j2) {
          const int upper = t(i1, l + j2);
          for (int i2 = 0; k + i2 <= m; ++i2) {
            for (int j1 = 0; j1 <= l; ++j1) {
              best = std::min(best, upper + t(k + i2, j1) + (k - i1) * (l - j1));
            }
          }
        }
      }
      out.values(k, l) = best;
    }
  }
  return out;
}

StructureTable phi_matrix(const Partition& r, const Partition& s) {
  require_nonempty(r, s);
  return phi_matrix(structure_matrix(r, s));
}

ClassTables analyze(const Partition& r, const Partition& s) {
  require_nonempty(r, s);
  StructureTable t = structure_matrix(r, s);
  StructureTable phi = phi_matrix(t);
  return ClassTables{r, s, std::move(t), std::move(phi)};
}

RankWitness min_t_term_rank(const ClassTables& tables, int t) {
  if (t < 1) throw Error(ErrorCode::BadRange, "t must be positive");
  RankWitness best{std::numeric_limits<int>::max(), -1, -1};
  for (int e = 0; e <= tables.m(); ++e) {
    for (int f = 0; f <= tables.n(); ++f) {
      if (!tables.coverable(e, f)) continue;
      const int value = t * e + f;
      if (value < best.value) best = {value, e, f};
    }
  }
  return best;
}

RankWitness min_t_term_rank(const Partition& r, const Partition& s, int t) {
  return min_t_term_rank(analyze(r, s), t);
}

bool cover_exists(const Partition& r, const Partition& s, int e, int f) {
  require_nonempty(r, s);
  if (e < 0 || e > r.size() || f < 0 || f > s.size()) {
    throw Error(ErrorCode::BadRange, "cover outside the matrix");
  }
  return analyze(r, s).coverable(e, f);
}

int psi(const StructureTable& t, int a, int b, int c, int d) {
  const int m = t.rows() - 1;
  const int n = t.cols() - 1;
  if (!(0 <= a && a < b && b <= m && 0 <= c && c < d && d <= n)) {
    throw Error(ErrorCode::BadRange, "psi needs 0 <= a < b <= m and 0 <= c < d <= n");
  }
  int best = std::numeric_limits<int>::max();
  for (int i1 = 0; i1 <= a; ++i1) {
    for (int i2 = 0; a + i2 <= b; ++i2) {
      for (int i3 = 0; b + i3 <= m; ++i3) {
        for (int j1 = 0; j1 <= c; ++j1) {
          for (int j2 = 0; c + j2 <= d; ++j2) {
            for (int j3 = 0; d + j3 <= n; ++j3) {
              const int value = t(i1, d + j3) + t(a + i2, c + j2) + t(b + i3, j1) +
                                (a - i1) * (d - c - j2) + (b - a - i2) * (c - j1) +
                                (a - i1) * (c - j1);
              best = std::min(best, value);
            }
          }
        }
      }
    }
  }
  return best;
}

int psi(const Partition& r, const Partition& s, int a, int b, int c, int d) {
  return psi(structure_matrix(r, s), a, b, c, d);
}

CoverPair CoverPair::ordered(int e1, int f1, int e2, int f2) {
  if (!(e1 < e2 && f1 > f2)) {
    throw Error(ErrorCode::BadCoverOrder,
                "covers must satisfy e1 < e2 and f1 > f2, got (" + std::to_string(e1) + "," +
                    std::to_string(f1) + ") and (" + std::to_string(e2) + "," +
                    std::to_string(f2) + ")");
  }
  return CoverPair{e1, f1, e2, f2};
}

bool two_cover_exists(const ClassTables& tables, const CoverPair& c) {
  if (!(0 <= c.e1 && c.e1 < c.e2 && c.e2 <= tables.m() && 0 <= c.f2 && c.f2 < c.f1 &&
        c.f1 <= tables.n())) {
    throw Error(ErrorCode::BadRange, "covers need 0 <= e1 < e2 <= m and 0 <= f2 < f1 <= n");
  }
  const StructureTable& t = tables.t;
  return psi(t, c.e1, c.e2, c.f2, c.f1) >= t(c.e2, c.f2) + t(c.e1, c.f1);
}

bool two_cover_exists(const Partition& r, const Partition& s, const CoverPair& covers) {
  return two_cover_exists(analyze(r, s), covers);
}

UniformHypotheses uniform_minimizer_hypotheses(const ClassTables& tables, int t) {
  if (t < 1) throw Error(ErrorCode::BadRange, "t must be positive");
  const int m = tables.m();
  const int n = tables.n();
  if (m <= 2 || n <= 2) {
    throw Error(ErrorCode::DimensionTooSmall, "needs more than two rows and two columns");
  }
  UniformHypotheses out;
  for (int f = 0; f <= n && out.f < 0; ++f) {
    if (tables.coverable(2, f)) out.f = f;
  }
  for (int f = 0; f <= n && out.f_prime < 0; ++f) {
    if (tables.coverable(1, f)) out.f_prime = f;
  }
  const int f = out.f;
  const int fp = out.f_prime;
  if (!(1 <= f && f < fp && fp < n)) return out;
  for (int j = f - 1; j < n; ++j) {
    if (tables.s[j] != 1) return out;
  }
  for (int k = 1; k <= t; ++k) {
    const int value = min_t_term_rank(tables, k).value;
    if (value != k + fp && value != 2 * k + f) return out;
  }
  out.holds = true;
  return out;
}

UniformHypotheses uniform_minimizer_hypotheses(const Partition& r, const Partition& s,
                                               int t) {
  require_nonempty(r, s);
  if (r.size() <= 2 || s.size() <= 2) {
    throw Error(ErrorCode::DimensionTooSmall, "needs more than two rows and two columns");
  }
  return uniform_minimizer_hypotheses(analyze(r, s), t);
}

}  // namespace ars
