#pragma once

#include <Eigen/Core>

#include "ars/partition.hpp"

namespace ars {

using Table = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class TableKind { Structure, Phi };

/// (m+1) x (n+1) integer table indexed from 0, holding either the
/// structure matrix T or the Phi matrix of a pair (R, S).
struct StructureTable {
  TableKind kind = TableKind::Structure;
  Table values;

  int rows() const noexcept { return static_cast<int>(values.rows()); }
  int cols() const noexcept { return static_cast<int>(values.cols()); }
  int operator()(int k, int l) const { return values(k, l); }
};

/// t(k,l) = k*l - (S_1 + ... + S_l) + (R_{k+1} + ... + R_m).
/// Throws WeightMismatch.
StructureTable structure_matrix(const Partition& r, const Partition& s);

/// True iff every entry of the structure matrix is nonnegative.
bool nonempty_by_structure(const StructureTable& t);

/// phi(k,l) = min t(i1, l+j2) + t(k+i2, j1) + (k-i1)(l-j1) over
/// 0 <= i1 <= k <= k+i2 <= m and 0 <= j1 <= l <= l+j2 <= n.
/// Throws WeightMismatch or EmptyClass.
StructureTable phi_matrix(const Partition& r, const Partition& s);
StructureTable phi_matrix(const StructureTable& t);

/// T and Phi of a nonempty class, computed once.
struct ClassTables {
  Partition r;
  Partition s;
  StructureTable t;
  StructureTable phi;

  int m() const noexcept { return r.size(); }
  int n() const noexcept { return s.size(); }
  /// Some class member has all its 1s in the first e rows and first f columns.
  bool coverable(int e, int f) const { return phi(e, f) == t(e, f); }
};

/// Throws WeightMismatch or EmptyClass.
ClassTables analyze(const Partition& r, const Partition& s);

struct RankWitness {
  int value = 0;
  int e = 0;
  int f = 0;
};

/// Minimum t-term rank over the class: min t*e + f over cells with
/// phi(e,f) == t(e,f). Ties go to the smallest e, then the smallest f.
RankWitness min_t_term_rank(const Partition& r, const Partition& s, int t);
RankWitness min_t_term_rank(const ClassTables& tables, int t);

/// Some class member is covered by its first e rows and first f columns.
bool cover_exists(const Partition& r, const Partition& s, int e, int f);

/// Two-cover quantity psi(a,b;c,d) for 0 <= a < b <= m, 0 <= c < d <= n,
/// by direct minimization over its six free indices.
/// Throws BadRange or WeightMismatch.
int psi(const Partition& r, const Partition& s, int a, int b, int c, int d);
int psi(const StructureTable& t, int a, int b, int c, int d);

/// Two prefix covers, normalized so that the first uses fewer rows and more
/// columns: e1 < e2 and f1 > f2.
struct CoverPair {
  int e1 = 0;
  int f1 = 0;
  int e2 = 0;
  int f2 = 0;

  /// Throws BadCoverOrder unless e1 < e2 and f1 > f2.
  static CoverPair ordered(int e1, int f1, int e2, int f2);
  friend bool operator==(const CoverPair&, const CoverPair&) = default;
};

/// Some class member is covered both by (e1 rows, f1 columns) and by
/// (e2 rows, f2 columns): psi(e1,e2; f2,f1) >= t(e2,f2) + t(e1,f1).
/// Throws BadRange or EmptyClass.
bool two_cover_exists(const Partition& r, const Partition& s, const CoverPair& covers);
bool two_cover_exists(const ClassTables& tables, const CoverPair& covers);

/// Outcome of checking the sufficient condition for a single class member
/// to realize the minimum k-term rank for every k <= t.
struct UniformHypotheses {
  bool holds = false;
  /// Smallest column count coverable together with the first two rows.
  int f = -1;
  /// Smallest column count coverable together with the first row.
  int f_prime = -1;
};

/// Requires m > 2 and n > 2 (DimensionTooSmall) and a nonempty class.
/// Holds iff 1 <= f < f' < n, S_f = ... = S_n = 1 (1-based), and for all
/// 1 <= k <= t the minimum k-term rank is k + f' or 2k + f.
UniformHypotheses uniform_minimizer_hypotheses(const Partition& r,
                                               const Partition& s, int t);
UniformHypotheses uniform_minimizer_hypotheses(const ClassTables& tables, int t);

}  // namespace ars
