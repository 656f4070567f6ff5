#include <random>

#include <doctest.h>

#include "ars/construct.hpp"
#include "ars/error.hpp"
#include "ars/flow.hpp"
#include "ars/oracle.hpp"
#include "ars/structure.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace ars;

TEST_CASE("stable sort permutation") {
  const Sequence v = {1, 3, 1, 3, 0};
  const SortPermutation p = SortPermutation::descending(v);
  CHECK(p.order == std::vector<int>{1, 3, 0, 2, 4});
  CHECK(p.apply(v) == Sequence{3, 3, 1, 1, 0});
}

TEST_CASE("shifted blocks of the 7x9 example") {
  const Partition r = golden::example_rows(), s = golden::example_cols();
  const ShiftedBlock rows = canonical_column_submatrix(r, s, 2, 4);
  CHECK(rows.block == golden::shifted_rows_block());
  CHECK(rows.row_sums == Sequence{3, 2});
  const ShiftedBlock cols = canonical_column_submatrix(s, r, 3, 3);
  CHECK(cols.block == golden::shifted_cols_block());
  CHECK(cols.row_sums == Sequence{1, 2, 2});
  const ShiftedBlock none = canonical_column_submatrix(r, s, 2, 9);
  CHECK(none.block.cols() == 0);
  CHECK(none.row_sums == Sequence{0, 0});
}

TEST_CASE("single-cover construction of the 7x9 example") {
  const BinaryMatrix a = modified_ryser(golden::example_rows(), golden::example_cols(), 2, 4);
  CHECK(a == golden::single_cover_matrix());
}

TEST_CASE("two-cover construction of the 7x9 example") {
  const Partition r = golden::example_rows(), s = golden::example_cols();
  const BinaryMatrix a = two_cover_construct(r, s, CoverPair::ordered(2, 4, 3, 3));
  CHECK(a == golden::two_cover_matrix());
  CHECK(ryser_canonical(Sequence{2, 1, 0}, Sequence{2, 1, 0, 0}) == golden::residual_canonical());
  // Covers given in the other order give the same matrix.
  CHECK(two_cover_construct(r, s, CoverSpec::prefix(3, 3), CoverSpec::prefix(2, 4)) == a);
}

TEST_CASE("canonical matrix examples") {
  CHECK(ryser_canonical(Partition{1, 1}, Partition{1, 1}) == BinaryMatrix{{1, 0}, {0, 1}});
  CHECK(ryser_canonical(Partition{3}, Partition{1, 1, 1}) == BinaryMatrix{{1, 1, 1}});
  CHECK_THROWS_AS(ryser_canonical(Partition{2, 2}, Partition{3, 1}), Error);
}

TEST_CASE("canonical matrix is a deterministic class member") {
  for (const auto& [r, s] : testing_support::small_pairs()) {
    if (!is_nonempty(r, s)) continue;
    const BinaryMatrix a = ryser_canonical(r, s);
    CHECK(in_class(a, r, s));
    CHECK(ryser_canonical(r, s) == a);
  }
}

TEST_CASE("constructions succeed wherever the existence criteria hold") {
  int single = 0, pairs = 0;
  for (const auto& [r, s] : testing_support::small_pairs()) {
    if (!is_nonempty(r, s)) continue;
    const ClassTables ct = analyze(r, s);
    const int m = ct.m(), n = ct.n();
    for (int e = 0; e <= m; ++e) {
      for (int f = 0; f <= n; ++f) {
        if (!ct.coverable(e, f)) continue;
        const BinaryMatrix a = modified_ryser(r, s, e, f);
        CHECK(in_class(a, r, s));
        CHECK(is_covered(a, CoverSpec::prefix(e, f)));
        ++single;
      }
    }
    for (int e1 = 0; e1 <= m; ++e1)
      for (int e2 = e1 + 1; e2 <= m; ++e2)
        for (int f2 = 0; f2 <= n; ++f2)
          for (int f1 = f2 + 1; f1 <= n; ++f1) {
            const CoverPair p = CoverPair::ordered(e1, f1, e2, f2);
            if (!two_cover_exists(ct, p)) continue;
            const BinaryMatrix a = two_cover_construct(r, s, p);
            CHECK(in_class(a, r, s));
            CHECK(is_covered(a, CoverSpec::prefix(e1, f1)));
            CHECK(is_covered(a, CoverSpec::prefix(e2, f2)));
            ++pairs;
          }
  }
  CHECK(single > 1000);
  CHECK(pairs > 1000);
}

TEST_CASE("shifting residuals add up to the prefix margins") {
  for (const auto& [r, s] : testing_support::small_pairs(4, 8)) {
    if (!is_nonempty(r, s)) continue;
    const ClassTables ct = analyze(r, s);
    for (int e = 0; e <= ct.m(); ++e) {
      for (int f = 0; f <= ct.n(); ++f) {
        if (!ct.coverable(e, f)) continue;
        const ShiftedBlock b = canonical_column_submatrix(r, s, e, f);
        const BinaryMatrix a = modified_ryser(r, s, e, f);
        // Row i < e of the result is its residual part plus its shifted part.
        for (int i = 0; i < e; ++i) {
          int residual = 0;
          for (int j = 0; j < f; ++j) residual += a(i, j);
          CHECK(residual + b.row_sums[static_cast<std::size_t>(i)] == r[i]);
        }
        for (int j = f; j < ct.n(); ++j) {
          int shifted = 0;
          for (int i = 0; i < e; ++i) shifted += b.block(i, j - f);
          CHECK(shifted == s[j]);
        }
      }
    }
  }
}

TEST_CASE("shifting fails loudly when the class has no such cover") {
  const Partition r = golden::example_rows(), s = golden::example_cols();
  try {
    modified_ryser(r, s, 1, 4);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::InfeasibleShift || e.code() == ErrorCode::ResidualInfeasible));
  }
  try {
    canonical_column_submatrix(Partition{1, 1}, Partition{1, 1}, 1, 0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleShift);
  }
}

TEST_CASE("dominated covers reduce to one cover") {
  const Partition r = golden::example_rows(), s = golden::example_cols();
  const BinaryMatrix a = two_cover_construct(r, s, CoverSpec::prefix(2, 4), CoverSpec::prefix(3, 5));
  CHECK(a == modified_ryser(r, s, 2, 4));
  CHECK(two_cover_construct(r, s, CoverSpec::prefix(2, 4), CoverSpec::prefix(2, 4)) == a);
  CHECK_THROWS_AS(two_cover_construct(r, s, CoverSpec::explicit_sets({1}, {0}), CoverSpec::prefix(2, 4)),
                  Error);
}

TEST_CASE("interchange paths") {
  const BinaryMatrix a = {{0, 1}, {1, 0}};
  const BinaryMatrix b = {{1, 0}, {0, 1}};
  const auto path = interchange_path(a, b);
  REQUIRE(path.size() == 1);
  CHECK(path[0] == Interchange{0, 1, 0, 1});
  CHECK(interchange_path(a, a).empty());
  CHECK_THROWS_AS(interchange_path(a, BinaryMatrix{{1, 1}, {0, 0}}), Error);
}

TEST_CASE("interchange paths replay through the class") {
  std::mt19937 rng(3);
  const std::vector<std::pair<Partition, Partition>> classes = {
      {{2, 2, 1}, {2, 2, 1}}, {{3, 2, 2, 1}, {2, 2, 2, 1, 1}}, {{4, 2, 2, 2, 1, 1, 1}, {2, 2, 2, 2, 1, 1, 1, 1, 1}}};
  for (const auto& [r, s] : classes) {
    const ClassListing all = enumerate_class(r, s, 5000);
    REQUIRE(all.matrices.size() > 1);
    std::uniform_int_distribution<std::size_t> pick(0, all.matrices.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const BinaryMatrix& x = all.matrices[pick(rng)];
      const BinaryMatrix& y = all.matrices[pick(rng)];
      BinaryMatrix cur = x;
      for (const auto& step : interchange_path(x, y)) {
        cur = apply_interchange(cur, step);
        CHECK(in_class(cur, r, s));
      }
      CHECK(cur == y);
    }
  }
}

TEST_CASE("uniform minimizer construction") {
  const Partition cr = {6, 5, 4, 3, 3, 2, 2, 1, 1};
  const Partition cs = {7, 3, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK_FALSE(construct_uniform_minimizer(cr, cs, 6));
  CHECK_FALSE(construct_uniform_minimizer({1, 1}, {1, 1}, 1));
  const std::vector<std::pair<Partition, Partition>> good = {
      {{2, 1, 1}, {1, 1, 1, 1}}, {{1, 1, 1, 1}, {1, 1, 1, 1}}, {{3, 1, 1}, {1, 1, 1, 1, 1}}};
  for (const auto& [r, s] : good) {
    const auto a = construct_uniform_minimizer(r, s, r[0]);
    REQUIRE(a);
    CHECK(in_class(*a, r, s));
    for (int k = 1; k <= r[0]; ++k) CHECK(t_term_rank(*a, k) == min_t_term_rank(r, s, k).value);
  }
}
