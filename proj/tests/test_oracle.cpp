#include <set>

#include <doctest.h>

#include "ars/error.hpp"
#include "ars/flow.hpp"
#include "ars/oracle.hpp"
#include "ars/structure.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace ars;

TEST_CASE("enumeration of tiny classes") {
  const ClassListing a = enumerate_class({1, 1}, {1, 1});
  CHECK(a.complete);
  REQUIRE(a.matrices.size() == 2);
  CHECK(a.matrices[0] == BinaryMatrix{{1, 0}, {0, 1}});
  CHECK(a.matrices[1] == BinaryMatrix{{0, 1}, {1, 0}});
  CHECK(enumerate_class({2, 2}, {3, 1}).matrices.empty());
  CHECK(enumerate_class({3}, {1, 1, 1}).matrices.size() == 1);
}

TEST_CASE("permutation matrices number k factorial") {
  int factorial = 1;
  for (int k = 1; k <= 6; ++k) {
    factorial *= k;
    const Sequence ones(static_cast<std::size_t>(k), 1);
    const Partition p(ones);
    CHECK(enumerate_class(p, p).matrices.size() == static_cast<std::size_t>(factorial));
  }
}

TEST_CASE("enumerated matrices are distinct class members") {
  for (const auto& [r, s] : testing_support::small_pairs(4, 8)) {
    const ClassListing all = enumerate_class(r, s);
    std::set<std::vector<int>> seen;
    for (const auto& a : all.matrices) {
      CHECK(in_class(a, r, s));
      const IntMatrix v = a.to_int();
      seen.insert(std::vector<int>(v.data(), v.data() + v.size()));
    }
    CHECK(seen.size() == all.matrices.size());
  }
}

TEST_CASE("enumeration count matches exhaustive filtering") {
  const Partition r = {2, 2, 1}, s = {2, 2, 1};
  std::size_t direct = 0;
  testing_support::for_each_matrix(3, 3, [&](const BinaryMatrix& a) {
    if (in_class(a, r, s)) ++direct;
  });
  CHECK(enumerate_class(r, s).matrices.size() == direct);
}

TEST_CASE("budget stops the enumeration") {
  const Partition p = {1, 1, 1, 1};
  const ClassListing cut = enumerate_class(p, p, 10);
  CHECK_FALSE(cut.complete);
  CHECK(cut.matrices.size() == 10);
  const ClassListing exact = enumerate_class(p, p, 24);
  CHECK(exact.complete);
  CHECK(exact.matrices.size() == 24);
  const ClassListing unlimited = enumerate_class(p, p, std::nullopt);
  CHECK(unlimited.complete);
  CHECK(unlimited.matrices.size() == 24);
  CHECK_THROWS_AS(brute_min_t_term_rank(p, p, 1, 5), Error);
}

TEST_CASE("brute ranks") {
  const BinaryMatrix a = golden::flow_example();
  CHECK(brute_t_term_rank(a, 1) == 2);
  CHECK(brute_t_term_rank(a, 2) == 3);
  CHECK(brute_t_term_rank(a, 3) == 4);
  CHECK(brute_t_term_rank(BinaryMatrix(2, 3), 1) == 0);
}

TEST_CASE("brute minimum rank matches the closed form on small classes") {
  for (const auto& [r, s] : testing_support::small_pairs(4, 8)) {
    if (!is_nonempty(r, s)) {
      CHECK_THROWS_AS(brute_min_t_term_rank(r, s, 1), Error);
      continue;
    }
    for (int t = 1; t <= 4; ++t) {
      CHECK(brute_min_t_term_rank(r, s, t) == min_t_term_rank(r, s, t).value);
    }
  }
}

TEST_CASE("uniform minimizer search") {
  const UniformSearch found = find_uniform_minimizer({2, 1, 1}, {1, 1, 1, 1}, 2);
  REQUIRE(found.status == SearchStatus::Found);
  REQUIRE(found.matrix);
  CHECK(found.minima == std::vector<int>{3, 4});
  for (int k = 1; k <= 2; ++k) CHECK(t_term_rank(*found.matrix, k) == found.minima[k - 1]);
  const UniformSearch cut = find_uniform_minimizer({2, 1, 1}, {1, 1, 1, 1}, 2, 1);
  CHECK(cut.status == SearchStatus::Undetermined);
  CHECK_THROWS_AS(find_uniform_minimizer({2, 2}, {3, 1}, 2), Error);
}

TEST_CASE("every small class has a uniform minimizer up to t = 3") {
  // Classes this small are always witnessed; the 9x15 class is the smallest
  // known failure.
  int classes = 0;
  for (const auto& [r, s] : testing_support::small_pairs(3, 6)) {
    if (!is_nonempty(r, s)) continue;
    const UniformSearch u = find_uniform_minimizer(r, s, 3);
    CHECK(u.status == SearchStatus::Found);
    ++classes;
  }
  CHECK(classes > 20);
}
