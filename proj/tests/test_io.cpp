#include <random>
#include <sstream>

#include <doctest.h>

#include "ars/error.hpp"
#include "ars/io.hpp"
#include "ars/structure.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace ars;

TEST_CASE("text matrices") {
  const BinaryMatrix a = parse_matrix_text("3 4\n1 1 1 1\n1 0 0 0\n1 0 0 0\n");
  CHECK(a == golden::flow_example());
  CHECK(format_matrix_text(a) == "3 4\n1 1 1 1\n1 0 0 0\n1 0 0 0\n");
  CHECK(parse_matrix_text("0 0\n").rows() == 0);
}

TEST_CASE("malformed text is rejected") {
  CHECK_THROWS_AS(parse_matrix_text(""), Error);
  CHECK_THROWS_AS(parse_matrix_text("2 2\n1 0\n"), Error);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n1 2\n"), Error);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n1 0 1\n"), Error);
  CHECK_THROWS_AS(parse_matrix_text("x 2\n"), Error);
}

TEST_CASE("json matrices") {
  const nlohmann::json j = matrix_to_json(golden::flow_example());
  CHECK(j.at("m") == 3);
  CHECK(j.at("n") == 4);
  CHECK(j.at("rows")[0] == nlohmann::json::array({1, 1, 1, 1}));
  CHECK(matrix_from_json(j) == golden::flow_example());
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"m", 1}, {"n", 1}, {"rows", {{2}}}}), Error);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"m", 2}, {"n", 1}, {"rows", {{1}}}}), Error);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::array()), Error);
}

TEST_CASE("reading detects the format") {
  std::istringstream text("2 2\n1 0\n0 1\n");
  CHECK(read_matrix(text) == BinaryMatrix{{1, 0}, {0, 1}});
  std::istringstream js(R"({"m":2,"n":2,"rows":[[0,1],[1,0]]})");
  CHECK(read_matrix(js) == BinaryMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("round trips") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMatrix a = testing_support::random_matrix(rng, 1 + trial % 7, 1 + trial % 5);
    CHECK(parse_matrix_text(format_matrix_text(a)) == a);
    CHECK(matrix_from_json(nlohmann::json::parse(matrix_to_json(a).dump())) == a);
  }
}

TEST_CASE("table output") {
  const StructureTable t = structure_matrix({1}, {1});
  CHECK(format_table(t) == "  | 0 1\n-------\n0 | 1 0\n1 | 0 0\n");
  const nlohmann::json j = table_to_json(t);
  CHECK(j.at("kind") == "T");
  CHECK(j.at("rows") == nlohmann::json::parse("[[1,0],[0,0]]"));
  CHECK(table_to_json(phi_matrix(Partition{1}, Partition{1})).at("kind") == "Phi");
}
