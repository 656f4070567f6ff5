#include <cstdlib>
#include <sstream>

#include <doctest.h>

#include "ars/cli.hpp"
#include "ars/io.hpp"
#include "golden.hpp"

using namespace ars;
using cli::CommandResult;
using cli::Status;

namespace {

CommandResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return cli::run(args, in);
}

const char* kRows = "6,5,4,3,3,2,2,1,1";
const char* kCols = "7,3,3,2,2,1,1,1,1,1,1,1,1,1,1";

}  // namespace

TEST_CASE("min-rank of the 9x15 class") {
  const CommandResult r = run({"min-rank", "-r", kRows, "-s", kCols, "-t", "3"});
  CHECK(r.status == Status::Ok);
  CHECK(r.exit_code == 0);
  CHECK(r.render_text() == "11\nwitness e=2 f=5\n");
  CHECK(r.payload.at("value") == 11);
}

TEST_CASE("rank reads a matrix from stdin") {
  const CommandResult r = run({"rank", "-t", "2", "--matrix", "-"}, "3 4\n1 1 1 1\n1 0 0 0\n1 0 0 0\n");
  CHECK(r.status == Status::Ok);
  CHECK(r.payload.at("value") == 3);
  CHECK(r.payload.at("brute") == 3);
  const CommandResult j = run({"rank", "-t", "1", "--matrix", "-"}, R"({"m":1,"n":2,"rows":[[1,1]]})");
  CHECK(j.payload.at("value") == 1);
}

TEST_CASE("empty class is infeasible, not an error") {
  const CommandResult r = run({"nonempty", "-r", "2,2", "-s", "3,1"});
  CHECK(r.status == Status::Infeasible);
  CHECK(r.exit_code == 0);
  CHECK(r.payload.at("gale_ryser") == false);
  const CommandResult c = run({"construct-cover", "-r", "4,2,2,2,1,1,1", "-s", "2,2,2,2,1,1,1,1,1",
                               "-e", "1", "-f", "4"});
  CHECK(c.status == Status::Infeasible);
}

TEST_CASE("json output is stable") {
  const std::vector<std::string> args = {"--json", "structure", "-r", "1", "-s", "1"};
  const CommandResult a = run(args);
  const CommandResult b = run(args);
  CHECK(a.as_json);
  CHECK(a.render_json() == b.render_json());
  const auto doc = nlohmann::json::parse(a.render_json());
  CHECK(doc.at("status") == "ok");
  CHECK(doc.at("payload").at("table").at("rows") == nlohmann::json::parse("[[1,0],[0,0]]"));
}

TEST_CASE("constructed matrices re-parse") {
  const CommandResult r = run({"construct-two-cover", "-r", "4,2,2,2,1,1,1", "-s",
                               "2,2,2,2,1,1,1,1,1", "--cover", "2,4", "--cover", "3,3"});
  REQUIRE(r.status == Status::Ok);
  CHECK(parse_matrix_text(r.render_text()) == golden::two_cover_matrix());
  CHECK(matrix_from_json(r.payload.at("matrix")) == golden::two_cover_matrix());
  const CommandResult c = run({"construct-cover", "-r", "4,2,2,2,1,1,1", "-s", "2,2,2,2,1,1,1,1,1",
                               "-e", "2", "-f", "4"});
  CHECK(parse_matrix_text(c.render_text()) == golden::single_cover_matrix());
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run({}).exit_code != 0);
  CHECK(run({"min-rank", "-r", "2,1"}).exit_code != 0);
  CHECK(run({"bogus"}).exit_code != 0);
  const CommandResult bad = run({"min-rank", "-r", "1,2", "-s", "2,1", "-t", "1"});
  CHECK(bad.status == Status::Error);
  CHECK(bad.exit_code != 0);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("budget comes from the environment when not given") {
  ::setenv("ARS_BUDGET", "5", 1);
  const CommandResult cut = run({"enumerate", "-r", "1,1,1,1", "-s", "1,1,1,1", "--count"});
  CHECK(cut.payload.at("count") == 5);
  CHECK(cut.payload.at("complete") == false);
  CHECK(cut.status == Status::Undetermined);
  const CommandResult flag =
      run({"enumerate", "-r", "1,1,1,1", "-s", "1,1,1,1", "--count", "--budget", "100"});
  CHECK(flag.payload.at("count") == 24);
  CHECK(flag.payload.at("complete") == true);
  ::unsetenv("ARS_BUDGET");
  const CommandResult def = run({"enumerate", "-r", "1,1,1", "-s", "1,1,1", "--count"});
  CHECK(def.payload.at("count") == 6);
}

TEST_CASE("uniform-min reports found matrices") {
  const CommandResult r = run({"uniform-min", "-r", "2,1,1", "-s", "1,1,1,1", "--tmax", "2"});
  CHECK(r.status == Status::Ok);
  CHECK(r.payload.at("minima") == nlohmann::json::array({3, 4}));
}

TEST_CASE("verify-counterexample passes") {
  const CommandResult r = run({"verify-counterexample"});
  CHECK(r.status == Status::Ok);
  CHECK(r.payload.at("pass") == true);
  const std::string text = r.render_text();
  CHECK(text.find("\nPASS\n") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
}
