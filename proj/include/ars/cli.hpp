#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ars::cli {

enum class Status { Ok, Infeasible, Undetermined, Error };

std::string_view to_string(Status status) noexcept;

/// Outcome of one command. Both renderings are produced from `payload`, so
/// they always carry the same data.
struct CommandResult {
  Status status = Status::Ok;
  nlohmann::json payload = nlohmann::json::object();
  /// Process exit code: nonzero only for usage or tool failures.
  int exit_code = 0;
  /// Help text, when help was requested.
  std::string help;
  /// The caller asked for JSON output.
  bool as_json = false;

  std::string render_text() const;
  std::string render_json() const;
};

/// Parses and runs one command line (without the program name). `input` is
/// read when a matrix file is given as "-".
CommandResult run(const std::vector<std::string>& args, std::istream& input);

/// Entry point used by the executable: runs and prints to stdout/stderr.
int main(int argc, char** argv);

}  // namespace ars::cli
