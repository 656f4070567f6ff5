#include "ars/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ars/binary_matrix.hpp"
#include "ars/construct.hpp"
#include "ars/counterexample.hpp"
#include "ars/error.hpp"
#include "ars/flow.hpp"
#include "ars/io.hpp"
#include "ars/oracle.hpp"
#include "ars/partition.hpp"
#include "ars/structure.hpp"

namespace ars::cli {

using nlohmann::json;

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Ok: return "ok";
    case Status::Infeasible: return "infeasible";
    case Status::Undetermined: return "undetermined";
    case Status::Error: return "error";
  }
  return "error";
}

namespace {

constexpr int kBruteCrossCheckLimit = 6;

CommandResult make(Status status, json payload, int exit_code = 0) {
  CommandResult r;
  r.status = status;
  r.payload = std::move(payload);
  r.exit_code = exit_code;
  return r;
}

CommandResult message(Status status, const std::string& text, int exit_code = 0) {
  return make(status, {{"kind", "message"}, {"message", text}}, exit_code);
}

CommandResult matrix_result(const BinaryMatrix& a) {
  return make(Status::Ok, {{"kind", "matrix"}, {"matrix", matrix_to_json(a)}});
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ARS_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, std::string("ARS_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultBudget;
}

std::string class_name(const Partition& r, const Partition& s) {
  return "A(" + format_sequence(r.parts()) + "; " + format_sequence(s.parts()) + ")";
}

StructureTable table_from_json(const json& j) {
  StructureTable t;
  t.kind = j.at("kind") == "T" ? TableKind::Structure : TableKind::Phi;
  const auto& rows = j.at("rows");
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  t.values.resize(m, n);
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < n; ++l) t.values(k, l) = rows[k][l].get<int>();
  }
  return t;
}

struct Inputs {
  std::string r;
  std::string s;
  std::string matrix_path;
  std::vector<std::string> covers;
  int t = 1;
  int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  std::optional<int> t_max;
  std::optional<std::uint64_t> budget;
  bool count_only = false;
};

std::pair<int, int> parse_cover(const std::string& text) {
  const Sequence v = parse_sequence(text);
  if (v.size() != 2) throw Error(ErrorCode::Parse, "cover must be 'e,f', got '" + text + "'");
  return {v[0], v[1]};
}

CommandResult cmd_nonempty(const Partition& r, const Partition& s) {
  const bool gale_ryser = is_nonempty(r, s);
  json payload = {{"kind", "verdict"}, {"gale_ryser", gale_ryser}};
  if (r.weight() == s.weight()) {
    const StructureTable t = structure_matrix(r, s);
    payload["structure_nonnegative"] = nonempty_by_structure(t);
    payload["structure_min_entry"] = t.values.minCoeff();
  } else {
    payload["structure_nonnegative"] = false;
    payload["weights"] = {r.weight(), s.weight()};
  }
  return make(gale_ryser ? Status::Ok : Status::Infeasible, std::move(payload));
}

CommandResult cmd_canonical(const Partition& r, const Partition& s) {
  if (!is_nonempty(r, s)) return message(Status::Infeasible, class_name(r, s) + " is empty");
  return matrix_result(ryser_canonical(r, s));
}

CommandResult cmd_table(const Partition& r, const Partition& s, bool phi) {
  if (phi && !is_nonempty(r, s)) {
    return message(Status::Infeasible, class_name(r, s) + " is empty");
  }
  const StructureTable t = phi ? phi_matrix(r, s) : structure_matrix(r, s);
  return make(Status::Ok, {{"kind", "table"}, {"table", table_to_json(t)}});
}

CommandResult cmd_min_rank(const Partition& r, const Partition& s, int t) {
  if (!is_nonempty(r, s)) return message(Status::Infeasible, class_name(r, s) + " is empty");
  const RankWitness w = min_t_term_rank(r, s, t);
  return make(Status::Ok,
              {{"kind", "min_rank"}, {"t", t}, {"value", w.value}, {"e", w.e}, {"f", w.f}});
}

CommandResult cmd_rank(const std::string& path, int t, std::istream& input) {
  BinaryMatrix a;
  if (path == "-") {
    a = read_matrix(input);
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::Parse, "cannot open " + path);
    a = read_matrix(file);
  }
  const int value = t_term_rank(a, t);
  json payload = {{"kind", "rank"}, {"t", t}, {"value", value}};
  if (a.rows() <= kBruteCrossCheckLimit && a.cols() <= kBruteCrossCheckLimit) {
    const int brute = brute_t_term_rank(a, t);
    payload["brute"] = brute;
    if (brute != value) {
      payload["kind"] = "message";
      payload["message"] = "flow rank " + std::to_string(value) + " disagrees with brute force " +
                           std::to_string(brute);
      return make(Status::Error, std::move(payload), 1);
    }
  }
  return make(Status::Ok, std::move(payload));
}

CommandResult cmd_construct_cover(const Partition& r, const Partition& s, int e, int f) {
  if (!is_nonempty(r, s)) return message(Status::Infeasible, class_name(r, s) + " is empty");
  if (!cover_exists(r, s, e, f)) {
    return message(Status::Infeasible, "no member of " + class_name(r, s) +
                                           " is covered by its first " + std::to_string(e) +
                                           " rows and first " + std::to_string(f) + " columns");
  }
  return matrix_result(modified_ryser(r, s, e, f));
}

CommandResult cmd_construct_two_cover(const Partition& r, const Partition& s,
                                      const std::vector<std::string>& cover_args) {
  if (cover_args.size() != 2) throw Error(ErrorCode::Parse, "give exactly two --cover options");
  const auto [e1, f1] = parse_cover(cover_args[0]);
  const auto [e2, f2] = parse_cover(cover_args[1]);
  if (!is_nonempty(r, s)) return message(Status::Infeasible, class_name(r, s) + " is empty");
  const CoverSpec first = CoverSpec::prefix(e1, f1);
  const CoverSpec second = CoverSpec::prefix(e2, f2);
  first.validate(r.size(), s.size());
  second.validate(r.size(), s.size());

  const ClassTables tables = analyze(r, s);
  bool feasible = false;
  if (e1 <= e2 && f1 <= f2) {
    feasible = tables.coverable(e1, f1);
  } else if (e2 <= e1 && f2 <= f1) {
    feasible = tables.coverable(e2, f2);
  } else {
    const CoverPair pair =
        e1 < e2 ? CoverPair::ordered(e1, f1, e2, f2) : CoverPair::ordered(e2, f2, e1, f1);
    feasible = two_cover_exists(tables, pair);
  }
  if (!feasible) {
    return message(Status::Infeasible, "no member of " + class_name(r, s) +
                                           " carries both covers (" + cover_args[0] + ") and (" +
                                           cover_args[1] + ")");
  }
  return matrix_result(two_cover_construct(r, s, first, second));
}

CommandResult cmd_enumerate(const Partition& r, const Partition& s, std::uint64_t budget,
                            bool count_only) {
  json matrices = json::array();
  const EnumerationOutcome outcome =
      ClassEnumeration(r, s, budget).run([&](const BinaryMatrix& a) {
        if (!count_only) matrices.push_back(matrix_to_json(a));
        return true;
      });
  json payload = {{"kind", count_only ? "count" : "matrices"},
                  {"count", outcome.visited},
                  {"complete", outcome.complete}};
  if (!count_only) payload["matrices"] = std::move(matrices);
  return make(outcome.complete ? Status::Ok : Status::Undetermined, std::move(payload));
}

CommandResult cmd_uniform_min(const Partition& r, const Partition& s, std::optional<int> t_max,
                              std::uint64_t budget) {
  if (!is_nonempty(r, s)) return message(Status::Infeasible, class_name(r, s) + " is empty");
  const int k = t_max.value_or(r.empty() ? 1 : r[0]);
  const UniformSearch search = find_uniform_minimizer(r, s, k, budget);
  switch (search.status) {
    case SearchStatus::Found: {
      CommandResult out = matrix_result(*search.matrix);
      out.payload["minima"] = search.minima;
      return out;
    }
    case SearchStatus::Absent:
      return make(Status::Infeasible,
                  {{"kind", "message"},
                   {"minima", search.minima},
                   {"message", "no member of " + class_name(r, s) +
                                   " attains every minimum k-term rank for k <= " +
                                   std::to_string(k)}});
    case SearchStatus::Undetermined:
      break;
  }
  return message(Status::Undetermined,
                 "undetermined by enumeration: class exceeds the budget of " +
                     std::to_string(budget) + " matrices (see verify-counterexample)");
}

CommandResult cmd_verify_counterexample() {
  const CounterexampleReport report = verify_counterexample();
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  const bool pass = report.pass();
  return make(pass ? Status::Ok : Status::Error,
              {{"kind", "report"},
               {"rows", format_sequence(counterexample_rows().parts())},
               {"cols", format_sequence(counterexample_cols().parts())},
               {"checks", std::move(checks)},
               {"pass", pass}},
              pass ? 0 : 1);
}

}  // namespace

std::string CommandResult::render_json() const {
  json doc = {{"status", std::string(to_string(status))}, {"payload", payload}};
  return doc.dump(2) + "\n";
}

std::string CommandResult::render_text() const {
  if (!help.empty()) return help;
  std::ostringstream out;
  if (status != Status::Ok) out << to_string(status) << '\n';
  const std::string kind = payload.value("kind", "");
  if (kind == "message") {
    out << payload.at("message").get<std::string>() << '\n';
  } else if (kind == "verdict") {
    out << "gale-ryser: " << (payload.at("gale_ryser").get<bool>() ? "nonempty" : "empty")
        << '\n';
    out << "structure matrix: "
        << (payload.at("structure_nonnegative").get<bool>() ? "nonnegative" : "has negative entry");
    if (payload.contains("structure_min_entry")) {
      out << " (min entry " << payload.at("structure_min_entry").get<int>() << ")";
    }
    out << '\n';
  } else if (kind == "matrix") {
    out << format_matrix_text(matrix_from_json(payload.at("matrix")));
  } else if (kind == "table") {
    out << format_table(table_from_json(payload.at("table")));
  } else if (kind == "value") {
    out << payload.at("value").get<int>() << '\n';
  } else if (kind == "min_rank") {
    out << payload.at("value").get<int>() << '\n'
        << "witness e=" << payload.at("e").get<int>() << " f=" << payload.at("f").get<int>()
        << '\n';
  } else if (kind == "rank") {
    out << payload.at("value").get<int>() << '\n';
    if (payload.contains("brute")) out << "brute force: " << payload.at("brute").get<int>() << '\n';
  } else if (kind == "matrices") {
    for (const json& m : payload.at("matrices")) {
      out << format_matrix_text(matrix_from_json(m)) << '\n';
    }
    out << "count " << payload.at("count").get<std::uint64_t>() << '\n';
  } else if (kind == "count") {
    out << "count " << payload.at("count").get<std::uint64_t>() << '\n';
  } else if (kind == "report") {
    out << "class A(" << payload.at("rows").get<std::string>() << "; "
        << payload.at("cols").get<std::string>() << ")\n";
    for (const json& c : payload.at("checks")) {
      out << (c.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ") << c.at("name").get<std::string>()
          << ": " << c.at("detail").get<std::string>() << '\n';
    }
    out << (payload.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

CommandResult run(const std::vector<std::string>& args, std::istream& input) {
  CLI::App app{"Analyze and construct (0,1)-matrices with prescribed row and column sums"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  Inputs in;
  const auto margins = [&](CLI::App* sub) {
    sub->add_option("-r,--rows", in.r, "Row sums, e.g. 6,5,4")->required();
    sub->add_option("-s,--cols", in.s, "Column sums, e.g. 7,3,3")->required();
  };

  auto* nonempty = app.add_subcommand("nonempty", "Gale-Ryser verdict with structure check");
  margins(nonempty);
  auto* canonical = app.add_subcommand("canonical", "Ryser canonical matrix");
  margins(canonical);
  auto* structure = app.add_subcommand("structure", "Structure matrix T");
  margins(structure);
  auto* phi = app.add_subcommand("phi", "Phi matrix");
  margins(phi);
  auto* psi_cmd = app.add_subcommand("psi", "Two-cover quantity psi(a,b;c,d)");
  margins(psi_cmd);
  psi_cmd->add_option("-a", in.a)->required();
  psi_cmd->add_option("-b", in.b)->required();
  psi_cmd->add_option("-c", in.c)->required();
  psi_cmd->add_option("-d", in.d)->required();
  auto* min_rank = app.add_subcommand("min-rank", "Minimum t-term rank of the class");
  margins(min_rank);
  min_rank->add_option("-t", in.t)->required()->check(CLI::PositiveNumber);
  auto* rank = app.add_subcommand("rank", "t-term rank of a matrix via max flow");
  rank->add_option("-t", in.t)->required()->check(CLI::PositiveNumber);
  rank->add_option("--matrix", in.matrix_path, "Matrix file, '-' for stdin")->required();
  auto* cover = app.add_subcommand("construct-cover", "Class member covered by (e rows, f cols)");
  margins(cover);
  cover->add_option("-e", in.e)->required();
  cover->add_option("-f", in.f)->required();
  auto* two_cover = app.add_subcommand("construct-two-cover", "Class member with two covers");
  margins(two_cover);
  two_cover->add_option("--cover", in.covers, "Prefix cover 'e,f' (give twice)")->required();
  auto* enumerate = app.add_subcommand("enumerate", "List the class by brute force");
  margins(enumerate);
  enumerate->add_option("--budget", in.budget, "Maximum matrices to visit");
  enumerate->add_flag("--count", in.count_only, "Print only the count");
  auto* uniform = app.add_subcommand("uniform-min", "Search for a uniform minimizer");
  margins(uniform);
  uniform->add_option("--tmax", in.t_max)->check(CLI::PositiveNumber);
  uniform->add_option("--budget", in.budget, "Maximum matrices to visit");
  auto* verify = app.add_subcommand("verify-counterexample", "Reproduce the 9x15 counterexample");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CommandResult out;
    out.help = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    CommandResult out = message(Status::Error, e.what(), 2);
    out.as_json = as_json;
    return out;
  }

  CommandResult out;
  try {
    const auto r = [&] { return parse_partition(in.r); };
    const auto s = [&] { return parse_partition(in.s); };
    if (*nonempty) {
      out = cmd_nonempty(r(), s());
    } else if (*canonical) {
      out = cmd_canonical(r(), s());
    } else if (*structure) {
      out = cmd_table(r(), s(), false);
    } else if (*phi) {
      out = cmd_table(r(), s(), true);
    } else if (*psi_cmd) {
      out = make(Status::Ok, {{"kind", "value"},
                              {"name", "psi"},
                              {"value", psi(r(), s(), in.a, in.b, in.c, in.d)}});
    } else if (*min_rank) {
      out = cmd_min_rank(r(), s(), in.t);
    } else if (*rank) {
      out = cmd_rank(in.matrix_path, in.t, input);
    } else if (*cover) {
      out = cmd_construct_cover(r(), s(), in.e, in.f);
    } else if (*two_cover) {
      out = cmd_construct_two_cover(r(), s(), in.covers);
    } else if (*enumerate) {
      out = cmd_enumerate(r(), s(), resolve_budget(in.budget), in.count_only);
    } else if (*uniform) {
      out = cmd_uniform_min(r(), s(), in.t_max, resolve_budget(in.budget));
    } else if (*verify) {
      out = cmd_verify_counterexample();
    }
  } catch (const Error& e) {
    out = message(Status::Error, e.what(), 2);
  }
  out.as_json = as_json;
  return out;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CommandResult result = run(args, std::cin);
  if (result.status == Status::Error && result.exit_code != 0 &&
      result.payload.value("kind", "") == "message" && !result.as_json) {
    std::cerr << "error: " << result.payload.at("message").get<std::string>() << '\n';
    return result.exit_code;
  }
  std::cout << (result.as_json ? result.render_json() : result.render_text());
  return result.exit_code;
}

}  // namespace ars::cli
