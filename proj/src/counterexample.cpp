#include "ars/counterexample.hpp"

#include <algorithm>
#include <set>

#include "ars/binary_matrix.hpp"
#include "ars/construct.hpp"
#include "ars/flow.hpp"
#include "ars/structure.hpp"

namespace ars {

Partition counterexample_rows() { return {6, 5, 4, 3, 3, 2, 2, 1, 1}; }

Partition counterexample_cols() { return {7, 3, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}; }

bool CounterexampleReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string cell(const char* name, int k, int l, int value) {
  return std::string(name) + "(" + std::to_string(k) + "," + std::to_string(l) +
         ")=" + std::to_string(value);
}

}  // namespace

CounterexampleReport verify_counterexample() {
  const Partition r = counterexample_rows();
  const Partition s = counterexample_cols();
  CounterexampleReport report;
  auto add = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const bool gale_ryser = is_nonempty(r, s);
  const StructureTable t = structure_matrix(r, s);
  add("class nonempty", gale_ryser && nonempty_by_structure(t),
      std::string("Gale-Ryser ") + (gale_ryser ? "yes" : "no") + ", min T entry " +
          std::to_string(t.values.minCoeff()));
  if (!gale_ryser) return report;

  const ClassTables tables = analyze(r, s);
  add("structure anchors",
      t(0, 0) == 27 && t(3, 3) == 8 && t(9, 15) == 108 && t(0, 15) == 0,
      cell("T", 0, 0, t(0, 0)) + " " + cell("T", 3, 3, t(3, 3)) + " " +
          cell("T", 9, 15, t(9, 15)) + " " + cell("T", 0, 15, t(0, 15)));
  const StructureTable& phi = tables.phi;
  add("phi anchors",
      phi(1, 9) == 9 && phi(2, 5) == 9 && phi(3, 3) == 8 && phi(3, 2) == 5 &&
          phi.values.row(0).isZero(),
      cell("Phi", 1, 9, phi(1, 9)) + " " + cell("Phi", 2, 5, phi(2, 5)) + " " +
          cell("Phi", 3, 3, phi(3, 3)) + " " + cell("Phi", 3, 2, phi(3, 2)));

  // Witness sets per t: every coverable (e,f) with t*e + f at the minimum.
  std::vector<std::vector<std::pair<int, int>>> witnesses;
  const std::vector<std::vector<std::pair<int, int>>> expected = {
      {{3, 3}}, {{2, 5}, {3, 3}}, {{2, 5}}, {{1, 9}, {2, 5}}, {{1, 9}}, {{0, 15}, {1, 9}}};
  for (int k = 1; k <= 6; ++k) {
    const RankWitness w = min_t_term_rank(tables, k);
    std::vector<std::pair<int, int>> all;
    for (int e = 0; e <= tables.m(); ++e) {
      for (int f = 0; f <= tables.n(); ++f) {
        if (tables.coverable(e, f) && k * e + f == w.value) all.emplace_back(e, f);
      }
    }
    std::string detail = std::to_string(w.value) + " =";
    for (auto [e, f] : all) {
      detail += " " + std::to_string(k) + "*" + std::to_string(e) + "+" + std::to_string(f);
    }
    add("minimum " + std::to_string(k) + "-term rank",
        w.value == kCounterexampleMinima[k - 1] && all == expected[static_cast<std::size_t>(k - 1)],
        detail);
    witnesses.push_back(std::move(all));
  }

  const UniformHypotheses hyp = uniform_minimizer_hypotheses(tables, 6);
  add("sufficient condition fails", !hyp.holds && !construct_uniform_minimizer(r, s, 6),
      "f=" + std::to_string(hyp.f) + " f'=" + std::to_string(hyp.f_prime));

  // Odometer over one witness per t.
  std::vector<std::size_t> pick(witnesses.size(), 0);
  bool all_absent = true;
  std::string first_feasible;
  for (;;) {
    std::set<std::pair<int, int>> distinct;
    for (std::size_t k = 0; k < pick.size(); ++k) distinct.insert(witnesses[k][pick[k]]);
    std::vector<CoverSpec> covers;
    for (auto [e, f] : distinct) covers.push_back(CoverSpec::prefix(e, f));
    ++report.combinations;
    if (multi_cover_feasible(r, s, covers) && all_absent) {
      all_absent = false;
      for (auto [e, f] : distinct) {
        first_feasible += "(" + std::to_string(e) + "," + std::to_string(f) + ")";
      }
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == witnesses[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  add("prefix-cover combinations infeasible", all_absent,
      std::to_string(report.combinations) + " combinations checked" +
          (all_absent ? "" : ", feasible: " + first_feasible));
  return report;
}

}  // namespace ars
