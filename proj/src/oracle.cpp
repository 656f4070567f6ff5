#include "ars/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "ars/error.hpp"

namespace ars {

ClassEnumeration::ClassEnumeration(Sequence row_sums, Sequence col_sums,
                                   std::optional<std::uint64_t> budget)
    : row_sums_(std::move(row_sums)), col_sums_(std::move(col_sums)), budget_(budget) {}

namespace {

class Walker {
 public:
  Walker(const Sequence& rows, const Sequence& cols, std::optional<std::uint64_t> budget,
         const ClassEnumeration::Visitor& visit)
      : cols_(cols),
        capacity_(rows),
        entries_(Entries::Zero(static_cast<Eigen::Index>(rows.size()),
                               static_cast<Eigen::Index>(cols.size()))),
        budget_(budget),
        visit_(visit) {}

  EnumerationOutcome run() {
    column(0);
    return outcome_;
  }

 private:
  // Returns false once the walk must stop.
  bool column(int j) {
    if (j == static_cast<int>(cols_.size())) return emit();
    return choose(j, 0, cols_[static_cast<std::size_t>(j)]);
  }

  bool choose(int j, int start, int left) {
    const int m = static_cast<int>(capacity_.size());
    if (left == 0) {
      if (!margins_realizable(capacity_, std::span<const int>(cols_).subspan(
                                             static_cast<std::size_t>(j) + 1))) {
        return true;
      }
      return column(j + 1);
    }
    for (int i = start; i <= m - left; ++i) {
      if (capacity_[static_cast<std::size_t>(i)] == 0) continue;
      --capacity_[static_cast<std::size_t>(i)];
      entries_(i, j) = 1;
      const bool go_on = choose(j, i + 1, left - 1);
      entries_(i, j) = 0;
      ++capacity_[static_cast<std::size_t>(i)];
      if (!go_on) return false;
    }
    return true;
  }

  bool emit() {
    if (budget_ && outcome_.visited >= *budget_) {
      outcome_.complete = false;
      return false;
    }
    ++outcome_.visited;
    if (!visit_(BinaryMatrix(entries_))) {
      outcome_.complete = false;
      return false;
    }
    return true;
  }

  const Sequence& cols_;
  Sequence capacity_;
  Entries entries_;
  std::optional<std::uint64_t> budget_;
  const ClassEnumeration::Visitor& visit_;
  EnumerationOutcome outcome_;
};

}  // namespace

EnumerationOutcome ClassEnumeration::run(const Visitor& visit) const {
  if (std::accumulate(row_sums_.begin(), row_sums_.end(), 0) !=
          std::accumulate(col_sums_.begin(), col_sums_.end(), 0) ||
      !margins_realizable(row_sums_, col_sums_)) {
    return {};
  }
  return Walker(row_sums_, col_sums_, budget_, visit).run();
}

ClassListing enumerate_class(const Partition& r, const Partition& s,
                             std::optional<std::uint64_t> budget) {
  ClassListing out;
  const EnumerationOutcome outcome =
      ClassEnumeration(r, s, budget).run([&](const BinaryMatrix& a) {
        out.matrices.push_back(a);
        return true;
      });
  out.complete = outcome.complete;
  return out;
}

namespace {

struct RankSearch {
  const BinaryMatrix& a;
  int t;
  std::vector<int> used;
  int best = 0;

  void visit(int j, int selected) {
    const int n = a.cols();
    if (selected + (n - j) <= best) return;
    if (j == n) {
      best = selected;
      return;
    }
    for (int i = 0; i < a.rows(); ++i) {
      if (a(i, j) == 1 && used[static_cast<std::size_t>(i)] < t) {
        ++used[static_cast<std::size_t>(i)];
        visit(j + 1, selected + 1);
        --used[static_cast<std::size_t>(i)];
      }
    }
    visit(j + 1, selected);
  }
};

}  // namespace

int brute_t_term_rank(const BinaryMatrix& a, int t) {
  if (t < 1) throw Error(ErrorCode::BadRange, "t must be positive");
  RankSearch search{a, t, std::vector<int>(static_cast<std::size_t>(a.rows()), 0), 0};
  search.visit(0, 0);
  return search.best;
}

int brute_min_t_term_rank(const Partition& r, const Partition& s, int t,
                          std::optional<std::uint64_t> budget) {
  std::optional<int> best;
  const EnumerationOutcome outcome =
      ClassEnumeration(r, s, budget).run([&](const BinaryMatrix& a) {
        const int rank = brute_t_term_rank(a, t);
        if (!best || rank < *best) best = rank;
        return true;
      });
  if (!outcome.complete) {
    throw Error(ErrorCode::BudgetExceeded, "class larger than the enumeration budget");
  }
  if (!best) throw Error(ErrorCode::EmptyClass, "class is empty");
  return *best;
}

UniformSearch find_uniform_minimizer(const Partition& r, const Partition& s, int t_max,
                                     std::optional<std::uint64_t> budget) {
  if (t_max < 1) throw Error(ErrorCode::BadRange, "t_max must be positive");
  if (r.weight() != s.weight() || !is_nonempty(r, s)) {
    throw Error(ErrorCode::EmptyClass, "class is empty");
  }
  const auto ranks = [t_max](const BinaryMatrix& a) {
    std::vector<int> out;
    for (int k = 1; k <= t_max; ++k) out.push_back(brute_t_term_rank(a, k));
    return out;
  };

  UniformSearch out;
  std::vector<int> minima;
  const EnumerationOutcome first = ClassEnumeration(r, s, budget).run([&](const BinaryMatrix& a) {
    const std::vector<int> mine = ranks(a);
    if (minima.empty()) {
      minima = mine;
    } else {
      for (std::size_t k = 0; k < mine.size(); ++k) minima[k] = std::min(minima[k], mine[k]);
    }
    return true;
  });
  if (!first.complete) return out;

  out.status = SearchStatus::Absent;
  out.minima = minima;
  ClassEnumeration(r, s, budget).run([&](const BinaryMatrix& a) {
    if (ranks(a) != minima) return true;
    out.status = SearchStatus::Found;
    out.matrix = a;
    return false;
  });
  return out;
}

}  // namespace ars
