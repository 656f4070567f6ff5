#pragma once

#include <optional>
#include <vector>

#include "ars/binary_matrix.hpp"
#include "ars/partition.hpp"

namespace ars {

/// Directed network with integral capacities and a current integral flow.
/// Every edge added through add_edge gets a paired residual edge; the pair
/// occupies consecutive slots (id, id ^ 1).
class FlowNetwork {
 public:
  struct Edge {
    int from = 0;
    int to = 0;
    int capacity = 0;
    int flow = 0;

    int residual() const noexcept { return capacity - flow; }
  };

  FlowNetwork(int node_count, int source, int sink);

  /// Returns the id of the forward edge.
  int add_edge(int from, int to, int capacity);

  /// Repeats breadth-first augmentation until no augmenting path is left and
  /// returns the value gained.
  int augment_to_max();

  /// One breadth-first augmenting path; returns the amount pushed (0 when
  /// none exists).
  int augment_once();

  int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int source() const noexcept { return source_; }
  int sink() const noexcept { return sink_; }
  int flow_value() const noexcept { return value_; }

  /// Forward edges only, in insertion order.
  std::vector<Edge> edges() const;
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  /// 0 <= flow <= capacity on forward edges and conservation at inner nodes.
  bool is_valid_flow() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  int source_;
  int sink_;
  int value_ = 0;
};

/// Node numbering shared by the bipartite networks below: source 0, rows
/// 1..m, columns m+1..m+n, sink m+n+1.
struct BipartiteLayout {
  int m = 0;
  int n = 0;

  int source() const noexcept { return 0; }
  int row(int i) const noexcept { return 1 + i; }
  int col(int j) const noexcept { return 1 + m + j; }
  int sink() const noexcept { return 1 + m + n; }
  int node_count() const noexcept { return m + n + 2; }
};

/// Source -> row i with capacity t, row i -> column j with capacity 1 when
/// a(i,j) = 1, column j -> sink with capacity 1. Zero initial flow.
FlowNetwork build_t_rank_network(const BinaryMatrix& a, int t);

/// Maximum number of 1s selectable with at most one per column and at most
/// t per row, as the value of a maximum flow.
int t_term_rank(const BinaryMatrix& a, int t);

/// A nonnegative integral matrix with entries bounded by `bounds`, row sums
/// r and column sums s, if one exists. Throws DimensionMismatch.
std::optional<IntMatrix> feasible_bounded(std::span<const int> r, std::span<const int> s,
                                          const IntMatrix& bounds);
std::optional<IntMatrix> feasible_bounded(const Partition& r, const Partition& s,
                                          const IntMatrix& bounds);

/// As feasible_bounded, for 0/1 bound matrices; the result is binary.
std::optional<BinaryMatrix> feasible_binary(const Partition& r, const Partition& s,
                                            const IntMatrix& bounds);

/// A class member satisfying every listed prefix cover simultaneously, found
/// by bounding entry (i,j) to 0 unless i < e or j < f for every cover.
/// Absence only rules out matrices that satisfy all covers as prefixes.
std::optional<BinaryMatrix> multi_cover_feasible(const Partition& r, const Partition& s,
                                                 const std::vector<CoverSpec>& covers);

}  // namespace ars
