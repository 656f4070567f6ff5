#include "ars/flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "ars/error.hpp"

namespace ars {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : adjacency_(static_cast<std::size_t>(node_count)), source_(source), sink_(sink) {}

int FlowNetwork::add_edge(int from, int to, int capacity) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({from, to, capacity, 0});
  edges_.push_back({to, from, 0, 0});
  adjacency_[static_cast<std::size_t>(from)].push_back(id);
  adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

int FlowNetwork::augment_once() {
  std::vector<int> via(adjacency_.size(), -1);
  std::vector<char> seen(adjacency_.size(), 0);
  std::queue<int> frontier;
  frontier.push(source_);
  seen[static_cast<std::size_t>(source_)] = 1;
  while (!frontier.empty() && !seen[static_cast<std::size_t>(sink_)]) {
    const int u = frontier.front();
    frontier.pop();
    for (int id : adjacency_[static_cast<std::size_t>(u)]) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.residual() <= 0 || seen[static_cast<std::size_t>(e.to)]) continue;
      seen[static_cast<std::size_t>(e.to)] = 1;
      via[static_cast<std::size_t>(e.to)] = id;
      frontier.push(e.to);
    }
  }
  if (!seen[static_cast<std::size_t>(sink_)]) return 0;

  int push = std::numeric_limits<int>::max();
  for (int v = sink_; v != source_;) {
    const Edge& e = edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])];
    push = std::min(push, e.residual());
    v = e.from;
  }
  for (int v = sink_; v != source_;) {
    const int id = via[static_cast<std::size_t>(v)];
    edges_[static_cast<std::size_t>(id)].flow += push;
    edges_[static_cast<std::size_t>(id ^ 1)].flow -= push;
    v = edges_[static_cast<std::size_t>(id)].from;
  }
  value_ += push;
  return push;
}

int FlowNetwork::augment_to_max() {
  int gained = 0;
  while (const int pushed = augment_once()) gained += pushed;
  return gained;
}

std::vector<FlowNetwork::Edge> FlowNetwork::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size() / 2);
  for (std::size_t id = 0; id < edges_.size(); id += 2) out.push_back(edges_[id]);
  return out;
}

bool FlowNetwork::is_valid_flow() const {
  std::vector<long long> balance(adjacency_.size(), 0);
  for (std::size_t id = 0; id < edges_.size(); id += 2) {
    const Edge& e = edges_[id];
    if (e.flow < 0 || e.flow > e.capacity) return false;
    if (edges_[id + 1].flow != -e.flow) return false;
    balance[static_cast<std::size_t>(e.from)] -= e.flow;
    balance[static_cast<std::size_t>(e.to)] += e.flow;
  }
  for (std::size_t v = 0; v < balance.size(); ++v) {
    if (static_cast<int>(v) == source_ || static_cast<int>(v) == sink_) continue;
    if (balance[v] != 0) return false;
  }
  return balance[static_cast<std::size_t>(sink_)] == value_;
}

FlowNetwork build_t_rank_network(const BinaryMatrix& a, int t) {
  if (t < 1) throw Error(ErrorCode::BadRange, "t must be positive");
  const BipartiteLayout layout{a.rows(), a.cols()};
  FlowNetwork net(layout.node_count(), layout.source(), layout.sink());
  for (int i = 0; i < a.rows(); ++i) net.add_edge(layout.source(), layout.row(i), t);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 1) net.add_edge(layout.row(i), layout.col(j), 1);
    }
  }
  for (int j = 0; j < a.cols(); ++j) net.add_edge(layout.col(j), layout.sink(), 1);
  return net;
}

int t_term_rank(const BinaryMatrix& a, int t) {
  FlowNetwork net = build_t_rank_network(a, t);
  return net.augment_to_max();
}

std::optional<IntMatrix> feasible_bounded(std::span<const int> r, std::span<const int> s,
                                          const IntMatrix& bounds) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(s.size());
  if (bounds.rows() != m || bounds.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "bound matrix must be " + std::to_string(m) +
                                                  "x" + std::to_string(n));
  }
  if (bounds.size() > 0 && bounds.minCoeff() < 0) {
    throw Error(ErrorCode::DimensionMismatch, "bounds must be nonnegative");
  }
  const int weight = std::accumulate(r.begin(), r.end(), 0);
  if (weight != std::accumulate(s.begin(), s.end(), 0)) return std::nullopt;

  const BipartiteLayout layout{m, n};
  FlowNetwork net(layout.node_count(), layout.source(), layout.sink());
  for (int i = 0; i < m; ++i) net.add_edge(layout.source(), layout.row(i), r[i]);
  IntMatrix edge_id = IntMatrix::Constant(m, n, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (bounds(i, j) > 0) edge_id(i, j) = net.add_edge(layout.row(i), layout.col(j), bounds(i, j));
    }
  }
  for (int j = 0; j < n; ++j) net.add_edge(layout.col(j), layout.sink(), s[j]);
  if (net.augment_to_max() != weight) return std::nullopt;

  IntMatrix out = IntMatrix::Zero(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (edge_id(i, j) >= 0) out(i, j) = net.edge(edge_id(i, j)).flow;
    }
  }
  return out;
}

std::optional<IntMatrix> feasible_bounded(const Partition& r, const Partition& s,
                                          const IntMatrix& bounds) {
  return feasible_bounded(r.parts(), s.parts(), bounds);
}

std::optional<BinaryMatrix> feasible_binary(const Partition& r, const Partition& s,
                                            const IntMatrix& bounds) {
  if (bounds.size() > 0 && bounds.maxCoeff() > 1) {
    throw Error(ErrorCode::DimensionMismatch, "binary bounds must be 0 or 1");
  }
  auto values = feasible_bounded(r, s, bounds);
  if (!values) return std::nullopt;
  return BinaryMatrix(*values);
}

std::optional<BinaryMatrix> multi_cover_feasible(const Partition& r, const Partition& s,
                                                 const std::vector<CoverSpec>& covers) {
  const int m = r.size();
  const int n = s.size();
  IntMatrix bounds = IntMatrix::Ones(m, n);
  for (const CoverSpec& c : covers) {
    if (!c.is_prefix()) {
      throw Error(ErrorCode::BadRange, "multi-cover feasibility takes prefix covers only");
    }
    c.validate(m, n);
    for (int i = c.e; i < m; ++i) {
      for (int j = c.f; j < n; ++j) bounds(i, j) = 0;
    }
  }
  return feasible_binary(r, s, bounds);
}

}  // namespace ars
