#include "zdg/graph.hpp"

#include <algorithm>

#include "zdg/errors.hpp"

namespace zdg {

SimpleGraph::SimpleGraph(int n, std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))), labels_(std::move(labels)) {
  if (n < 0 || n > kMaxGraphOrder) {
    throw TooLarge("graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxGraphOrder) + "]");
  }
  if (labels_.empty()) {
    for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
  if (static_cast<int>(labels_.size()) != n) throw InvalidSpec("label count does not match vertex count");
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : SimpleGraph(n, std::move(labels)) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidSpec("edge endpoint out of range");
  if (u == v) throw InvalidSpec("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
  adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  ++m_;
}

std::vector<int> SimpleGraph::neighbour_list(int v) const {
  std::vector<int> out;
  const auto& row = neighbours(v);
  for (int u = 0; u < n_; ++u) {
    if (row.test(static_cast<std::size_t>(u))) out.push_back(u);
  }
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vs) const {
  std::vector<std::string> labels;
  for (int v : vs) labels.push_back(label(v));
  SimpleGraph h(static_cast<int>(vs.size()), std::move(labels));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (adjacent(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

bool SimpleGraph::same_edges(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

bool SimpleGraph::edges_subset_of(const SimpleGraph& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if ((adj_[v] & ~o.adj_[v]).any()) return false;
  }
  return true;
}

}  // namespace zdg
