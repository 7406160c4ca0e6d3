#pragma once

#include <bitset>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/ideal.hpp"
#include "zdg/ring.hpp"

namespace zdg {

inline constexpr int kMaxGraphOrder = 256;
using VertexSet = std::bitset<kMaxGraphOrder>;
using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 with display labels.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Labels default to the vertex numbers.
  explicit SimpleGraph(int n, std::vector<std::string> labels = {});
  SimpleGraph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int edge_count() const { return m_; }
  bool empty() const { return n_ == 0; }
  /// Throws InvalidSpec for loops or out-of-range endpoints; repeated edges
  /// are ignored.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  const VertexSet& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::vector<int> neighbour_list(int v) const;
  int degree(int v) const { return static_cast<int>(neighbours(v).count()); }
  /// Edges (u, v) with u < v in increasing order.
  std::vector<Edge> edges() const;
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Subgraph induced by `vs`; vertex i of the result is vs[i].
  SimpleGraph induced(const std::vector<int>& vs) const;

  /// Same vertex count and edge set; labels are ignored.
  bool same_edges(const SimpleGraph& o) const;
  /// Every edge of this graph is an edge of `o` (same vertex numbering).
  bool edges_subset_of(const SimpleGraph& o) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// Families.
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int m, int n);
SimpleGraph complete_multipartite(const std::vector<int>& parts);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);

/// Zero-divisor graph: nonzero zero-divisors, adjacent when the product is 0.
/// Vertex i corresponds to elements[i].
struct RingGraph {
  SimpleGraph graph;
  std::vector<RingElem> elements;
};
RingGraph zero_divisor_graph(const RingTable& t);

/// Ideal-based zero-divisor graph. Vertices are ordered by (coset index,
/// element index), so with Q = R/I and t = |I| the vertex j*t + i is the i-th
/// element of the coset of the j-th vertex of the zero-divisor graph of Q.
/// Throws WholeRingIdeal.
RingGraph ideal_zero_divisor_graph(const IdealSet& i);

/// t-fold blow-up: vertex j*t + i is copy i of vertex j; copies of adjacent
/// vertices are adjacent, copies of one vertex are not.
SimpleGraph expand(const SimpleGraph& g, int t);

std::vector<std::vector<int>> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
/// nullopt when disconnected; 0 for graphs with at most one vertex.
std::optional<int> diameter(const SimpleGraph& g);
/// nullopt for forests.
std::optional<int> girth(const SimpleGraph& g);

/// Exact clique number; 0 for the empty graph. Throws TooLarge above 200
/// vertices.
int clique_number(const SimpleGraph& g);
/// Lexicographically least r-clique, if any.
std::optional<std::vector<int>> find_complete_subgraph(const SimpleGraph& g, int r);
/// Lexicographically least (A, B) with |A| = m, |B| = n and every A-B pair
/// adjacent; A is chosen first. Throws MTooLarge for m > 5.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_biclique(const SimpleGraph& g, int m, int n);
/// Largest n such that K_{m,n} is a subgraph with the m-side chosen from
/// g, together with a witness. Throws MTooLarge for m > 5.
std::optional<std::pair<std::vector<int>, std::vector<int>>> max_biclique(const SimpleGraph& g, int m);

/// Isomorphism-invariant certificate; equal certificates iff isomorphic.
/// Throws TooLarge if the search exceeds its leaf budget.
std::vector<std::uint64_t> canonical_certificate(const SimpleGraph& g);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

std::string export_dot(const SimpleGraph& g);
std::string export_json(const SimpleGraph& g, int indent = -1);
/// Inverse of export_json. Throws InvalidSpec.
SimpleGraph graph_from_json(std::string_view text);

}  // namespace zdg
