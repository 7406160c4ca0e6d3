#include <algorithm>
#include <deque>

#include "zdg/errors.hpp"
#include "zdg/graph.hpp"

namespace zdg {
namespace {

inline std::size_t first(const VertexSet& s) { return s._Find_first(); }
inline std::size_t next(const VertexSet& s, std::size_t i) { return s._Find_next(i); }

VertexSet all_vertices(int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v) s.set(static_cast<std::size_t>(v));
  return s;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int root) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{root};
  dist[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const auto& nb = g.neighbours(u);
    for (std::size_t v = first(nb); v < kMaxGraphOrder; v = next(nb, v)) {
      if (dist[v] < 0) {
        dist[v] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(static_cast<int>(v));
      }
    }
  }
  return dist;
}

// Greedy sequential colouring of `cand`; vertices come out in colour order.
void colour_sort(const SimpleGraph& g, VertexSet cand, std::vector<int>& order, std::vector<int>& colour) {
  order.clear();
  colour.clear();
  int c = 0;
  while (cand.any()) {
    ++c;
    VertexSet q = cand;
    while (q.any()) {
      const std::size_t v = first(q);
      q.reset(v);
      q &= ~g.neighbours(static_cast<int>(v));
      cand.reset(v);
      order.push_back(static_cast<int>(v));
      colour.push_back(c);
    }
  }
}

class MaxClique {
 public:
  explicit MaxClique(const SimpleGraph& g) : g_(g) {}

  int run() {
    if (g_.order() == 0) return 0;
    search(all_vertices(g_.order()), 0);
    return best_;
  }

 private:
  void search(VertexSet cand, int size) {
    std::vector<int> order, colour;
    colour_sort(g_, cand, order, colour);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (size + colour[k] <= best_) return;
      const int v = order[k];
      const VertexSet next_cand = cand & g_.neighbours(v);
      if (next_cand.none()) {
        best_ = std::max(best_, size + 1);
      } else {
        search(next_cand, size + 1);
      }
      cand.reset(static_cast<std::size_t>(v));
    }
  }

  const SimpleGraph& g_;
  int best_ = 0;
};

int colour_bound(const SimpleGraph& g, const VertexSet& cand) {
  std::vector<int> order, colour;
  colour_sort(g, cand, order, colour);
  return colour.empty() ? 0 : colour.back();
}

bool lex_clique(const SimpleGraph& g, int r, const VertexSet& cand, std::vector<int>& cur) {
  if (static_cast<int>(cur.size()) == r) return true;
  if (static_cast<int>(cur.size() + cand.count()) < r) return false;
  if (static_cast<int>(cur.size()) + colour_bound(g, cand) < r) return false;
  for (std::size_t v = first(cand); v < kMaxGraphOrder; v = next(cand, v)) {
    VertexSet rest = cand & g.neighbours(static_cast<int>(v));
    for (std::size_t u = first(rest); u < v && u < kMaxGraphOrder; u = next(rest, u)) rest.reset(u);
    cur.push_back(static_cast<int>(v));
    if (lex_clique(g, r, rest, cur)) return true;
    cur.pop_back();
  }
  return false;
}

void check_m(int m) {
  if (m > 5) throw MTooLarge("biclique search supports m <= 5, got " + std::to_string(m));
  if (m < 1) throw InvalidSpec("biclique side must be positive");
}

std::vector<int> first_n(const VertexSet& s, int n) {
  std::vector<int> out;
  for (std::size_t v = first(s); v < kMaxGraphOrder && static_cast<int>(out.size()) < n; v = next(s, v)) {
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// Depth-first over m-subsets A in lexicographic order; `common` is the common
// neighbourhood of the current prefix. `accept` decides whether to stop and
// `threshold` is the minimum common-neighbourhood size worth exploring.
template <class Accept>
bool biclique_dfs(const SimpleGraph& g, int m, std::size_t from, const VertexSet& common, std::vector<int>& a,
                  const int& threshold, Accept&& accept) {
  if (static_cast<int>(a.size()) == m) return accept(a, common);
  for (int v = static_cast<int>(from); v < g.order(); ++v) {
    if (g.degree(v) < threshold) continue;
    const VertexSet next_common = common & g.neighbours(v);
    if (static_cast<int>(next_common.count()) < threshold) continue;
    a.push_back(v);
    if (biclique_dfs(g, m, static_cast<std::size_t>(v + 1), next_common, a, threshold, accept)) return true;
    a.pop_back();
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const auto dist = bfs_distances(g, s);
    std::vector<int> members;
    for (int v = 0; v < g.order(); ++v) {
      if (dist[static_cast<std::size_t>(v)] >= 0) {
        comp[static_cast<std::size_t>(v)] = static_cast<int>(out.size());
        members.push_back(v);
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

std::optional<int> diameter(const SimpleGraph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<int> girth(const SimpleGraph& g) {
  int best = -1;
  const int n = g.order();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (best > 0 && 2 * dist[static_cast<std::size_t>(u)] + 1 >= best) break;
      for (int v : g.neighbour_list(u)) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

int clique_number(const SimpleGraph& g) {
  if (g.order() > 200) throw TooLarge("clique search is limited to 200 vertices");
  return MaxClique(g).run();
}

std::optional<std::vector<int>> find_complete_subgraph(const SimpleGraph& g, int r) {
  if (r < 1) throw InvalidSpec("clique size must be positive");
  std::vector<int> cur;
  if (lex_clique(g, r, all_vertices(g.order()), cur)) return cur;
  return std::nullopt;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_biclique(const SimpleGraph& g, int m, int n) {
  check_m(m);
  if (n < 1) throw InvalidSpec("biclique side must be positive");
  std::vector<int> a;
  std::vector<int> b;
  const int threshold = n;
  const bool found = biclique_dfs(g, m, 0, all_vertices(g.order()), a, threshold,
                                  [&](const std::vector<int>&, const VertexSet& common) {
                                    b = first_n(common, n);
                                    return true;
                                  });
  if (!found) return std::nullopt;
  return std::make_pair(a, b);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> max_biclique(const SimpleGraph& g, int m) {
  check_m(m);
  std::vector<int> a, best_a, best_b;
  int threshold = 1;
  biclique_dfs(g, m, 0, all_vertices(g.order()), a, threshold,
               [&](const std::vector<int>& cur, const VertexSet& common) {
                 best_a = cur;
                 best_b = first_n(common, static_cast<int>(common.count()));
                 threshold = static_cast<int>(common.count()) + 1;
                 return false;
               });
  if (best_a.empty()) return std::nullopt;
  return std::make_pair(best_a, best_b);
}

}  // namespace zdg
