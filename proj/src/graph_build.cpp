#include <algorithm>

#include "zdg/errors.hpp"
#include "zdg/graph.hpp"

namespace zdg {

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph complete_bipartite(int m, int n) { return complete_multipartite({m, n}); }

SimpleGraph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  const int n = static_cast<int>(part_of.size());
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InvalidSpec("cycle needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

RingGraph zero_divisor_graph(const RingTable& t) {
  const auto zd = zero_divisors(t);
  std::vector<std::string> labels;
  for (RingElem e : zd) labels.push_back(t.label(e));
  SimpleGraph g(static_cast<int>(zd.size()), std::move(labels));
  for (std::size_t i = 0; i < zd.size(); ++i) {
    for (std::size_t j = i + 1; j < zd.size(); ++j) {
      if (t.mul(zd[i], zd[j]) == t.zero()) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return {std::move(g), zd};
}

RingGraph ideal_zero_divisor_graph(const IdealSet& ideal) {
  if (ideal.is_whole()) throw WholeRingIdeal("graph of the whole ring as ideal");
  const RingTable& t = ideal.ring();
  const int n = t.order();
  const QuotientRing q = quotient(ideal);
  std::vector<RingElem> verts;
  for (int x = 0; x < n; ++x) {
    if (ideal.contains(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (!ideal.contains(y) && ideal.contains(t.mul(x, y))) {
        verts.push_back(x);
        break;
      }
    }
  }
  std::stable_sort(verts.begin(), verts.end(), [&](RingElem a, RingElem b) {
    return q.projection[static_cast<std::size_t>(a)] < q.projection[static_cast<std::size_t>(b)];
  });
  std::vector<std::string> labels;
  for (RingElem e : verts) labels.push_back(t.label(e));
  SimpleGraph g(static_cast<int>(verts.size()), std::move(labels));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (ideal.contains(t.mul(verts[i], verts[j]))) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return {std::move(g), std::move(verts)};
}

SimpleGraph expand(const SimpleGraph& g, int t) {
  if (t < 1) throw InvalidSpec("expansion factor must be positive");
  const int n = g.order();
  std::vector<std::string> labels;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < t; ++i) labels.push_back(g.label(j) + "#" + std::to_string(i));
  }
  SimpleGraph h(n * t, std::move(labels));
  for (const auto& [u, v] : g.edges()) {
    for (int a = 0; a < t; ++a) {
      for (int b = 0; b < t; ++b) h.add_edge(u * t + a, v * t + b);
    }
  }
  return h;
}

}  // namespace zdg
