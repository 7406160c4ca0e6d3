#include "zdg/genus.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <json.hpp>

#include "zdg/errors.hpp"

namespace zdg {

int genus_complete(int n) {
  if (n < 1) throw InvalidSpec("K_n needs n >= 1");
  if (n <= 4) return 0;
  return ((n - 3) * (n - 4) + 11) / 12;
}

int genus_biclique(int m, int n) {
  if (m < 1 || n < 1) throw InvalidSpec("K_{m,n} needs m, n >= 1");
  if (m <= 2 || n <= 2) return 0;
  return ((m - 2) * (n - 2) + 3) / 4;
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const SimpleGraph& g) {
  BoostGraph b(static_cast<std::size_t>(g.order()));
  int k = 0;
  for (const auto& [u, v] : g.edges()) {
    auto e = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), b).first;
    boost::put(boost::edge_index, b, e, k++);
  }
  return b;
}

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

bool is_planar(const SimpleGraph& g) {
  if (g.order() < 5 || g.edge_count() < 9) return true;
  BoostGraph b = to_boost(g);
  return boost::boyer_myrvold_planarity_test(b);
}

std::optional<RotationSystem> planar_embedding(const SimpleGraph& g) {
  BoostGraph b = to_boost(g);
  std::vector<std::vector<BoostEdge>> emb(static_cast<std::size_t>(g.order()));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                           boost::boyer_myrvold_params::embedding = &emb[0])) {
    return std::nullopt;
  }
  RotationSystem rot;
  rot.order.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    for (const auto& e : emb[static_cast<std::size_t>(v)]) {
      const auto s = static_cast<int>(boost::source(e, b));
      const auto t = static_cast<int>(boost::target(e, b));
      rot.order[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
    }
  }
  return rot;
}

int euler_lower_bound(const SimpleGraph& g) {
  const int v = g.order();
  const int e = g.edge_count();
  if (v < 3 || !is_connected(g)) return 0;
  int best = std::max(0, ceil_div(e - 3 * v + 6, 6));
  const auto gr = girth(g);
  if (!gr || *gr >= 4) best = std::max(best, ceil_div(e - 2 * v + 4, 4));
  return best;
}

SubgraphBound subgraph_lower_bound(const SimpleGraph& g) {
  SubgraphBound out;
  if (g.order() <= 200) {
    const int w = clique_number(g);
    if (w >= 1) {
      out.value = genus_complete(w);
      out.provenance = "K_" + std::to_string(w);
    }
  }
  for (int m = 3; m <= 5; ++m) {
    const auto bc = max_biclique(g, m);
    if (!bc) continue;
    const int n = static_cast<int>(bc->second.size());
    const int val = genus_biclique(m, n);
    if (val > out.value) {
      out.value = val;
      out.provenance = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    }
  }
  return out;
}

RotationSystem sorted_rotation(const SimpleGraph& g) {
  RotationSystem r;
  for (int v = 0; v < g.order(); ++v) r.order.push_back(g.neighbour_list(v));
  return r;
}

EmbeddingCertificate face_trace(const SimpleGraph& g, const RotationSystem& rot) {
  const int n = g.order();
  if (static_cast<int>(rot.order.size()) != n) throw InvalidSpec("rotation system has wrong vertex count");
  // next_after[v][u]: neighbour following u in the rotation at v.
  std::vector<std::vector<int>> next_after(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int v = 0; v < n; ++v) {
    const auto& cyc = rot.order[static_cast<std::size_t>(v)];
    if (static_cast<int>(cyc.size()) != g.degree(v)) throw InvalidSpec("rotation at vertex " + std::to_string(v) + " has wrong length");
    VertexSet seen;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int u = cyc[i];
      if (u < 0 || u >= n || !g.adjacent(v, u) || seen.test(static_cast<std::size_t>(u))) {
        throw InvalidSpec("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
      }
      seen.set(static_cast<std::size_t>(u));
      next_after[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = cyc[(i + 1) % cyc.size()];
    }
  }
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  int faces = 0;
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) == 0) ++faces;
    for (int v : g.neighbour_list(u)) {
      if (used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
      ++faces;
      int a = u, b = v;
      while (!used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        const int c = next_after[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        a = b;
        b = c;
      }
    }
  }
  const int c = static_cast<int>(connected_components(g).size());
  const int twice = 2 * c - n + g.edge_count() - faces;
  if (twice < 0 || twice % 2 != 0) throw Error("face count violates Euler's relation");
  return {rot, faces, twice / 2};
}

namespace {

std::vector<std::vector<int>> k4_sets(const SimpleGraph& g, std::size_t cap) {
  std::vector<std::vector<int>> out;
  const int n = g.order();
  for (int a = 0; a < n && out.size() < cap; ++a) {
    for (int b : g.neighbour_list(a)) {
      if (b <= a) continue;
      const VertexSet ab = g.neighbours(a) & g.neighbours(b);
      for (int c = b + 1; c < n && out.size() < cap; ++c) {
        if (!ab.test(static_cast<std::size_t>(c))) continue;
        const VertexSet abc = ab & g.neighbours(c);
        for (int d = c + 1; d < n && out.size() < cap; ++d) {
          if (abc.test(static_cast<std::size_t>(d))) out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

// Complement of `s` if the attachment hypotheses hold.
std::optional<std::vector<int>> attachment_complement(const SimpleGraph& g, const std::vector<int>& s,
                                                      std::string* why) {
  auto fail = [&](const std::string& w) -> std::optional<std::vector<int>> {
    if (why) *why = w;
    return std::nullopt;
  };
  if (s.size() != 4) return fail("attachment set must have 4 vertices");
  VertexSet in;
  for (int v : s) {
    if (v < 0 || v >= g.order()) return fail("attachment vertex out of range");
    in.set(static_cast<std::size_t>(v));
  }
  if (in.count() != 4) return fail("attachment vertices must be distinct");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!g.adjacent(s[i], s[j])) return fail("attachment set does not induce K4");
    }
    if ((g.neighbours(s[i]) & ~in).none()) return fail("attachment vertex without an edge to the rest");
  }
  std::vector<int> rest;
  for (int v = 0; v < g.order(); ++v) {
    if (!in.test(static_cast<std::size_t>(v))) rest.push_back(v);
  }
  if (rest.empty()) return fail("complement of the attachment set is empty");
  if (!is_connected(g.induced(rest))) return fail("complement of the attachment set is disconnected");
  if (!is_connected(g)) return fail("graph is disconnected");
  return rest;
}

GenusBounds component_lower(const SimpleGraph& g, const GenusOptions& opts) {
  GenusBounds b;
  auto raise = [&](int v, const std::string& why) {
    if (v > b.lower) {
      b.lower = v;
      b.lower_provenance = {why};
    }
  };
  raise(euler_lower_bound(g), "euler");
  if (b.lower >= opts.lower_target) return b;
  if (opts.planarity_bound && !is_planar(g)) raise(1, "nonplanar");
  if (b.lower >= opts.lower_target) return b;
  if (opts.subgraph_bound) {
    const auto s = subgraph_lower_bound(g);
    raise(s.value, s.provenance);
  }
  if (b.lower >= opts.lower_target) return b;
  if (opts.attachment_bound && g.order() <= 40 && g.order() >= 5) {
    GenusOptions inner = opts;
    inner.attachment_bound = false;
    for (const auto& s : k4_sets(g, 300)) {
      const auto rest = attachment_complement(g, s, nullptr);
      if (!rest) continue;
      const SimpleGraph h = g.induced(*rest);
      if (h.edge_count() < 9 && b.lower >= 1) continue;
      const int v = 1 + cheap_lower_bound(h, inner).lower;
      if (v > b.lower) {
        raise(v, "K4-attachment{" + g.label(s[0]) + "," + g.label(s[1]) + "," + g.label(s[2]) + "," +
                     g.label(s[3]) + "}");
      }
    }
  }
  return b;
}

}  // namespace

GenusBounds cheap_lower_bound(const SimpleGraph& g, const GenusOptions& opts) {
  GenusBounds total;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 3) continue;
    const auto b = component_lower(g.induced(comp), opts);
    total.lower += b.lower;
    for (const auto& p : b.lower_provenance) total.lower_provenance.push_back(p);
  }
  return total;
}

int k4_attachment_bound(const SimpleGraph& g, const std::vector<int>& s, const GenusOptions& opts) {
  std::string why;
  const auto rest = attachment_complement(g, s, &why);
  if (!rest) throw HypothesisNotMet(why);
  GenusOptions inner = opts;
  inner.attachment_bound = false;
  return 1 + cheap_lower_bound(g.induced(*rest), inner).lower;
}

std::string certificate_to_json(const EmbeddingCertificate& c, const SimpleGraph& g, int indent) {
  nlohmann::json j;
  j["genus"] = c.genus;
  j["faces"] = c.faces;
  j["vertices"] = g.order();
  j["edges"] = g.edge_count();
  j["labels"] = g.labels();
  j["rotation"] = c.rotation.order;
  return j.dump(indent);
}

EmbeddingCertificate certificate_from_json(std::string_view text, const SimpleGraph& g) {
  try {
    const auto j = nlohmann::json::parse(text);
    RotationSystem r;
    r.order = j.at("rotation").get<std::vector<std::vector<int>>>();
    return face_trace(g, r);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("certificate document: ") + e.what());
  }
}

}  // namespace zdg
