#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zdg/catalog.hpp"
#include "zdg/classify.hpp"
#include "zdg/errors.hpp"
#include "zdg/graph.hpp"
#include "zdg/ideal.hpp"

using namespace zdg;

namespace {

RingTable named(const char* name) { return build_ring(spec_from_name(name)); }

std::vector<bool> indicator(const IdealSet& i) {
  std::vector<bool> in(static_cast<std::size_t>(i.ring().order()), false);
  for (RingElem a : i.elements()) in[a] = true;
  return in;
}

}  // namespace

TEST_CASE("ideal graphs match the definition on every catalog pair") {
  for (const auto& t : catalog_rings()) {
    if (t.order() > 32) continue;
    for (const auto& i : enumerate_ideals(t)) {
      if (i.is_whole()) continue;
      const RingGraph rg = ideal_zero_divisor_graph(i);
      const oracle::DefGraph d = oracle::ideal_graph_by_definition(t, indicator(i));
      std::vector<int> verts(rg.elements.begin(), rg.elements.end());
      std::sort(verts.begin(), verts.end());
      REQUIRE(verts == d.vertices);
      std::set<std::pair<int, int>> edges;
      for (auto [u, v] : rg.graph.edges()) {
        const int a = rg.elements[u], b = rg.elements[v];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
      CHECK(edges == d.edges);
    }
  }
}

TEST_CASE("small zero-divisor graphs") {
  const SimpleGraph z6 = zero_divisor_graph(build_ring(zmod(6))).graph;
  CHECK(are_isomorphic(z6, path_graph(3)));
  const SimpleGraph z4 = zero_divisor_graph(build_ring(zmod(4))).graph;
  CHECK(z4.order() == 1);
  CHECK(z4.edge_count() == 0);
  CHECK(zero_divisor_graph(named("F_9")).graph.order() == 0);

  const SimpleGraph k24 = ideal_zero_divisor_graph(synthesized_instance(build_ring(zmod(6)), 2).ideal).graph;
  CHECK(k24.order() == 6);
  CHECK(are_isomorphic(k24, complete_bipartite(2, 4)));
  const SimpleGraph k6 = ideal_zero_divisor_graph(synthesized_instance(build_ring(zmod(9)), 3).ideal).graph;
  CHECK(are_isomorphic(k6, complete_graph(6)));
  const RingTable z12 = build_ring(zmod(12));
  CHECK(ideal_zero_divisor_graph(zero_ideal(z12)).graph.same_edges(zero_divisor_graph(z12).graph));
}

TEST_CASE("expansion") {
  CHECK(are_isomorphic(expand(complete_bipartite(2, 3), 3), complete_bipartite(6, 9)));
  CHECK(are_isomorphic(expand(complete_graph(4), 2), complete_multipartite({2, 2, 2, 2})));
  CHECK(are_isomorphic(expand(cycle_graph(5), 1), cycle_graph(5)));
  const SimpleGraph e = expand(path_graph(3), 4);
  for (int j = 0; j < 3; ++j) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) CHECK_FALSE(e.adjacent(j * 4 + a, j * 4 + b));
    }
  }
}

TEST_CASE("invariants agree with brute force on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const SimpleGraph g = oracle::random_graph(rng, n, 0.15 + 0.7 * (trial % 10) / 10.0);
    const auto a = oracle::adjacency(g);
    const int d = oracle::diameter(a);
    if (d < 0) {
      CHECK_FALSE(diameter(g).has_value());
    } else {
      CHECK(diameter(g) == d);
    }
    CHECK(girth(g) == oracle::girth(a));
    const int w = oracle::clique_by_subsets(a);
    CHECK(clique_number(g) == w);
    CHECK(find_complete_subgraph(g, w).has_value());
    CHECK_FALSE(find_complete_subgraph(g, w + 1).has_value());
  }
}

TEST_CASE("fixed invariants") {
  CHECK(diameter(path_graph(3)) == 2);
  CHECK(diameter(complete_graph(6)) == 1);
  CHECK(diameter(SimpleGraph(0)) == 0);
  const SimpleGraph z8 = ideal_zero_divisor_graph(synthesized_instance(build_ring(zmod(8)), 2).ideal).graph;
  CHECK(diameter(z8) == 2);
  CHECK(girth(complete_bipartite(2, 4)) == 4);
  CHECK(girth(complete_graph(6)) == 3);
  CHECK_FALSE(girth(path_graph(3)).has_value());
  CHECK(clique_number(zero_divisor_graph(named("Z_2xZ_2xZ_2")).graph) == 3);
  CHECK(clique_number(complete_bipartite(3, 3)) == 2);
  CHECK(clique_number(SimpleGraph(0)) == 0);
  // A 4-cycle has clique number 2 and still contains a cycle.
  CHECK(clique_number(cycle_graph(4)) == 2);
  CHECK(girth(cycle_graph(4)) == 4);
  CHECK_THROWS_AS(clique_number(SimpleGraph(201)), TooLarge);
}

TEST_CASE("complete and biclique subgraphs") {
  CHECK(find_complete_subgraph(complete_graph(6), 5).has_value());
  CHECK_FALSE(find_complete_subgraph(path_graph(3), 3).has_value());
  const RingGraph z16 = zero_divisor_graph(build_ring(zmod(16)));
  const auto tri = find_complete_subgraph(z16.graph, 3);
  REQUIRE(tri.has_value());
  std::vector<std::string> labels;
  for (int v : *tri) labels.push_back(z16.graph.label(v));
  CHECK(labels == std::vector<std::string>{"4", "8", "12"});

  CHECK(find_biclique(zero_divisor_graph(named("Z_2xZ_9")).graph, 2, 3).has_value());
  const auto k24 = find_biclique(complete_bipartite(2, 4), 2, 4);
  REQUIRE(k24.has_value());
  for (int a : k24->first) {
    for (int b : k24->second) CHECK(complete_bipartite(2, 4).adjacent(a, b));
  }
  CHECK_FALSE(find_biclique(path_graph(3), 2, 2).has_value());
  CHECK_THROWS_AS(find_biclique(complete_graph(8), 6, 1), MTooLarge);
}

TEST_CASE("isomorphism under random relabeling") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const SimpleGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 14), 0.4);
    const SimpleGraph h = oracle::relabel(g, oracle::random_permutation(rng, g.order()));
    CHECK(are_isomorphic(g, h));
    CHECK(canonical_certificate(g) == canonical_certificate(h));
  }
  SimpleGraph two_triangles(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(are_isomorphic(two_triangles, cycle_graph(6)));
  CHECK_FALSE(are_isomorphic(complete_bipartite(3, 3), cycle_graph(6)));
}

TEST_CASE("exports") {
  const SimpleGraph p3 = path_graph(3);
  const std::string dot = export_dot(p3);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 5);
  CHECK(dot.find("--") != std::string::npos);
  CHECK(export_dot(SimpleGraph(0)).find("--") == std::string::npos);
  const SimpleGraph k33 = complete_bipartite(3, 3);
  const SimpleGraph back = graph_from_json(export_json(k33));
  CHECK(back.same_edges(k33));
  CHECK(back.labels() == k33.labels());
  CHECK(export_json(k33) == export_json(k33));
  CHECK_THROWS_AS(graph_from_json("{\"vertices\": 2, \"edges\": [[0, 5]]}"), InvalidSpec);
}

TEST_CASE("structure of ideal graphs across the catalog") {
  for (const auto& t : catalog_rings()) {
    for (const auto& i : enumerate_ideals(t)) {
      if (i.is_zero() || i.is_whole()) continue;
      const SimpleGraph g = ideal_zero_divisor_graph(i).graph;
      const SimpleGraph gq = zero_divisor_graph(quotient(i).table).graph;
      CHECK(g.order() == i.size() * gq.order());
      const SimpleGraph ex = expand(gq, i.size());
      CHECK(ex.edges_subset_of(g));
      CHECK(ex.same_edges(g) == is_radical(i));
      if (is_prime(i)) continue;
      CHECK(is_connected(g));
      CHECK(diameter(g).value_or(99) <= 3);
      CHECK(girth(g).value_or(3) <= 4);
    }
  }
}
