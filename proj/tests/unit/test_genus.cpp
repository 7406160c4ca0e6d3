#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zdg/classify.hpp"
#include "zdg/errors.hpp"
#include "zdg/genus.hpp"

using namespace zdg;

TEST_CASE("closed forms") {
  CHECK(genus_complete(4) == 0);
  CHECK(genus_complete(5) == 1);
  CHECK(genus_complete(6) == 1);
  CHECK(genus_complete(7) == 1);
  CHECK(genus_complete(8) == 2);
  CHECK(genus_biclique(4, 4) == 1);
  for (int n = 3; n <= 6; ++n) CHECK(genus_biclique(3, n) == 1);
  CHECK(genus_biclique(2, 9) == 0);
  CHECK(genus_biclique(4, 6) == 2);
  CHECK(genus_biclique(5, 5) == 3);
  CHECK_THROWS_AS(genus_complete(0), InvalidSpec);
}

TEST_CASE("planarity") {
  CHECK(is_planar(complete_graph(4)));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(ideal_zero_divisor_graph(synthesized_instance(build_ring(zmod(8)), 2).ideal).graph));
  const auto emb = planar_embedding(complete_graph(4));
  REQUIRE(emb.has_value());
  CHECK(face_trace(complete_graph(4), *emb).faces == 4);
  CHECK_FALSE(planar_embedding(complete_graph(5)).has_value());
}

TEST_CASE("Euler bound") {
  CHECK(euler_lower_bound(complete_graph(5)) == 1);
  CHECK(euler_lower_bound(complete_bipartite(3, 3)) == 1);
  CHECK(euler_lower_bound(path_graph(6)) == 0);
  CHECK(euler_lower_bound(complete_graph(8)) == 2);
}

TEST_CASE("subgraph bound") {
  const auto k55 = subgraph_lower_bound(complete_bipartite(5, 5));
  CHECK(k55.value == 3);
  CHECK(k55.provenance == "K_{5,5}");
  CHECK(subgraph_lower_bound(expand(complete_bipartite(1, 3), 3)).value >= 2);
  CHECK(subgraph_lower_bound(path_graph(3)).value == 0);
}

TEST_CASE("face tracing") {
  std::mt19937 rng(5);
  const SimpleGraph tree = path_graph(7);
  const auto t = face_trace(tree, RotationSystem{oracle::random_rotation(rng, tree)});
  CHECK(t.faces == 1);
  CHECK(t.genus == 0);
  const SimpleGraph k5 = complete_graph(5);
  for (int i = 0; i < 200; ++i) {
    const auto c = face_trace(k5, RotationSystem{oracle::random_rotation(rng, k5)});
    CHECK(c.genus >= 1);
    CHECK(k5.order() - k5.edge_count() + c.faces == 2 - 2 * c.genus);
  }
  RotationSystem bad{oracle::random_rotation(rng, k5)};
  bad.order[0].pop_back();
  CHECK_THROWS_AS(face_trace(k5, bad), InvalidSpec);
}

TEST_CASE("face counts agree with an independent dart walk") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleGraph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.5);
    const auto rot = oracle::random_rotation(rng, g);
    const auto c = face_trace(g, RotationSystem{rot});
    const int isolated = static_cast<int>(std::count_if(rot.begin(), rot.end(), [](const auto& r) { return r.empty(); }));
    CHECK(c.faces == oracle::faces(g, rot) + isolated);
  }
}

TEST_CASE("exact genus of named graphs") {
  const auto k5 = exact_genus(complete_graph(5));
  CHECK(k5.exact());
  CHECK(k5.lower == 1);
  REQUIRE(k5.certificate.has_value());
  CHECK(face_trace(complete_graph(5), k5.certificate->rotation).genus == 1);
  CHECK(exact_genus(complete_bipartite(2, 4)).upper == 0);
  const auto k7 = exact_genus(complete_graph(7));
  CHECK(k7.exact());
  CHECK(k7.lower == 1);
  const auto k8 = exact_genus(complete_graph(8));
  CHECK(k8.exact());
  CHECK(k8.lower == 2);
}

TEST_CASE("exact genus matches exhaustive rotation enumeration") {
  std::mt19937 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const SimpleGraph g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 4), 0.6);
    if (!is_connected(g) || g.edge_count() == 0 || oracle::rotation_count(g) > 20000) continue;
    const auto b = exact_genus(g);
    REQUIRE(b.exact());
    CHECK(b.lower == oracle::genus_by_all_rotations(g));
    CHECK((b.lower == 0) == is_planar(g));
    ++checked;
  }
  CHECK(checked >= 30);
  const SimpleGraph petersen(10, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                  {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  CHECK(exact_genus(petersen).upper == oracle::genus_by_all_rotations(petersen));
  CHECK(oracle::genus_by_all_rotations(complete_bipartite(3, 4)) == 1);
}

TEST_CASE("disconnected graphs sum their components") {
  SimpleGraph two(10);
  for (int base : {0, 5}) {
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) two.add_edge(base + a, base + b);
    }
  }
  const auto b = exact_genus(two);
  CHECK(b.exact());
  CHECK(b.lower == 2);
  REQUIRE(b.certificate.has_value());
  CHECK(face_trace(two, b.certificate->rotation).genus == 2);
}

TEST_CASE("budget exhaustion degrades to bounds") {
  GenusOptions o;
  o.budget = 10;
  o.planarity_bound = o.subgraph_bound = o.attachment_bound = false;
  const auto b = exact_genus(complete_graph(7), o);
  CHECK(b.lower <= 1);
  REQUIRE(b.upper.has_value());
  CHECK(*b.upper >= 1);
  if (!b.exact()) CHECK(b.budget_exhausted);
}

TEST_CASE("K4 attachment bound") {
  const SimpleGraph h = attachment_example_graph();
  CHECK(h.order() == 14);
  CHECK(k4_attachment_bound(h, {10, 11, 12, 13}) >= 2);
  CHECK(k4_attachment_bound(complete_graph(5), {0, 1, 2, 3}) == 1);
  CHECK_THROWS_AS(k4_attachment_bound(h, {0, 2, 4, 6}), HypothesisNotMet);
  CHECK_THROWS_AS(k4_attachment_bound(complete_graph(4), {0, 1, 2, 3}), HypothesisNotMet);
}

TEST_CASE("lower bounds never exceed upper bounds of supergraphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleGraph g = oracle::random_graph(rng, 8, 0.6);
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v) {
      if (rng() % 4) keep.push_back(v);
    }
    const SimpleGraph sub = g.induced(keep);
    const auto big = exact_genus(g);
    REQUIRE(big.upper.has_value());
    CHECK(cheap_lower_bound(sub).lower <= *big.upper);
    CHECK(exact_genus(sub).lower <= *big.upper);
    CHECK(euler_lower_bound(g) <= big.lower);
  }
}

TEST_CASE("certificates round-trip through JSON") {
  const SimpleGraph k6 = complete_graph(6);
  const auto b = exact_genus(k6);
  REQUIRE(b.certificate.has_value());
  const auto back = certificate_from_json(certificate_to_json(*b.certificate, k6), k6);
  CHECK(back.genus == 1);
  CHECK(back.rotation == b.certificate->rotation);
  CHECK_THROWS_AS(certificate_from_json("{}", k6), InvalidSpec);
}
