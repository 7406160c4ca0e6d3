#include <doctest.h>

#include <json.hpp>

#include "zdg/catalog.hpp"
#include "zdg/classify.hpp"
#include "zdg/errors.hpp"

using namespace zdg;

namespace {

RingTable named(const char* name) { return build_ring(spec_from_name(name)); }

}  // namespace

TEST_CASE("planarity predicate") {
  CHECK(redmond_planar_predicate(build_ring(zmod(8)), 2));
  CHECK(redmond_planar_predicate(build_ring(zmod(4)), 4));
  CHECK_FALSE(redmond_planar_predicate(build_ring(zmod(4)), 5));
  CHECK_FALSE(redmond_planar_predicate(named("Z_2xZ_2xZ_2"), 2));
  CHECK_FALSE(redmond_planar_predicate(build_ring(zmod(8)), 3));
}

TEST_CASE("genus-one predicate for clique number at most two") {
  CHECK(genus_one_clique_le2_predicate(named("Z_2xZ_3"), 3));
  CHECK_FALSE(genus_one_clique_le2_predicate(named("Z_2xZ_3"), 4));
  CHECK_FALSE(genus_one_clique_le2_predicate(build_ring(zmod(4)), 8));
  CHECK(genus_one_clique_le2_predicate(build_ring(zmod(4)), 7));
  CHECK(genus_one_clique_le2_predicate(named("Z_3xZ_3"), 2));
  CHECK(genus_one_clique_le2_predicate(named("Z_2xF_8"), 2));
  // Listed up to isomorphism, not by presentation.
  CHECK(genus_one_clique_le2_predicate(named("Z_2[x]/(x^2)xZ_2"), 2));
  CHECK_FALSE(genus_one_clique_le2_predicate(build_ring(product({zmod(3), zmod(5)})), 2));
  CHECK_THROWS_AS(genus_one_clique_le2_predicate(named("Z_2xZ_2xZ_2"), 2), CliqueHypothesisViolated);
}

TEST_CASE("genus-one predicate for clique number three") {
  CHECK(genus_one_clique3_predicate(build_ring(zmod(16)), 2));
  CHECK_FALSE(genus_one_clique3_predicate(build_ring(zmod(16)), 3));
  CHECK(genus_one_clique3_predicate(named("F_4[x]/(x^2)"), 2));
  CHECK(genus_one_clique3_predicate(named("Z_2xZ_2xZ_2"), 2));
  CHECK_THROWS_AS(genus_one_clique3_predicate(build_ring(zmod(8)), 2), CliqueHypothesisViolated);
  const Instance inst = synthesized_instance(named("F_4[x]/(x^2)"), 2);
  CHECK(are_isomorphic(ideal_zero_divisor_graph(inst.ideal).graph, complete_graph(6)));
}

TEST_CASE("genus at least two predicate") {
  CHECK(genus_ge2_predicate(named("Z_2xZ_2xZ_2xZ_2")));
  CHECK_FALSE(genus_ge2_predicate(named("Z_3xZ_3")));
  CHECK_FALSE(genus_ge2_predicate(build_ring(zmod(8))));
  CHECK(genus_ge2_predicate(named("Z_2[x,y]/(x^2,y^2)")) == !is_planar(zero_divisor_graph(named("Z_2[x,y]/(x^2,y^2)")).graph));
}

TEST_CASE("theorem ids") {
  CHECK(all_theorems().size() == 21);
  for (TheoremId id : all_theorems()) CHECK(theorem_from_name(theorem_name(id)) == id);
  CHECK(theorem_from_name("girth4") == TheoremId::Girth4);
  CHECK_FALSE(theorem_from_name("nothing").has_value());
}

TEST_CASE("element expressions") {
  const RingTable t = named("Z_4[x,y]/(x^2,y^2,xy-2)");
  CHECK(t.label(parse_element(t, "x+y+2")) == t.label(t.add(parse_element(t, "x+y"), parse_element(t, "2"))));
  CHECK(parse_element(t, "0") == t.zero());
  CHECK(parse_element(t, "-1") == t.neg(t.one()));
  CHECK(parse_element(t, "xy") == parse_element(t, "2"));
  CHECK_THROWS_AS(parse_element(t, "z"), InvalidSpec);
  CHECK_THROWS_AS(parse_element(t, "x+"), InvalidSpec);
}

TEST_CASE("identification and synthesis") {
  CHECK(identify_ring(build_ring(zmod(6))) == "Z_2×Z_3");
  CHECK(identify_ring(build_ring(zmod(128))) == "other");
  const Instance inst = synthesized_instance(build_ring(zmod(9)), 3);
  CHECK(inst.ring.order() == 27);
  CHECK(inst.ideal.size() == 3);
  CHECK_THROWS_AS(synthesized_instance(build_ring(zmod(64)), 3), TooLarge);
  CHECK_THROWS_AS(synthesized_instance(build_ring(zmod(9)), 1), InvalidSpec);
}

TEST_CASE("graph descriptions") {
  CHECK(describe_graph(complete_graph(5)) == "K_5");
  CHECK(describe_graph(complete_bipartite(4, 2)) == "K_{2,4}");
  CHECK(describe_graph(SimpleGraph(0)) == "empty");
  CHECK(describe_graph(path_graph(4)) == "V=4,E=3");
}

TEST_CASE("report serialization") {
  const auto reports = verify(TheoremId::TriangleLocalRings);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CHECK(r.agreement());
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["agreement"] == true);
    CHECK(j["theorem"] == "TriangleLocalRings");
  }
  const std::string table = reports_table(reports);
  CHECK(std::count(table.begin(), table.end(), '\n') == 5);
}

TEST_CASE("structural results hold on every instance") {
  for (TheoremId id : {TheoremId::QuotientStructure, TheoremId::Diameter3, TheoremId::Girth4,
                       TheoremId::CliqueMinimalPrimes, TheoremId::IsoTransfer, TheoremId::LocalOrderPower}) {
    for (const auto& r : verify(id)) CHECK_MESSAGE(r.agreement(), theorem_name(id) << " " << r.ring << " " << r.ideal);
  }
}

TEST_CASE("clique-three classification misses rings sharing the graph of Z_16") {
  std::vector<std::string> disagreements;
  for (const auto& r : verify(TheoremId::GenusOneClique3)) {
    CHECK_FALSE(r.inconclusive());
    if (!r.agreement()) disagreements.push_back(r.quotient_target);
  }
  std::sort(disagreements.begin(), disagreements.end());
  CHECK(disagreements == std::vector<std::string>{"Z_2[x]/(x⁴)", "Z_4[x]/(x²−2,x⁴)", "Z_4[x]/(x³+x²−2,x⁴)",
                                                  "Z_4[x]/(x³−2,x⁴)"});
  const RingTable z16 = build_ring(zmod(16));
  for (const auto& name : disagreements) {
    const RingTable& t = catalog_table(name);
    CHECK(are_isomorphic(ideal_zero_divisor_graph(synthesized_instance(t, 2).ideal).graph,
                         ideal_zero_divisor_graph(synthesized_instance(z16, 2).ideal).graph));
  }
}
