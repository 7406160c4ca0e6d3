#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/genus.hpp"
#include "zdg/graph.hpp"
#include "zdg/ideal.hpp"
#include "zdg/ring.hpp"

namespace zdg {

/// Verifiable results. Each id names what is checked.
enum class TheoremId {
  RedmondPlanar,          // planar ideal graphs: acyclic quotient graph and |I| = 2, or one vertex and |I| <= 4
  GenusOneCliqueLe2,      // genus-one classification for quotient clique number <= 2
  GenusOneClique3,        // genus-one classification for quotient clique number 3
  GenusGe2,               // clique >= 4 or nonplanar quotient forces genus >= 2
  ExpansionGenus,         // blow-ups of small graphs with genus >= 2
  QuotientStructure,      // vertex count, expansion subgraph, dependence on R/I and |I| only
  IsoTransfer,            // isomorphic quotient graphs and equal |I| give isomorphic ideal graphs
  Diameter3,              // connected, diameter <= 3
  Girth4,                 // girth <= 4 when finite
  CliqueMinimalPrimes,    // clique number = number of minimal primes over a radical ideal
  LocalOrderPower,        // |R| = |R/m|^n for local R
  ResidueFieldExpansion,  // m^2 != 0 and |R/m| >= 3 force genus >= 2 on the 2-fold expansion
  AcyclicResidueTwo,      // m^2 != 0 and acyclic graph force |R/m| = 2
  Z2ProductSubgraphs,     // planarity and K_3, K_{2,3} in Z_2 x S
  TriangleLocalRings,     // local rings whose graph is K_3
  ManyFactorsExpansion,   // >= 3 local factors and expansion genus <= 1 force Z_2^3
  GenusTwoQuotient,       // quotient graph genus >= 2 passes to the ideal graph
  ResidueTwoGenusOne,     // toroidal local quotient with residue field Z_2 gives genus >= 2
  AttachmentGenus,        // K4 attached to a nonplanar graph, applied to order-16 local quotients
  GenusOneExamples,       // concrete ideal graphs of genus one
  GenusTwoExamples,       // concrete ideal graphs of genus >= 2
};

const std::vector<TheoremId>& all_theorems();
std::string theorem_name(TheoremId id);
/// Case-insensitive; nullopt for unknown names.
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// True iff the quotient graph is acyclic and (|I| = 2 or it has one vertex
/// and |I| <= 4). Meaningful for nonzero, proper, non-prime ideals.
bool redmond_planar_predicate(const RingTable& quotient, int isize);
/// Listed (quotient, |I| cap) cases for genus one at clique number <= 2.
/// Throws CliqueHypothesisViolated when the quotient graph has a triangle.
bool genus_one_clique_le2_predicate(const RingTable& quotient, int isize);
/// |I| = 2 and the quotient is one of six rings. Throws
/// CliqueHypothesisViolated unless the quotient graph has clique number 3.
bool genus_one_clique3_predicate(const RingTable& quotient, int isize);
/// Clique number >= 4 or nonplanar quotient graph.
bool genus_ge2_predicate(const RingTable& quotient);

/// Tables of catalog(), built once, named by their catalog names.
const std::vector<RingTable>& catalog_rings();
/// Built catalog ring by (folded) name. Throws InvalidSpec.
const RingTable& catalog_table(std::string_view name);

/// Name of a catalog ring isomorphic to `t`, or "other".
std::string identify_ring(const RingTable& t);

/// Element given by an expression over the generator labels, such as
/// "x+y+2" or "2x^2+3". Throws InvalidSpec.
RingElem parse_element(const RingTable& t, std::string_view expr);

/// T x Z_k with the ideal 0 x Z_k, whose quotient is T and whose ideal has k
/// elements.
struct Instance {
  RingTable ring;
  IdealSet ideal;
};
Instance synthesized_instance(const RingTable& target, int k);

/// Generator list such as "(2,x)", chosen greedily in element order; "(0)"
/// for the zero ideal.
std::string describe_ideal(const IdealSet& i);

/// "K_n", "K_{m,n}", "empty" or "V=..,E=..".
std::string describe_graph(const SimpleGraph& g);

struct GraphFacts {
  int order = 0;
  int edges = 0;
  std::optional<int> diameter;
  std::optional<int> girth;
  int clique = 0;
  std::string shape;
};
GraphFacts graph_facts(const SimpleGraph& g);

struct ClassificationReport {
  std::string theorem;
  std::string ring;
  std::string ideal;
  int ideal_size = 0;
  std::string quotient_target;
  /// "catalog", "synthesized" or "graph".
  std::string construction;
  GraphFacts graph;
  int genus_lower = 0;
  std::optional<int> genus_upper;
  std::string provenance;
  /// The computed fact being compared with the predicate.
  std::string claim;
  bool predicate = true;
  /// nullopt when the fact could not be decided within budget.
  std::optional<bool> observed;
  std::string note;

  bool inconclusive() const { return !observed.has_value(); }
  bool agreement() const { return observed.has_value() && *observed == predicate; }
};

struct VerifyOptions {
  long budget = 100'000'000;
};

/// 14-vertex graph: u, u' adjacent to each other and to v_1..v_6, v_1'..v_6';
/// a K4 on v_5, v_5', v_6, v_6'; complete joins between v_1,v_1' and v_2,v_2'
/// and between v_3,v_3' and v_4,v_4'.
SimpleGraph attachment_example_graph();

std::vector<ClassificationReport> verify(TheoremId id, const VerifyOptions& opts = {});

std::string report_to_json(const ClassificationReport& r);
/// Fixed-width table with one row per report.
std::string reports_table(const std::vector<ClassificationReport>& reports);

}  // namespace zdg
