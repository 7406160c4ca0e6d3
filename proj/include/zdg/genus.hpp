#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// Cyclic order of neighbours around each vertex.
struct RotationSystem {
  std::vector<std::vector<int>> order;
  bool operator==(const RotationSystem&) const = default;
};

struct EmbeddingCertificate {
  RotationSystem rotation;
  int faces = 0;
  int genus = 0;
};

struct GenusBounds {
  int lower = 0;
  std::optional<int> upper;
  std::vector<std::string> lower_provenance;
  std::optional<EmbeddingCertificate> certificate;
  long nodes = 0;
  /// The search stopped at the node budget before closing the gap.
  bool budget_exhausted = false;
  bool exact() const { return upper && *upper == lower; }
};

struct GenusOptions {
  long budget = 100'000'000;
  /// Components with more edges are only bounded, never searched.
  int exhaustive_edge_limit = 40;
  /// Start the search from planarity, subgraph and K4-attachment bounds.
  /// Disabling them leaves Euler's bound and the search itself as the only
  /// evidence.
  bool planarity_bound = true;
  bool subgraph_bound = true;
  bool attachment_bound = true;
  /// Bound computations stop once the lower bound reaches this value.
  int lower_target = 1 << 20;
};

/// ceil((n-3)(n-4)/12), 0 for n <= 4.
int genus_complete(int n);
/// ceil((m-2)(n-2)/4), 0 when min(m, n) <= 2.
int genus_biclique(int m, int n);

bool is_planar(const SimpleGraph& g);
/// Planar rotation system, when one exists.
std::optional<RotationSystem> planar_embedding(const SimpleGraph& g);

/// Euler bound max(0, ceil((E-3V+6)/6)), and ceil((E-2V+4)/4) when the girth
/// is at least 4. Returns 0 for disconnected graphs or fewer than 3 vertices.
int euler_lower_bound(const SimpleGraph& g);

struct SubgraphBound {
  int value = 0;
  std::string provenance;
};
/// Genus of the largest complete subgraph or of the largest K_{m,n} with
/// m in {3,4,5}, whichever is larger.
SubgraphBound subgraph_lower_bound(const SimpleGraph& g);

/// Neighbours in increasing order at every vertex.
RotationSystem sorted_rotation(const SimpleGraph& g);

/// Traces the faces of `rot` (successor of u around v follows the dart u->v)
/// and returns the genus, summed over components. Throws InvalidSpec when
/// `rot` is not a rotation system of `g`.
EmbeddingCertificate face_trace(const SimpleGraph& g, const RotationSystem& rot);

/// Iterative deepening over target genus with a face-by-face rotation search.
GenusBounds exact_genus(const SimpleGraph& g, const GenusOptions& opts = {});

/// Lower bound from a K4 on `s` whose vertices each have a neighbour outside
/// `s`: 1 + lower bound of g - s. Requires the complement to be nonempty and
/// connected. Throws HypothesisNotMet otherwise.
int k4_attachment_bound(const SimpleGraph& g, const std::vector<int>& s, const GenusOptions& opts = {});

/// Certified lower bound without any rotation search, with provenance.
GenusBounds cheap_lower_bound(const SimpleGraph& g, const GenusOptions& opts = {});

std::string certificate_to_json(const EmbeddingCertificate& c, const SimpleGraph& g, int indent = -1);
/// Reads a certificate document and re-derives faces and genus with
/// face_trace against `g`.
EmbeddingCertificate certificate_from_json(std::string_view text, const SimpleGraph& g);

}  // namespace zdg
