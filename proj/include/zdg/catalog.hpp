#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/ring_spec.hpp"

namespace zdg {

enum class CatalogGroup {
  LocalPlanar,       // local non-field rings whose zero-divisor graph is planar
  LocalToroidal,     // local non-field rings whose zero-divisor graph has genus one
  TwoMaximalPlanar,  // rings with two maximal ideals and planar zero-divisor graph
  Extra,             // Z_n, fields, and other quotient targets
};

struct CatalogEntry {
  std::string name;
  RingSpec spec;
  CatalogGroup group;
  /// Entries instantiated from one parametrized listing (e.g. Z_2×F_q) share
  /// a family name; otherwise equal to `name`.
  std::string family;
};

/// Every named presentation, deduplicated by name, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Lookup by name. Accepts ASCII spellings: "x" or "*" for ×, "^2" for ²,
/// "-" for −; whitespace is ignored.
std::optional<CatalogEntry> catalog_lookup(std::string_view name);

/// Presentation for a name: a catalog entry, "Z_n", "F_q", "GF(q)", or a
/// product of these joined by "x" or "×". Throws InvalidSpec.
RingSpec spec_from_name(std::string_view name);

/// Canonical ASCII form used for name matching.
std::string fold_name(std::string_view name);

std::string group_name(CatalogGroup g);

}  // namespace zdg
