#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zdg/element_set.hpp"
#include "zdg/ring_spec.hpp"

namespace zdg {

/// Index of an element inside its RingTable, in [0, order).
using RingElem = int;

/// A finite commutative ring given by explicit addition and multiplication
/// tables. Copies share the immutable table storage.
///
/// The constructor does not check the ring axioms; build_ring and
/// validate_table do. Tables are row-major `order * order`.
class RingTable {
 public:
  RingTable(std::vector<std::uint8_t> add, std::vector<std::uint8_t> mul,
            std::vector<std::string> labels, RingElem zero, RingElem one, std::string name = {});

  int order() const { return d_->order; }
  RingElem zero() const { return d_->zero; }
  RingElem one() const { return d_->one; }
  RingElem add(RingElem a, RingElem b) const { return d_->add[idx(a, b)]; }
  RingElem mul(RingElem a, RingElem b) const { return d_->mul[idx(a, b)]; }
  RingElem neg(RingElem a) const { return d_->neg[static_cast<std::size_t>(a)]; }
  RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }
  const std::string& label(RingElem a) const { return d_->labels[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& name() const { return d_->name; }
  /// Element with the given label, if any.
  std::optional<RingElem> find_label(const std::string& label) const;

  const std::vector<std::uint8_t>& add_table() const { return d_->add; }
  const std::vector<std::uint8_t>& mul_table() const { return d_->mul; }

  /// Same tables under a different display name.
  RingTable renamed(std::string name) const;
  /// The table obtained by moving element i to position perm[i].
  RingTable relabeled(const std::vector<int>& perm) const;

 private:
  struct Data {
    int order = 0;
    std::vector<std::uint8_t> add, mul, neg;
    std::vector<std::string> labels;
    RingElem zero = 0, one = 1;
    std::string name;
  };
  std::size_t idx(RingElem a, RingElem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(d_->order) +
           static_cast<std::size_t>(b);
  }
  explicit RingTable(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

struct Violation {
  std::string axiom;
  RingElem a = -1, b = -1, c = -1;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every ring axiom exhaustively and reports one witness per failed
/// axiom.
ValidationReport validate_table(const RingTable& t);

/// Tabulates and validates the ring described by `spec`. Throws InvalidSpec,
/// TooLarge or NonConfluentPresentation.
RingTable build_ring(const RingSpec& spec);

std::vector<RingElem> units(const RingTable& t);
/// Nonzero elements z with z*y = 0 for some nonzero y.
std::vector<RingElem> zero_divisors(const RingTable& t);
std::optional<int> nilpotency_index(const RingTable& t, RingElem a);
/// Order of `a` in the additive group.
int additive_order(const RingTable& t, RingElem a);

/// Searches for a unity-preserving ring isomorphism a -> b. The witness maps
/// element indices of `a` to element indices of `b`.
std::optional<std::vector<RingElem>> iso_check(const RingTable& a, const RingTable& b);

/// Direct product of tabulated rings; elements are tuples, first factor most
/// significant in the index.
RingTable product_table(const std::vector<RingTable>& factors, std::string name = {});

}  // namespace zdg
