#pragma once

#include <vector>

#include "zdg/element_set.hpp"
#include "zdg/ring.hpp"

namespace zdg {

/// An ideal of a tabulated ring, stored as a membership bitset.
class IdealSet {
 public:
  /// Throws InvalidSpec unless `members` is an ideal of `ring`.
  IdealSet(RingTable ring, ElementSet members);

  const RingTable& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  int size() const { return static_cast<int>(members_.count()); }
  bool contains(RingElem a) const { return members_.test(static_cast<std::size_t>(a)); }
  bool is_zero() const { return size() == 1; }
  bool is_whole() const { return size() == ring_.order(); }
  std::vector<RingElem> elements() const { return to_indices(members_, ring_.order()); }
  /// Sorted labels of the members.
  std::vector<std::string> labels() const;

  bool operator==(const IdealSet& o) const { return members_ == o.members_; }
  bool operator<(const IdealSet& o) const { return element_set_less(members_, o.members_, ring_.order()); }

 private:
  RingTable ring_;
  ElementSet members_;
};

/// True iff `s` contains zero and is closed under addition and under
/// multiplication by every ring element.
bool is_ideal(const RingTable& t, const ElementSet& s);

IdealSet cyclic_ideal(const RingTable& t, RingElem a);
IdealSet generated_ideal(const RingTable& t, const std::vector<RingElem>& gens);
IdealSet ideal_sum(const IdealSet& a, const IdealSet& b);
IdealSet ideal_intersection(const IdealSet& a, const IdealSet& b);
IdealSet zero_ideal(const RingTable& t);

/// All ideals, including {0} and the ring, sorted by size and then by member
/// list.
std::vector<IdealSet> enumerate_ideals(const RingTable& t);

struct QuotientRing {
  RingTable table;
  /// Parent element index -> coset index.
  std::vector<int> projection;
  /// Least parent element of each coset; cosets are ordered by it.
  std::vector<RingElem> coset_reps;
};

/// Throws WholeRingIdeal when `i` is the whole ring.
QuotientRing quotient(const IdealSet& i);

bool is_prime(const IdealSet& i);
bool is_radical(const IdealSet& i);
bool is_maximal(const IdealSet& i);

/// Minimal primes over a radical ideal. Throws NotRadical otherwise.
std::vector<IdealSet> minimal_primes_over(const IdealSet& i);

struct LocalInfo {
  bool local = false;
  std::vector<IdealSet> maximal_ideals;
};
LocalInfo is_local(const RingTable& t);

}  // namespace zdg
