#include "zdg/ideal.hpp"

#include <algorithm>

#include "zdg/errors.hpp"

namespace zdg {

IdealSet::IdealSet(RingTable ring, ElementSet members) : ring_(std::move(ring)), members_(members) {
  if (!is_ideal(ring_, members_)) throw InvalidSpec("element set is not an ideal of " + ring_.name());
}

std::vector<std::string> IdealSet::labels() const {
  std::vector<std::string> out;
  for (RingElem e : elements()) out.push_back(ring_.label(e));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ideal(const RingTable& t, const ElementSet& s) {
  const int n = t.order();
  for (int i = n; i < kMaxRingOrder; ++i) {
    if (s.test(static_cast<std::size_t>(i))) return false;
  }
  if (!s.test(static_cast<std::size_t>(t.zero()))) return false;
  const auto mem = to_indices(s, n);
  for (RingElem a : mem) {
    for (RingElem b : mem) {
      if (!s.test(static_cast<std::size_t>(t.add(a, b)))) return false;
    }
    if (!s.test(static_cast<std::size_t>(t.neg(a)))) return false;
    for (int r = 0; r < n; ++r) {
      if (!s.test(static_cast<std::size_t>(t.mul(r, a)))) return false;
    }
  }
  return true;
}

namespace {

// Additive closure of a set that is already closed under multiplication by
// ring elements. In a finite ring, closure under + gives negatives as well.
ElementSet additive_closure(const RingTable& t, ElementSet s) {
  s.set(static_cast<std::size_t>(t.zero()));
  std::vector<RingElem> mem = to_indices(s, t.order());
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto c = static_cast<std::size_t>(t.add(mem[i], mem[j]));
      if (!s.test(c)) {
        s.set(c);
        mem.push_back(static_cast<RingElem>(c));
      }
    }
  }
  return s;
}

}  // namespace

IdealSet cyclic_ideal(const RingTable& t, RingElem a) {
  ElementSet s;
  for (int r = 0; r < t.order(); ++r) s.set(static_cast<std::size_t>(t.mul(r, a)));
  return IdealSet(t, additive_closure(t, s));
}

IdealSet generated_ideal(const RingTable& t, const std::vector<RingElem>& gens) {
  ElementSet s;
  for (RingElem a : gens) {
    for (int r = 0; r < t.order(); ++r) s.set(static_cast<std::size_t>(t.mul(r, a)));
  }
  return IdealSet(t, additive_closure(t, s));
}

IdealSet ideal_sum(const IdealSet& a, const IdealSet& b) {
  return IdealSet(a.ring(), additive_closure(a.ring(), a.members() | b.members()));
}

IdealSet ideal_intersection(const IdealSet& a, const IdealSet& b) {
  return IdealSet(a.ring(), a.members() & b.members());
}

IdealSet zero_ideal(const RingTable& t) {
  ElementSet s;
  s.set(static_cast<std::size_t>(t.zero()));
  return IdealSet(t, s);
}

std::vector<IdealSet> enumerate_ideals(const RingTable& t) {
  std::vector<IdealSet> ideals;
  auto insert = [&](const IdealSet& i) {
    if (std::find(ideals.begin(), ideals.end(), i) != ideals.end()) return false;
    ideals.push_back(i);
    return true;
  };
  for (int a = 0; a < t.order(); ++a) insert(cyclic_ideal(t, a));
  // Every ideal is a finite sum of cyclic ideals.
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const IdealSet s = ideal_sum(ideals[i], ideals[j]);
      insert(s);
    }
  }
  std::sort(ideals.begin(), ideals.end());
  return ideals;
}

QuotientRing quotient(const IdealSet& i) {
  if (i.is_whole()) throw WholeRingIdeal("quotient by the whole ring");
  const RingTable& t = i.ring();
  const int n = t.order();
  const auto members = i.elements();
  std::vector<int> rep_of(static_cast<std::size_t>(n), -1);
  std::vector<RingElem> reps;
  for (int x = 0; x < n; ++x) {
    if (rep_of[static_cast<std::size_t>(x)] >= 0) continue;
    reps.push_back(x);
    for (RingElem m : members) rep_of[static_cast<std::size_t>(t.add(x, m))] = x;
  }
  std::vector<int> projection(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const auto it = std::lower_bound(reps.begin(), reps.end(), rep_of[static_cast<std::size_t>(x)]);
    projection[static_cast<std::size_t>(x)] = static_cast<int>(it - reps.begin());
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::uint8_t> add(static_cast<std::size_t>(m * m)), mul(add.size());
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(t.label(reps[static_cast<std::size_t>(a)]));
    for (int b = 0; b < m; ++b) {
      const RingElem ra = reps[static_cast<std::size_t>(a)];
      const RingElem rb = reps[static_cast<std::size_t>(b)];
      add[static_cast<std::size_t>(a * m + b)] =
          static_cast<std::uint8_t>(projection[static_cast<std::size_t>(t.add(ra, rb))]);
      mul[static_cast<std::size_t>(a * m + b)] =
          static_cast<std::uint8_t>(projection[static_cast<std::size_t>(t.mul(ra, rb))]);
    }
  }
  RingTable table(std::move(add), std::move(mul), std::move(labels),
                  projection[static_cast<std::size_t>(t.zero())], projection[static_cast<std::size_t>(t.one())],
                  t.name() + "/I");
  return {std::move(table), std::move(projection), std::move(reps)};
}

bool is_prime(const IdealSet& i) {
  if (i.is_whole()) return false;
  const RingTable& t = i.ring();
  for (int a = 0; a < t.order(); ++a) {
    if (i.contains(a)) continue;
    for (int b = a; b < t.order(); ++b) {
      if (!i.contains(b) && i.contains(t.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_radical(const IdealSet& i) {
  if (i.is_whole()) return true;
  const RingTable& t = i.ring();
  for (int a = 0; a < t.order(); ++a) {
    if (i.contains(a)) continue;
    RingElem p = a;
    for (int k = 1; k <= t.order(); ++k) {
      p = t.mul(p, a);
      if (i.contains(p)) return false;
    }
  }
  return true;
}

bool is_maximal(const IdealSet& i) {
  if (i.is_whole()) return false;
  for (const auto& j : enumerate_ideals(i.ring())) {
    if (j.is_whole() || j == i) continue;
    if ((i.members() & j.members()) == i.members()) return false;
  }
  return true;
}

std::vector<IdealSet> minimal_primes_over(const IdealSet& i) {
  if (!is_radical(i)) throw NotRadical("ideal is not radical");
  std::vector<IdealSet> primes;
  for (const auto& p : enumerate_ideals(i.ring())) {
    if (!p.is_whole() && (p.members() & i.members()) == i.members() && is_prime(p)) primes.push_back(p);
  }
  std::vector<IdealSet> minimal;
  for (const auto& p : primes) {
    bool is_min = true;
    for (const auto& q : primes) {
      if (!(q == p) && (q.members() & p.members()) == q.members()) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(p);
  }
  ElementSet meet;
  meet.set();
  for (const auto& p : minimal) meet &= p.members();
  if (minimal.empty() || meet != i.members()) {
    throw Error("minimal primes do not intersect to the given radical ideal");
  }
  return minimal;
}

LocalInfo is_local(const RingTable& t) {
  LocalInfo info;
  const auto ideals = enumerate_ideals(t);
  for (const auto& i : ideals) {
    if (i.is_whole()) continue;
    bool maximal = true;
    for (const auto& j : ideals) {
      if (j.is_whole() || j == i) continue;
      if ((i.members() & j.members()) == i.members()) {
        maximal = false;
        break;
      }
    }
    if (maximal) info.maximal_ideals.push_back(i);
  }
  info.local = info.maximal_ideals.size() == 1;
  return info;
}

}  // namespace zdg
