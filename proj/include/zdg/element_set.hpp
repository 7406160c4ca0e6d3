#pragma once

#include <bitset>
#include <cstddef>
#include <vector>

namespace zdg {

/// Largest ring order the library will tabulate.
inline constexpr int kMaxRingOrder = 128;

/// Subset of the elements of one ring, indexed by element index.
using ElementSet = std::bitset<kMaxRingOrder>;

inline std::vector<int> to_indices(const ElementSet& s, int order) {
  std::vector<int> out;
  for (int i = 0; i < order; ++i) {
    if (s.test(static_cast<std::size_t>(i))) out.push_back(i);
  }
  return out;
}

/// Orders sets by size, then lexicographically by their sorted member lists.
inline bool element_set_less(const ElementSet& a, const ElementSet& b, int order) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  for (int i = 0; i < order; ++i) {
    const bool ia = a.test(static_cast<std::size_t>(i));
    const bool ib = b.test(static_cast<std::size_t>(i));
    // The set that contains the smaller index first wins.
    if (ia != ib) return ia;
  }
  return false;
}

}  // namespace zdg
