#include <algorithm>
#include <map>
#include <tuple>

#include "zdg/ring.hpp"

namespace zdg {
namespace {

using Signature = std::tuple<int, int, bool, int, int>;

std::vector<Signature> signatures(const RingTable& t) {
  const int n = t.order();
  std::vector<bool> is_unit(static_cast<std::size_t>(n), false);
  for (RingElem u : units(t)) is_unit[static_cast<std::size_t>(u)] = true;
  std::vector<Signature> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    int ann = 0;
    for (int b = 0; b < n; ++b) ann += t.mul(a, b) == t.zero();
    int square_class = 0;
    if (t.mul(a, a) == a) square_class = 1;
    const auto nil = nilpotency_index(t, a);
    out.emplace_back(additive_order(t, a), nil ? *nil : 0, is_unit[static_cast<std::size_t>(a)], ann,
                     square_class);
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const RingTable& a, const RingTable& b) : a_(a), b_(b), n_(a.order()) {
    sa_ = signatures(a);
    sb_ = signatures(b);
  }

  std::optional<std::vector<RingElem>> run() {
    auto x = sa_, y = sb_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;

    std::map<Signature, int> class_size;
    for (const auto& s : sa_) ++class_size[s];
    choose_generators(class_size);

    map_.assign(static_cast<std::size_t>(n_), -1);
    inv_.assign(static_cast<std::size_t>(n_), -1);
    domain_.clear();
    if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one()) || !close(0)) return std::nullopt;
    if (!search(0)) return std::nullopt;
    return map_;
  }

 private:
  // Greedy generating set: repeatedly add the element outside the current
  // subring whose invariant class is smallest.
  void choose_generators(const std::map<Signature, int>& class_size) {
    std::vector<bool> in(static_cast<std::size_t>(n_), false);
    std::vector<RingElem> members;
    auto add_member = [&](RingElem e) {
      if (!in[static_cast<std::size_t>(e)]) {
        in[static_cast<std::size_t>(e)] = true;
        members.push_back(e);
      }
    };
    auto close_sub = [&]() {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          add_member(a_.add(members[i], members[j]));
          add_member(a_.mul(members[i], members[j]));
        }
      }
    };
    add_member(a_.zero());
    add_member(a_.one());
    close_sub();
    while (static_cast<int>(members.size()) < n_) {
      RingElem best = -1;
      for (int e = 0; e < n_; ++e) {
        if (in[static_cast<std::size_t>(e)]) continue;
        if (best < 0 || class_size.at(sa_[static_cast<std::size_t>(e)]) <
                            class_size.at(sa_[static_cast<std::size_t>(best)])) {
          best = e;
        }
      }
      gens_.push_back(best);
      add_member(best);
      close_sub();
    }
  }

  bool assign(RingElem x, RingElem y) {
    auto& fx = map_[static_cast<std::size_t>(x)];
    if (fx >= 0) return fx == y;
    if (inv_[static_cast<std::size_t>(y)] >= 0) return false;
    if (sa_[static_cast<std::size_t>(x)] != sb_[static_cast<std::size_t>(y)]) return false;
    fx = y;
    inv_[static_cast<std::size_t>(y)] = x;
    domain_.push_back(x);
    return true;
  }

  // Extends the partial map along sums and products of mapped elements,
  // starting from domain_[from]; fails on any conflict.
  bool close(std::size_t from) {
    for (std::size_t i = from; i < domain_.size(); ++i) {
      const RingElem x = domain_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const RingElem y = domain_[j];
        const RingElem fx = map_[static_cast<std::size_t>(x)];
        const RingElem fy = map_[static_cast<std::size_t>(y)];
        if (!assign(a_.add(x, y), b_.add(fx, fy))) return false;
        if (!assign(a_.mul(x, y), b_.mul(fx, fy))) return false;
      }
    }
    return true;
  }

  bool search(std::size_t g) {
    if (g == gens_.size()) return static_cast<int>(domain_.size()) == n_;
    const RingElem x = gens_[g];
    if (map_[static_cast<std::size_t>(x)] >= 0) return search(g + 1);
    for (int y = 0; y < n_; ++y) {
      if (inv_[static_cast<std::size_t>(y)] >= 0) continue;
      if (sa_[static_cast<std::size_t>(x)] != sb_[static_cast<std::size_t>(y)]) continue;
      const std::size_t mark = domain_.size();
      if (assign(x, y) && close(mark) && search(g + 1)) return true;
      while (domain_.size() > mark) {
        const RingElem d = domain_.back();
        domain_.pop_back();
        inv_[static_cast<std::size_t>(map_[static_cast<std::size_t>(d)])] = -1;
        map_[static_cast<std::size_t>(d)] = -1;
      }
    }
    return false;
  }

  const RingTable& a_;
  const RingTable& b_;
  int n_;
  std::vector<Signature> sa_, sb_;
  std::vector<RingElem> gens_;
  std::vector<RingElem> map_, inv_, domain_;
};

}  // namespace

std::optional<std::vector<RingElem>> iso_check(const RingTable& a, const RingTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  return IsoSearch(a, b).run();
}

}  // namespace zdg
