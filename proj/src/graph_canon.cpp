#include <algorithm>
#include <map>

#include "zdg/errors.hpp"
#include "zdg/graph.hpp"

namespace zdg {
namespace {

using Partition = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into each splitter cell until the
// partition is equitable. Cell order is determined by invariants only.
void refine(const SimpleGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      VertexSet splitter;
      for (int v : p[s]) splitter.set(static_cast<std::size_t>(v));
      Partition out;
      out.reserve(p.size());
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          out.push_back(cell);
          continue;
        }
        std::map<std::size_t, std::vector<int>> by_count;
        for (int v : cell) by_count[(g.neighbours(v) & splitter).count()].push_back(v);
        for (auto& [count, part] : by_count) out.push_back(std::move(part));
        if (by_count.size() > 1) changed = true;
      }
      p = std::move(out);
    }
  }
}

class Canon {
 public:
  explicit Canon(const SimpleGraph& g) : g_(g) {}

  std::vector<std::uint64_t> run() {
    const int n = g_.order();
    Partition p;
    if (n > 0) {
      std::map<int, std::vector<int>> by_degree;
      for (int v = 0; v < n; ++v) by_degree[g_.degree(v)].push_back(v);
      for (auto& [d, cell] : by_degree) p.push_back(std::move(cell));
    }
    refine(g_, p);
    search(p);
    std::vector<std::uint64_t> cert{static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(g_.edge_count())};
    cert.insert(cert.end(), best_.begin(), best_.end());
    return cert;
  }

 private:
  std::vector<std::uint64_t> leaf_code(const Partition& p) const {
    const int n = g_.order();
    std::vector<int> order;
    for (const auto& cell : p) order.push_back(cell.front());
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::uint64_t> code(static_cast<std::size_t>(n) * words, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (g_.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
          code[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j) / 64] |= std::uint64_t{1}
                                                                                          << (j % 64);
        }
      }
    }
    return code;
  }

  void search(const Partition& p) {
    auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (target == p.end()) {
      if (++leaves_ > kLeafBudget) throw TooLarge("canonical labelling exceeded its search budget");
      auto code = leaf_code(p);
      if (!have_best_ || code < best_) {
        best_ = std::move(code);
        have_best_ = true;
      }
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - p.begin());
    std::vector<int> tried;
    for (int v : p[t]) {
      // Twins (same neighbourhood apart from each other) are exchanged by an
      // automorphism fixing everything else, so one per twin class suffices.
      bool twin = false;
      for (int u : tried) {
        VertexSet nu = g_.neighbours(u), nv = g_.neighbours(v);
        nu.reset(static_cast<std::size_t>(v));
        nv.reset(static_cast<std::size_t>(u));
        if (nu == nv) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != t) {
          child.push_back(p[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : p[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      search(child);
    }
  }

  static constexpr long kLeafBudget = 2'000'000;
  const SimpleGraph& g_;
  std::vector<std::uint64_t> best_;
  bool have_best_ = false;
  long leaves_ = 0;
};

}  // namespace

std::vector<std::uint64_t> canonical_certificate(const SimpleGraph& g) { return Canon(g).run(); }

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace zdg
