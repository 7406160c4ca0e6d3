#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "zdg/errors.hpp"
#include "zdg/genus.hpp"

namespace zdg {
namespace {

struct BudgetExhausted {};

// Decides whether a connected graph with a cycle embeds with at least
// `target_faces` faces. Rotations are built face by face: each face is traced
// from the lowest unused dart, and whenever the walk reaches a vertex whose
// successor is still open, every admissible successor is tried.
class FaceSearch {
 public:
  FaceSearch(const SimpleGraph& g, int girth, long budget) : budget_(budget), girth_(girth) {
    n_ = g.order();
    // Vertices by decreasing degree; vertex 0 carries the mirror constraint.
    std::vector<int> perm(static_cast<std::size_t>(n_));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    old_of_ = perm;
    new_of_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) new_of_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    nbr_.resize(static_cast<std::size_t>(n_));
    pos_.assign(static_cast<std::size_t>(n_ * n_), -1);
    for (int v = 0; v < n_; ++v) {
      for (int u : g.neighbour_list(old_of_[static_cast<std::size_t>(v)])) nbr_[static_cast<std::size_t>(v)].push_back(new_of_[static_cast<std::size_t>(u)]);
      std::sort(nbr_[static_cast<std::size_t>(v)].begin(), nbr_[static_cast<std::size_t>(v)].end());
      for (std::size_t i = 0; i < nbr_[static_cast<std::size_t>(v)].size(); ++i) {
        pos_[static_cast<std::size_t>(v * n_ + nbr_[static_cast<std::size_t>(v)][i])] = static_cast<int>(i);
      }
    }
    edges_ = g.edge_count();
    offset_.assign(static_cast<std::size_t>(n_ + 1), 0);
    for (int v = 0; v < n_; ++v) offset_[static_cast<std::size_t>(v + 1)] = offset_[static_cast<std::size_t>(v)] + deg(v);
    const auto darts = static_cast<std::size_t>(offset_.back());
    succ_.assign(darts, -1);
    pred_.assign(darts, -1);
    other_end_.resize(darts);
    chain_len_.assign(darts, 1);
    used_.assign(darts, 0);
    for (int v = 0; v < n_; ++v) {
      for (int i = 0; i < deg(v); ++i) other_end_[slot(v, i)] = i;
    }
  }

  long nodes() const { return nodes_; }

  // True with a rotation (in original vertex numbering) when some rotation
  // has at least `target_faces` faces.
  std::optional<RotationSystem> run(int target_faces) {
    target_faces_ = target_faces;
    slack_ = 2 * edges_ - girth_ * target_faces;
    if (slack_ < 0) return std::nullopt;
    excess_ = 0;
    faces_ = 0;
    if (!next_face()) return std::nullopt;
    RotationSystem rot;
    rot.order.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      auto& out = rot.order[static_cast<std::size_t>(old_of_[static_cast<std::size_t>(v)])];
      int i = 0;
      for (int k = 0; k < deg(v); ++k) {
        out.push_back(old_of_[static_cast<std::size_t>(nbr_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)])]);
        i = found_succ_[slot(v, i)];
      }
    }
    return rot;
  }

 private:
  int deg(int v) const { return static_cast<int>(nbr_[static_cast<std::size_t>(v)].size()); }
  std::size_t slot(int v, int i) const { return static_cast<std::size_t>(offset_[static_cast<std::size_t>(v)] + i); }
  int pos(int v, int u) const { return pos_[static_cast<std::size_t>(v * n_ + u)]; }

  struct Undo {
    std::size_t slot;
    int other_end;
    int chain_len;
  };

  // Links position a to position b in the rotation at v (b follows a).
  // Returns false if this would close a cycle shorter than the degree.
  bool link(int v, int a, int b) {
    const int s = other_end_[slot(v, a)];  // start of a's chain
    const int e = other_end_[slot(v, b)];  // end of b's chain
    if (s == b) {
      if (chain_len_[slot(v, s)] != deg(v)) return false;
    } else {
      trail_.push_back({slot(v, s), other_end_[slot(v, s)], chain_len_[slot(v, s)]});
      trail_.push_back({slot(v, e), other_end_[slot(v, e)], chain_len_[slot(v, e)]});
      const int len = chain_len_[slot(v, s)] + chain_len_[slot(v, b)];
      other_end_[slot(v, s)] = e;
      other_end_[slot(v, e)] = s;
      chain_len_[slot(v, s)] = len;
      chain_len_[slot(v, e)] = len;
    }
    succ_[slot(v, a)] = b;
    pred_[slot(v, b)] = a;
    return true;
  }

  void unlink(int v, int a, int b, std::size_t mark) {
    succ_[slot(v, a)] = -1;
    pred_[slot(v, b)] = -1;
    while (trail_.size() > mark) {
      const Undo u = trail_.back();
      trail_.pop_back();
      other_end_[u.slot] = u.other_end;
      chain_len_[u.slot] = u.chain_len;
    }
  }

  // Cyclic order of positions 0, 1, 2 at vertex 0, when already forced:
  // +1 for (0 1 2), -1 for (0 2 1), 0 if still open.
  int mirror_orientation() const {
    if (deg(0) < 3) return 1;
    auto pred = [&](int i) { return pred_[slot(0, i)]; };
    auto succ = [&](int i) { return succ_[slot(0, i)]; };
    for (int s = pred(0); s >= 0; s = pred(s)) {
      if (s != 0) continue;
      for (int p = succ(0); p != 0; p = succ(p)) {
        if (p == 1) return 1;
        if (p == 2) return -1;
      }
    }
    int start[3], index[3];
    for (int i = 0; i < 3; ++i) {
      int s = i, k = 0;
      while (pred(s) >= 0) {
        s = pred(s);
        ++k;
      }
      start[i] = s;
      index[i] = k;
    }
    // x precedes y in one chain and the third position lies in another.
    auto arrangement = [](int x, int y) { return (y - x + 3) % 3 == 1 ? 1 : -1; };
    if (start[0] == start[1] && start[1] == start[2]) {
      const int i0 = index[0], i1 = index[1], i2 = index[2];
      return ((i0 < i1 && i1 < i2) || (i1 < i2 && i2 < i0) || (i2 < i0 && i0 < i1)) ? 1 : -1;
    }
    for (int x = 0; x < 3; ++x) {
      for (int y = x + 1; y < 3; ++y) {
        if (start[x] == start[y]) return index[x] < index[y] ? arrangement(x, y) : arrangement(y, x);
      }
    }
    return 0;
  }

  // Whether position a may be followed by position b at v.
  bool may_follow(int v, int a, int b) const {
    const int f = succ_[slot(v, a)];
    if (f >= 0) return f == b;
    return pred_[slot(v, b)] < 0 && a != b;
  }

  // Triangular faces that could still start with the unused dart x->y,
  // y = nbr(x)[i]. Every face of length L >= 4 has at most L darts without
  // one and excess L - 3 >= L / 4.
  int triangle_options(int x, int i) const {
    const int y = nbr_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
    const int xy = pos(y, x);
    int count = 0;
    for (int k = 0; k < deg(y); ++k) {
      const int z = nbr_[static_cast<std::size_t>(y)][static_cast<std::size_t>(k)];
      const int zx = pos(z, x);
      if (zx < 0 || used_[slot(y, k)] || used_[slot(z, zx)]) continue;
      if (may_follow(y, xy, k) && may_follow(z, pos(z, y), zx) && may_follow(x, pos(x, z), i)) ++count;
    }
    return count;
  }

  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
  }

  // Starts the next face at the unused dart with the fewest triangular
  // completions; darts with none must bound a longer face.
  bool next_face() {
    std::size_t d = used_.size();
    if (girth_ == 3) {
      int untriangled = 0, best = 1 << 30;
      for (int x = 0; x < n_; ++x) {
        for (int i = 0; i < deg(x); ++i) {
          if (used_[slot(x, i)]) continue;
          const int c = triangle_options(x, i);
          if (c == 0) ++untriangled;
          if (c < best) {
            best = c;
            d = slot(x, i);
          }
        }
      }
      if (excess_ + (untriangled + 3) / 4 > slack_) return false;
    } else {
      d = 0;
      while (d < used_.size() && used_[d]) ++d;
    }
    if (d == used_.size()) {
      if (faces_ < target_faces_) return false;
      found_succ_ = succ_;
      return true;
    }
    int v = 0;
    while (offset_[static_cast<std::size_t>(v + 1)] <= static_cast<int>(d)) ++v;
    const int i = static_cast<int>(d) - offset_[static_cast<std::size_t>(v)];
    start_tail_ = v;
    start_head_ = nbr_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
    used_[d] = 1;
    face_len_ = 1;
    const bool ok = walk(v, start_head_);
    used_[d] = 0;
    return ok;
  }

  // Excess if the open face closed now, plus completed excess.
  bool within_slack() const { return excess_ + std::max(0, face_len_ - girth_) <= slack_; }

  // The current face has just traversed the dart u->v.
  bool walk(int u, int v) {
    if (!within_slack()) return false;
    const int a = pos(v, u);
    const int forced = succ_[slot(v, a)];
    if (forced >= 0) return advance(v, nbr_[static_cast<std::size_t>(v)][static_cast<std::size_t>(forced)]);

    // Candidate successors: closing the face first, then neighbours that
    // might close it at the next step.
    int cand[kMaxGraphOrder];
    int nc = 0;
    const int dv = deg(v);
    for (int b = 0; b < dv; ++b) {
      if (pred_[slot(v, b)] >= 0) continue;
      const int w = nbr_[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)];
      const bool is_start = v == start_tail_ && w == start_head_;
      if (!is_start && used_[slot(v, b)]) continue;
      cand[nc++] = b;
    }
    auto rank = [&](int b) {
      const int w = nbr_[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)];
      if (v == start_tail_ && w == start_head_) return 0;
      if (pos(w, start_tail_) >= 0) return 1;
      return 2;
    };
    std::stable_sort(cand, cand + nc, [&](int x, int y) { return rank(x) < rank(y); });
    for (int k = 0; k < nc; ++k) {
      const int b = cand[k];
      tick();
      const std::size_t mark = trail_.size();
      if (!link(v, a, b)) continue;
      if (v == 0 && mirror_orientation() < 0) {
        unlink(v, a, b, mark);
        continue;
      }
      const bool ok = advance(v, nbr_[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)]);
      unlink(v, a, b, mark);
      if (ok) return true;
    }
    return false;
  }

  // Moves the open face along v->w.
  bool advance(int v, int w) {
    if (v == start_tail_ && w == start_head_) {
      const int add = std::max(0, face_len_ - girth_);
      excess_ += add;
      ++faces_;
      const int saved_len = face_len_, saved_tail = start_tail_, saved_head = start_head_;
      const bool ok = excess_ <= slack_ && next_face();
      --faces_;
      excess_ -= add;
      face_len_ = saved_len;
      start_tail_ = saved_tail;
      start_head_ = saved_head;
      return ok;
    }
    const std::size_t d = slot(v, pos(v, w));
    if (used_[d]) return false;
    used_[d] = 1;
    ++face_len_;
    const bool ok = walk(v, w);
    --face_len_;
    used_[d] = 0;
    return ok;
  }

  long budget_;
  long nodes_ = 0;
  int girth_;
  int n_ = 0;
  int edges_ = 0;
  std::vector<int> old_of_, new_of_;
  std::vector<std::vector<int>> nbr_;
  std::vector<int> pos_;
  std::vector<int> offset_;
  std::vector<int> succ_, pred_, other_end_, chain_len_, found_succ_;
  std::vector<char> used_;
  std::vector<Undo> trail_;
  int target_faces_ = 0;
  int slack_ = 0;
  int excess_ = 0;
  int faces_ = 0;
  int face_len_ = 0;
  int start_tail_ = 0, start_head_ = 0;
};

int count_faces(const RotationSystem& rot, int n, std::vector<int>& next_after, std::vector<char>& used) {
  const auto nn = static_cast<std::size_t>(n);
  for (int v = 0; v < n; ++v) {
    const auto& cyc = rot.order[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      next_after[static_cast<std::size_t>(v) * nn + static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    }
  }
  std::fill(used.begin(), used.end(), 0);
  int faces = 0;
  for (int u = 0; u < n; ++u) {
    for (int v : rot.order[static_cast<std::size_t>(u)]) {
      if (used[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)]) continue;
      ++faces;
      int a = u, b = v;
      while (!used[static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)]) {
        used[static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)] = 1;
        const int c = next_after[static_cast<std::size_t>(b) * nn + static_cast<std::size_t>(a)];
        a = b;
        b = c;
      }
    }
  }
  return faces;
}

// Randomised hill climbing on single-neighbour moves, for a quick upper
// bound. Deterministic for a fixed graph.
RotationSystem improve_rotation(const SimpleGraph& g, RotationSystem rot) {
  const int n = g.order();
  const long darts = 2L * g.edge_count();
  if (darts == 0) return rot;
  std::vector<int> next_after(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  std::vector<char> used(next_after.size(), 0);
  std::vector<int> movable;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) movable.push_back(v);
  }
  if (movable.empty()) return rot;
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int faces = count_faces(rot, n, next_after, used);
  RotationSystem best = rot;
  int best_faces = faces;
  const long iterations = std::clamp(50'000'000L / darts, 5000L, 200000L);
  for (long it = 0; it < iterations; ++it) {
    const int v = movable[rng() % movable.size()];
    auto& cyc = rot.order[static_cast<std::size_t>(v)];
    const std::size_t from = rng() % cyc.size();
    std::size_t to = rng() % (cyc.size() - 1);
    const int u = cyc[from];
    cyc.erase(cyc.begin() + static_cast<long>(from));
    cyc.insert(cyc.begin() + static_cast<long>(to), u);
    const int f = count_faces(rot, n, next_after, used);
    const double temp = 1.5 * (1.0 - static_cast<double>(it) / static_cast<double>(iterations)) + 0.05;
    if (f >= faces || unit(rng) < std::exp(static_cast<double>(f - faces) / temp)) {
      faces = f;
      if (f > best_faces) {
        best_faces = f;
        best = rot;
      }
    } else {
      cyc.erase(cyc.begin() + static_cast<long>(to));
      cyc.insert(cyc.begin() + static_cast<long>(from), u);
    }
  }
  return best;
}

struct ComponentResult {
  GenusBounds bounds;
  RotationSystem rotation;  // local numbering, valid when bounds.upper is set
};

ComponentResult solve_component(const SimpleGraph& g, const GenusOptions& opts, long& budget_left) {
  ComponentResult r;
  const auto gr = girth(g);
  if (!gr) {
    r.bounds.lower = 0;
    r.bounds.upper = 0;
    r.bounds.lower_provenance = {"forest"};
    r.rotation = sorted_rotation(g);
    return r;
  }
  r.bounds = cheap_lower_bound(g, opts);
  if (r.bounds.lower == 0 && opts.planarity_bound) {
    if (auto emb = planar_embedding(g)) {
      r.bounds.upper = 0;
      r.rotation = *emb;
      return r;
    }
  }
  r.rotation = sorted_rotation(g);
  r.bounds.upper = face_trace(g, r.rotation).genus;
  if (*r.bounds.upper > r.bounds.lower) {
    r.rotation = improve_rotation(g, std::move(r.rotation));
    r.bounds.upper = face_trace(g, r.rotation).genus;
  }
  if (g.edge_count() > opts.exhaustive_edge_limit) return r;

  const int v = g.order();
  const int e = g.edge_count();
  for (int t = r.bounds.lower; t < *r.bounds.upper && t < opts.lower_target; ++t) {
    FaceSearch search(g, *gr, budget_left);
    std::optional<RotationSystem> found;
    try {
      found = search.run(2 - 2 * t - v + e);
    } catch (const BudgetExhausted&) {
      r.bounds.nodes += search.nodes();
      budget_left = 0;
      r.bounds.budget_exhausted = true;
      return r;
    }
    r.bounds.nodes += search.nodes();
    budget_left -= search.nodes();
    if (found) {
      r.rotation = *found;
      r.bounds.upper = face_trace(g, r.rotation).genus;
      if (*r.bounds.upper > t) throw Error("rotation search returned an embedding above its target");
      r.bounds.upper = t;
      break;
    }
    r.bounds.lower = t + 1;
    r.bounds.lower_provenance = {"exhaustive search"};
  }
  return r;
}

}  // namespace

GenusBounds exact_genus(const SimpleGraph& g, const GenusOptions& opts) {
  GenusBounds total;
  total.upper = 0;
  RotationSystem rot;
  rot.order.resize(static_cast<std::size_t>(g.order()));
  long budget_left = opts.budget;
  for (const auto& comp : connected_components(g)) {
    const SimpleGraph h = g.induced(comp);
    const ComponentResult r = solve_component(h, opts, budget_left);
    total.lower += r.bounds.lower;
    total.nodes += r.bounds.nodes;
    total.budget_exhausted = total.budget_exhausted || r.bounds.budget_exhausted;
    for (const auto& p : r.bounds.lower_provenance) {
      if (std::find(total.lower_provenance.begin(), total.lower_provenance.end(), p) == total.lower_provenance.end()) {
        total.lower_provenance.push_back(p);
      }
    }
    if (total.upper && r.bounds.upper) {
      *total.upper += *r.bounds.upper;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (int u : r.rotation.order[i]) rot.order[static_cast<std::size_t>(comp[i])].push_back(comp[static_cast<std::size_t>(u)]);
      }
    } else {
      total.upper.reset();
    }
  }
  if (total.upper) {
    EmbeddingCertificate cert = face_trace(g, rot);
    if (cert.genus != *total.upper) throw Error("assembled certificate disagrees with the component genera");
    total.certificate = std::move(cert);
  }
  return total;
}

}  // namespace zdg
