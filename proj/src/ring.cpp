#include "zdg/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "zdg/errors.hpp"

namespace zdg {

RingTable::RingTable(std::vector<std::uint8_t> add, std::vector<std::uint8_t> mul,
                     std::vector<std::string> labels, RingElem zero, RingElem one, std::string name) {
  const auto n = labels.size();
  if (n < 1 || n > static_cast<std::size_t>(kMaxRingOrder)) {
    throw InvalidSpec("ring order " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxRingOrder) + "]");
  }
  if (add.size() != n * n || mul.size() != n * n) throw InvalidSpec("table size does not match labels");
  if (zero < 0 || one < 0 || static_cast<std::size_t>(zero) >= n || static_cast<std::size_t>(one) >= n) {
    throw InvalidSpec("zero/one index out of range");
  }
  auto d = std::make_shared<Data>();
  d->order = static_cast<int>(n);
  d->add = std::move(add);
  d->mul = std::move(mul);
  d->labels = std::move(labels);
  d->zero = zero;
  d->one = one;
  d->name = std::move(name);
  // Negation is only meaningful on a valid table; missing inverses map to zero
  // and are reported by validate_table.
  d->neg.assign(n, static_cast<std::uint8_t>(zero));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (d->add[a * n + b] == zero) {
        d->neg[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  d_ = std::move(d);
}

std::optional<RingElem> RingTable::find_label(const std::string& label) const {
  const auto& ls = d_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<RingElem>(it - ls.begin());
}

RingTable RingTable::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return RingTable(std::shared_ptr<const Data>(std::move(d)));
}

RingTable RingTable::relabeled(const std::vector<int>& perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw InvalidSpec("permutation size mismatch");
  std::vector<std::uint8_t> add(static_cast<std::size_t>(n * n)), mul(add.size());
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    labels[static_cast<std::size_t>(perm[a])] = label(a);
    for (int b = 0; b < n; ++b) {
      const auto pos = static_cast<std::size_t>(perm[a] * n + perm[b]);
      add[pos] = static_cast<std::uint8_t>(perm[this->add(a, b)]);
      mul[pos] = static_cast<std::uint8_t>(perm[this->mul(a, b)]);
    }
  }
  return RingTable(std::move(add), std::move(mul), std::move(labels), perm[zero()], perm[one()],
                   name());
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << "; ";
    os << v.axiom << "(" << v.a << "," << v.b << "," << v.c << ")";
  }
  return os.str();
}

ValidationReport validate_table(const RingTable& t) {
  ValidationReport rep;
  const int n = t.order();
  const auto& add = t.add_table();
  const auto& mul = t.mul_table();
  for (std::size_t i = 0; i < add.size(); ++i) {
    if (add[i] >= n || mul[i] >= n) {
      const int a = static_cast<int>(i) / n;
      const int b = static_cast<int>(i) % n;
      rep.violations.push_back({"closure", a, b, -1});
      return rep;
    }
  }
  if (t.zero() == t.one()) rep.violations.push_back({"nontrivial", t.zero(), t.one(), -1});

  auto first = [&](const char* axiom, auto&& holds, int arity) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < (arity > 1 ? n : 1); ++b) {
        for (int c = 0; c < (arity > 2 ? n : 1); ++c) {
          if (!holds(a, b, c)) {
            rep.violations.push_back({axiom, a, arity > 1 ? b : -1, arity > 2 ? c : -1});
            return;
          }
        }
      }
    }
  };
  first("additive identity", [&](int a, int, int) { return t.add(a, t.zero()) == a; }, 1);
  first("multiplicative identity", [&](int a, int, int) { return t.mul(a, t.one()) == a; }, 1);
  first("additive inverse", [&](int a, int, int) { return t.add(a, t.neg(a)) == t.zero(); }, 1);
  first("additive commutativity", [&](int a, int b, int) { return t.add(a, b) == t.add(b, a); }, 2);
  first("commutativity", [&](int a, int b, int) { return t.mul(a, b) == t.mul(b, a); }, 2);
  first("additive associativity",
        [&](int a, int b, int c) { return t.add(t.add(a, b), c) == t.add(a, t.add(b, c)); }, 3);
  first("associativity",
        [&](int a, int b, int c) { return t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)); }, 3);
  first("distributivity", [&](int a, int b, int c) {
    return t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c));
  }, 3);
  return rep;
}

namespace {

struct DegLexCmp {
  bool operator()(const Monomial& a, const Monomial& b) const { return deglex_less(a, b); }
};

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

RingTable build_zmod(int n, std::string name) {
  if (n > kMaxRingOrder) throw TooLarge("Z_" + std::to_string(n) + " exceeds the supported order");
  std::vector<std::uint8_t> add(static_cast<std::size_t>(n * n)), mul(add.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      add[static_cast<std::size_t>(a * n + b)] = static_cast<std::uint8_t>((a + b) % n);
      mul[static_cast<std::size_t>(a * n + b)] = static_cast<std::uint8_t>((a * b) % n);
    }
  }
  return RingTable(std::move(add), std::move(mul), numeric_labels(n), 0, 1, std::move(name));
}

/// Normal forms of Z_base[vars] under a set of rewrite rules.
class QuotientBuilder {
 public:
  explicit QuotientBuilder(const QuotientAlgebra& q) : q_(q), n_(q.base) {}

  RingTable build(const std::string& name) {
    enumerate_basis();
    long count = 1;
    for (long m : moduli_) {
      count *= m;
      if (count > kMaxRingOrder) {
        throw TooLarge("presentation '" + name + "' has more than " + std::to_string(kMaxRingOrder) +
                       " normal forms");
      }
    }
    const int order = static_cast<int>(count);
    if (q_.expected_order && *q_.expected_order != order) {
      throw NonConfluentPresentation("presentation '" + name + "' yields " + std::to_string(order) +
                                     " normal forms, expected " + std::to_string(*q_.expected_order));
    }
    if (order < 2) throw NonConfluentPresentation("presentation '" + name + "' collapses to the zero ring");

    std::vector<Poly> elems(static_cast<std::size_t>(order));
    std::vector<std::string> labels(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
      elems[static_cast<std::size_t>(i)] = decode(i);
      labels[static_cast<std::size_t>(i)] = format(elems[static_cast<std::size_t>(i)]);
    }
    std::vector<std::uint8_t> add(static_cast<std::size_t>(order * order)), mul(add.size());
    for (int a = 0; a < order; ++a) {
      for (int b = a; b < order; ++b) {
        const auto& pa = elems[static_cast<std::size_t>(a)];
        const auto& pb = elems[static_cast<std::size_t>(b)];
        Poly s = pa;
        for (const auto& [m, c] : pb) s[m] += c;
        Poly p;
        for (const auto& [ma, ca] : pa) {
          for (const auto& [mb, cb] : pb) {
            Monomial m(ma.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
            p[m] += ca * cb;
          }
        }
        const auto sa = static_cast<std::uint8_t>(encode(normalize(std::move(s)), name));
        const auto pr = static_cast<std::uint8_t>(encode(normalize(std::move(p)), name));
        add[static_cast<std::size_t>(a * order + b)] = add[static_cast<std::size_t>(b * order + a)] = sa;
        mul[static_cast<std::size_t>(a * order + b)] = mul[static_cast<std::size_t>(b * order + a)] = pr;
      }
    }
    Poly one;
    one[Monomial(q_.variables.size(), 0)] = 1;
    const int one_idx = encode(normalize(one), name);
    return RingTable(std::move(add), std::move(mul), std::move(labels), 0, one_idx, name);
  }

 private:
  using Poly = std::map<Monomial, long, DegLexCmp>;

  bool reducible_monomial(const Monomial& m) const {
    for (const auto& r : q_.relations) {
      if (r.lhs_coeff == 1 && divides(r.lhs, m)) return true;
    }
    return false;
  }

  static void compositions(int vars, int deg, Monomial& cur, std::size_t at, std::vector<Monomial>& out) {
    if (at + 1 == cur.size()) {
      cur[at] = deg;
      out.push_back(cur);
      return;
    }
    for (int e = deg; e >= 0; --e) {
      cur[at] = e;
      compositions(vars, deg - e, cur, at + 1, out);
    }
  }

  void enumerate_basis() {
    const std::size_t nv = q_.variables.size();
    for (int d = 0;; ++d) {
      if (d > 64) throw InvalidSpec("presentation does not define a finite ring");
      std::vector<Monomial> layer;
      Monomial cur(nv, 0);
      compositions(static_cast<int>(nv), d, cur, 0, layer);
      bool any = false;
      for (auto& m : layer) {
        if (reducible_monomial(m)) continue;
        any = true;
        basis_.push_back(m);
      }
      if (!any) break;
    }
    std::sort(basis_.begin(), basis_.end(), deglex_less);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      long mod = n_;
      for (const auto& r : q_.relations) {
        if (r.lhs_coeff > 1 && divides(r.lhs, basis_[i])) mod = std::min(mod, r.lhs_coeff);
      }
      moduli_.push_back(mod);
      position_[basis_[i]] = i;
    }
  }

  Poly normalize(Poly p) const {
    for (int guard = 0;; ++guard) {
      if (guard > 100000) throw NonConfluentPresentation("rewriting did not terminate");
      bool changed = false;
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const Monomial mono = it->first;
        const long a = ((it->second % n_) + n_) % n_;
        if (a == 0) {
          p.erase(mono);
          changed = true;
          break;
        }
        it->second = a;
        const RewriteRule* rule = nullptr;
        for (const auto& r : q_.relations) {
          if (!divides(r.lhs, mono)) continue;
          if (r.lhs_coeff == 1 || a >= r.lhs_coeff) {
            rule = &r;
            break;
          }
        }
        if (!rule) continue;
        const long quot = a / rule->lhs_coeff;
        const long rem = a % rule->lhs_coeff;
        if (rem == 0) p.erase(mono);
        else p[mono] = rem;
        Monomial shift(mono.size());
        for (std::size_t k = 0; k < mono.size(); ++k) shift[k] = mono[k] - rule->lhs[k];
        for (const auto& t : rule->rhs.terms) {
          Monomial m(mono.size());
          for (std::size_t k = 0; k < mono.size(); ++k) m[k] = t.mono[k] + shift[k];
          auto& slot = p[m];
          slot = (slot + quot * t.coeff) % n_;
        }
        changed = true;
        break;
      }
      if (!changed) return p;
    }
  }

  Poly decode(int index) const {
    Poly p;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const long c = index % moduli_[i];
      index = static_cast<int>(index / moduli_[i]);
      if (c) p[basis_[i]] = c;
    }
    return p;
  }

  int encode(const Poly& p, const std::string& name) const {
    long index = 0;
    long radix = 1;
    std::vector<long> digits(basis_.size(), 0);
    for (const auto& [m, c] : p) {
      auto it = position_.find(m);
      if (it == position_.end() || c < 0 || c >= moduli_[it->second]) {
        throw NonConfluentPresentation("presentation '" + name + "' produced a non-normal form");
      }
      digits[it->second] = c;
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      index += digits[i] * radix;
      radix *= moduli_[i];
    }
    return static_cast<int>(index);
  }

  std::string format(const Poly& p) const {
    Polynomial out;
    for (const auto& [m, c] : p) out.terms.push_back({c, m});
    return format_polynomial(out, q_.variables);
  }

  const QuotientAlgebra& q_;
  long n_;
  std::vector<Monomial> basis_;
  std::vector<long> moduli_;
  std::map<Monomial, std::size_t, DegLexCmp> position_;
};

QuotientAlgebra field_presentation(int p, int k) {
  const auto f = field_modulus(p, k);
  QuotientAlgebra q;
  q.base = p;
  q.variables = {"t"};
  RewriteRule r;
  r.lhs = {k};
  for (int i = 0; i < k; ++i) {
    const long c = (p - f[static_cast<std::size_t>(i)]) % p;
    if (c) r.rhs.terms.push_back({c, {i}});
  }
  q.relations.push_back(r);
  int order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  q.expected_order = order;
  return q;
}

}  // namespace

RingTable product_table(const std::vector<RingTable>& factors, std::string name) {
  if (factors.empty()) throw InvalidSpec("product needs at least one factor");
  long order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    if (order > kMaxRingOrder) throw TooLarge("product exceeds the supported order");
  }
  const int n = static_cast<int>(order);
  const std::size_t k = factors.size();
  std::vector<std::vector<int>> digits(static_cast<std::size_t>(n), std::vector<int>(k));
  for (int i = 0; i < n; ++i) {
    int rest = i;
    for (std::size_t f = k; f-- > 0;) {
      digits[static_cast<std::size_t>(i)][f] = rest % factors[f].order();
      rest /= factors[f].order();
    }
  }
  auto encode = [&](const std::vector<int>& d) {
    int idx = 0;
    for (std::size_t f = 0; f < k; ++f) idx = idx * factors[f].order() + d[f];
    return idx;
  };
  std::vector<std::uint8_t> add(static_cast<std::size_t>(n * n)), mul(add.size());
  std::vector<int> s(k), p(k);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (std::size_t f = 0; f < k; ++f) {
        const int x = digits[static_cast<std::size_t>(a)][f];
        const int y = digits[static_cast<std::size_t>(b)][f];
        s[f] = factors[f].add(x, y);
        p[f] = factors[f].mul(x, y);
      }
      add[static_cast<std::size_t>(a * n + b)] = static_cast<std::uint8_t>(encode(s));
      mul[static_cast<std::size_t>(a * n + b)] = static_cast<std::uint8_t>(encode(p));
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    std::string l = "(";
    for (std::size_t f = 0; f < k; ++f) {
      if (f) l += ",";
      l += factors[f].label(digits[static_cast<std::size_t>(i)][f]);
    }
    labels.push_back(l + ")");
  }
  std::vector<int> zero(k), one(k);
  for (std::size_t f = 0; f < k; ++f) {
    zero[f] = factors[f].zero();
    one[f] = factors[f].one();
  }
  if (name.empty()) {
    for (const auto& f : factors) {
      if (!name.empty()) name += "×";
      name += f.name();
    }
  }
  return RingTable(std::move(add), std::move(mul), std::move(labels), encode(zero), encode(one),
                   std::move(name));
}

RingTable build_ring(const RingSpec& spec) {
  check_spec(spec);
  const std::string name = display_name(spec);
  RingTable t = std::visit(
      [&](const auto& k) -> RingTable {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ZMod>) {
          return build_zmod(k.n, name);
        } else if constexpr (std::is_same_v<K, GaloisField>) {
          if (k.k == 1) return build_zmod(k.p, name);
          const QuotientAlgebra q = field_presentation(k.p, k.k);
          return QuotientBuilder(q).build(name);
        } else if constexpr (std::is_same_v<K, Product>) {
          std::vector<RingTable> parts;
          for (const auto& f : k.factors) parts.push_back(build_ring(f));
          return product_table(parts, name);
        } else {
          return QuotientBuilder(k).build(name);
        }
      },
      spec.kind);
  const auto report = validate_table(t);
  if (!report.ok()) {
    throw NonConfluentPresentation("ring '" + name + "' fails ring axioms: " + report.summary());
  }
  return t;
}

std::vector<RingElem> units(const RingTable& t) {
  std::vector<RingElem> out;
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      if (t.mul(a, b) == t.one()) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::vector<RingElem> zero_divisors(const RingTable& t) {
  std::vector<RingElem> out;
  for (int a = 0; a < t.order(); ++a) {
    if (a == t.zero()) continue;
    for (int b = 0; b < t.order(); ++b) {
      if (b != t.zero() && t.mul(a, b) == t.zero()) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::optional<int> nilpotency_index(const RingTable& t, RingElem a) {
  RingElem p = a;
  for (int k = 1; k <= t.order(); ++k) {
    if (p == t.zero()) return k;
    p = t.mul(p, a);
  }
  return std::nullopt;
}

int additive_order(const RingTable& t, RingElem a) {
  RingElem s = a;
  for (int k = 1; k <= t.order(); ++k) {
    if (s == t.zero()) return k;
    s = t.add(s, a);
  }
  return t.order();
}

}  // namespace zdg
