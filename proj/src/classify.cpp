#include "zdg/classify.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "zdg/catalog.hpp"
#include "zdg/errors.hpp"

namespace zdg {

namespace {

struct TheoremName {
  TheoremId id;
  const char* name;
};

constexpr TheoremName kTheorems[] = {
    {TheoremId::RedmondPlanar, "RedmondPlanar"},
    {TheoremId::GenusOneCliqueLe2, "GenusOneCliqueLe2"},
    {TheoremId::GenusOneClique3, "GenusOneClique3"},
    {TheoremId::GenusGe2, "GenusGe2"},
    {TheoremId::ExpansionGenus, "ExpansionGenus"},
    {TheoremId::QuotientStructure, "QuotientStructure"},
    {TheoremId::IsoTransfer, "IsoTransfer"},
    {TheoremId::Diameter3, "Diameter3"},
    {TheoremId::Girth4, "Girth4"},
    {TheoremId::CliqueMinimalPrimes, "CliqueMinimalPrimes"},
    {TheoremId::LocalOrderPower, "LocalOrderPower"},
    {TheoremId::ResidueFieldExpansion, "ResidueFieldExpansion"},
    {TheoremId::AcyclicResidueTwo, "AcyclicResidueTwo"},
    {TheoremId::Z2ProductSubgraphs, "Z2ProductSubgraphs"},
    {TheoremId::TriangleLocalRings, "TriangleLocalRings"},
    {TheoremId::ManyFactorsExpansion, "ManyFactorsExpansion"},
    {TheoremId::GenusTwoQuotient, "GenusTwoQuotient"},
    {TheoremId::ResidueTwoGenusOne, "ResidueTwoGenusOne"},
    {TheoremId::AttachmentGenus, "AttachmentGenus"},
    {TheoremId::GenusOneExamples, "GenusOneExamples"},
    {TheoremId::GenusTwoExamples, "GenusTwoExamples"},
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const RingTable& catalog_table(std::string_view name) {
  const auto& cat = catalog();
  const std::string key = fold_name(name);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (fold_name(cat[i].name) == key) return catalog_rings()[i];
  }
  throw InvalidSpec("no catalog ring named " + std::string(name));
}

namespace {

bool isomorphic_to(const RingTable& t, std::string_view name) {
  const RingTable& c = catalog_table(name);
  return c.order() == t.order() && iso_check(t, c).has_value();
}

int clique_of_quotient(const RingTable& q) { return clique_number(zero_divisor_graph(q).graph); }

// q = p^k with p prime, k >= 1.
bool prime_power(int q, int& p, int& k) {
  if (q < 2) return false;
  for (p = 2; p <= q; ++p) {
    if (q % p == 0) break;
  }
  k = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  return r == 1;
}

}  // namespace

const std::vector<RingTable>& catalog_rings() {
  static std::once_flag once;
  static std::vector<RingTable> tables;
  std::call_once(once, [] {
    for (const auto& e : catalog()) tables.push_back(build_ring(e.spec).renamed(e.name));
  });
  return tables;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& t : kTheorems) v.push_back(t.id);
    return v;
  }();
  return ids;
}

std::string theorem_name(TheoremId id) {
  for (const auto& t : kTheorems) {
    if (t.id == id) return t.name;
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& t : kTheorems) {
    if (lower(t.name) == key) return t.id;
  }
  return std::nullopt;
}

bool redmond_planar_predicate(const RingTable& quotient, int isize) {
  const SimpleGraph g = zero_divisor_graph(quotient).graph;
  if (girth(g)) return false;
  return isize == 2 || (g.order() == 1 && isize <= 4);
}

bool genus_one_clique_le2_predicate(const RingTable& quotient, int isize) {
  const int w = clique_of_quotient(quotient);
  if (w > 2) throw CliqueHypothesisViolated("quotient graph has clique number " + std::to_string(w) + " > 2");
  static const std::vector<std::pair<const char*, int>> cases = {
      {"Z_3xZ_3", 2},      {"Z_2xZ_2", 4},          {"Z_2xZ_3", 3}, {"Z_2xZ_4", 2}, {"Z_2xZ_2[x]/(x^2)", 2},
      {"Z_4", 7},          {"Z_2[x]/(x^2)", 7},     {"Z_9", 3},     {"Z_3[x]/(x^2)", 3},
      {"Z_8", 3},          {"Z_2[x]/(x^3)", 3},     {"Z_4[x]/(x^2-2,x^3)", 3},
  };
  for (const auto& [name, cap] : cases) {
    if (isomorphic_to(quotient, name)) return isize <= cap;
  }
  // Z_2 x F_q with q >= 4.
  int p = 0, k = 0;
  const int q = quotient.order() / 2;
  if (quotient.order() % 2 == 0 && q >= 4 && prime_power(q, p, k)) {
    const RingTable target = build_ring(product({zmod(2), gf(p, k)}));
    if (iso_check(quotient, target)) return isize <= 2;
  }
  return false;
}

bool genus_one_clique3_predicate(const RingTable& quotient, int isize) {
  const int w = clique_of_quotient(quotient);
  if (w != 3) throw CliqueHypothesisViolated("quotient graph has clique number " + std::to_string(w) + ", not 3");
  if (isize != 2) return false;
  for (const char* name : {"Z_2xZ_2xZ_2", "Z_16", "Z_2[x,y]/(x^2,xy,y^2)", "Z_4[x]/(2x,x^2)", "F_4[x]/(x^2)",
                           "Z_4[x]/(x^2+x+1)"}) {
    if (isomorphic_to(quotient, name)) return true;
  }
  return false;
}

bool genus_ge2_predicate(const RingTable& quotient) {
  const SimpleGraph g = zero_divisor_graph(quotient).graph;
  if (clique_number(g) >= 4) return true;
  GenusOptions o;
  o.lower_target = 1;
  return cheap_lower_bound(g, o).lower >= 1;
}

std::string identify_ring(const RingTable& t) {
  const auto& cat = catalog();
  const auto& tables = catalog_rings();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (tables[i].order() == t.order() && iso_check(t, tables[i])) return cat[i].name;
  }
  return "other";
}

RingElem parse_element(const RingTable& t, std::string_view expr) {
  std::string s;
  for (char c : expr) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InvalidSpec("empty element expression");
  auto times = [&](RingElem a, long n) {
    RingElem r = t.zero();
    for (long i = 0; i < n; ++i) r = t.add(r, a);
    return r;
  };
  RingElem total = t.zero();
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    long coeff = 1;
    const bool had_digits = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    if (had_digits) {
      coeff = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) coeff = coeff * 10 + (s[i++] - '0');
    }
    RingElem term = t.one();
    bool any = false;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      const auto var = t.find_label(std::string(1, s[i]));
      if (!var) throw InvalidSpec("unknown generator '" + std::string(1, s[i]) + "' in " + s);
      ++i;
      long power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw InvalidSpec("bad exponent in " + s);
        power = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) power = power * 10 + (s[i++] - '0');
      }
      for (long p = 0; p < power; ++p) term = t.mul(term, *var);
      any = true;
    }
    if (!any && !had_digits) {
      throw InvalidSpec("malformed element expression " + s);
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw InvalidSpec("malformed element expression " + s);
    RingElem value = times(term, coeff);
    if (negative) value = t.neg(value);
    total = t.add(total, value);
  }
  return total;
}

Instance synthesized_instance(const RingTable& target, int k) {
  if (k < 2) throw InvalidSpec("synthesized ideal needs at least 2 elements");
  if (static_cast<long>(target.order()) * k > kMaxRingOrder) {
    throw TooLarge("synthesized ring would have order " + std::to_string(target.order() * k));
  }
  const RingTable a = build_ring(zmod(k));
  const RingTable r = product_table({target, a}, target.name() + "×Z_" + std::to_string(k));
  ElementSet members;
  for (int i = 0; i < k; ++i) members.set(static_cast<std::size_t>(target.zero() * k + i));
  return {r, IdealSet(r, members)};
}

std::string describe_graph(const SimpleGraph& g) {
  const int n = g.order();
  if (n == 0) return "empty";
  if (g.edge_count() == n * (n - 1) / 2) return "K_" + std::to_string(n);
  // Complete multipartite iff non-adjacency is an equivalence relation.
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  std::vector<int> sizes;
  bool multipartite = true;
  for (int v = 0; v < n && multipartite; ++v) {
    if (part[static_cast<std::size_t>(v)] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    int size = 0;
    for (int u = v; u < n; ++u) {
      if (u == v || !g.adjacent(u, v)) {
        if (part[static_cast<std::size_t>(u)] >= 0) {
          multipartite = false;
          break;
        }
        part[static_cast<std::size_t>(u)] = id;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  if (multipartite) {
    for (int u = 0; u < n && multipartite; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v) == (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)])) {
          multipartite = false;
          break;
        }
      }
    }
  }
  if (multipartite && sizes.size() >= 2) {
    std::sort(sizes.begin(), sizes.end());
    std::string out = "K_{";
    for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
    return out + "}";
  }
  return "V=" + std::to_string(n) + ",E=" + std::to_string(g.edge_count());
}

GraphFacts graph_facts(const SimpleGraph& g) {
  GraphFacts f;
  f.order = g.order();
  f.edges = g.edge_count();
  f.diameter = diameter(g);
  f.girth = girth(g);
  f.clique = g.order() <= 200 ? clique_number(g) : -1;
  f.shape = describe_graph(g);
  return f;
}

std::string report_to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["ring"] = r.ring;
  j["ideal"] = r.ideal;
  j["ideal_size"] = r.ideal_size;
  j["quotient"] = r.quotient_target;
  j["construction"] = r.construction;
  j["order"] = r.graph.order;
  j["edges"] = r.graph.edges;
  j["diameter"] = r.graph.diameter ? nlohmann::ordered_json(*r.graph.diameter) : nlohmann::ordered_json(nullptr);
  j["girth"] = r.graph.girth ? nlohmann::ordered_json(*r.graph.girth) : nlohmann::ordered_json(nullptr);
  j["clique"] = r.graph.clique;
  j["shape"] = r.graph.shape;
  j["genus_lower"] = r.genus_lower;
  j["genus_upper"] = r.genus_upper ? nlohmann::ordered_json(*r.genus_upper) : nlohmann::ordered_json(nullptr);
  j["provenance"] = r.provenance;
  j["claim"] = r.claim;
  j["predicate"] = r.predicate;
  j["observed"] = r.observed ? nlohmann::ordered_json(*r.observed) : nlohmann::ordered_json(nullptr);
  j["agreement"] = r.agreement();
  j["note"] = r.note;
  return j.dump();
}

std::string reports_table(const std::vector<ClassificationReport>& reports) {
  auto pad = [](std::string s, std::size_t w) {
    // Column widths count code points so UTF-8 names line up.
    std::size_t len = 0;
    for (unsigned char c : s) len += (c & 0xC0) != 0x80;
    if (len < w) s.append(w - len, ' ');
    return s + "  ";
  };
  std::ostringstream out;
  out << pad("theorem", 21) << pad("ring", 30) << pad("|I|", 4) << pad("R/I", 26) << pad("V", 4) << pad("E", 5)
      << pad("genus", 7) << pad("claim", 22) << pad("pred", 5) << "result\n";
  for (const auto& r : reports) {
    std::string genus = std::to_string(r.genus_lower);
    if (!r.genus_upper) {
      genus += "..?";
    } else if (*r.genus_upper != r.genus_lower) {
      genus += ".." + std::to_string(*r.genus_upper);
    }
    const std::string result = r.inconclusive() ? "INCONCLUSIVE" : (r.agreement() ? "ok" : "DISAGREE");
    out << pad(r.theorem, 21) << pad(r.ring, 30) << pad(std::to_string(r.ideal_size), 4) << pad(r.quotient_target, 26)
        << pad(std::to_string(r.graph.order), 4) << pad(std::to_string(r.graph.edges), 5) << pad(genus, 7)
        << pad(r.claim, 22) << pad(r.predicate ? "yes" : "no", 5) << result;
    if (!r.note.empty()) out << "  " << r.note;
    out << "\n";
  }
  return out.str();
}

}  // namespace zdg
