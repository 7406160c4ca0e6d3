#include "zdg/catalog.hpp"

#include <regex>
#include <set>

#include "zdg/errors.hpp"

namespace zdg {
namespace {

RingSpec prime_or_gf(int q) {
  for (int p : {2, 3, 5, 7, 11}) {
    int k = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r == 1 && k > 0) return k == 1 ? zmod(p) : gf(p, k);
  }
  return zmod(q);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  auto add = [&](RingSpec spec, CatalogGroup g, std::string family = {}) {
    const std::string name = display_name(spec);
    if (!seen.insert(name).second) return;
    out.push_back({name, std::move(spec), g, family.empty() ? name : std::move(family)});
  };
  auto q = [](std::string name, int base, std::vector<std::string> vars,
              const std::vector<std::string>& rules, int order) {
    return quotient(base, std::move(vars), rules, order, std::move(name));
  };

  // Relations are written as rewrite rules; where a listed generator is not
  // itself a leading-term rule, the consequences needed for termination are
  // listed after it.
  const RingSpec z2x2 = q("Z_2[x]/(x²)", 2, {"x"}, {"x^2 -> 0"}, 4);
  const RingSpec z2x3 = q("Z_2[x]/(x³)", 2, {"x"}, {"x^3 -> 0"}, 8);
  const RingSpec z3x2 = q("Z_3[x]/(x²)", 3, {"x"}, {"x^2 -> 0"}, 9);
  const RingSpec z4_x2m2_x3 = q("Z_4[x]/(x²−2,x³)", 4, {"x"}, {"x^2 -> 2", "2x -> 0"}, 8);
  const std::vector<RingSpec> local_planar = {
      zmod(4),
      zmod(8),
      zmod(9),
      zmod(16),
      zmod(25),
      zmod(27),
      z2x2,
      z2x3,
      q("Z_2[x]/(x⁴)", 2, {"x"}, {"x^4 -> 0"}, 16),
      q("Z_2[x,y]/(x²,xy,y²)", 2, {"x", "y"}, {"x^2 -> 0", "xy -> 0", "y^2 -> 0"}, 8),
      q("Z_2[x,y]/(x²,y²)", 2, {"x", "y"}, {"x^2 -> 0", "y^2 -> 0"}, 16),
      q("Z_2[x,y]/(x³,xy,y²−x²)", 2, {"x", "y"}, {"x^2 -> y^2", "xy -> 0", "x^3 -> 0", "y^3 -> 0"}, 16),
      q("F_4[x]/(x²)", 2, {"t", "x"}, {"t^2 -> 1+t", "x^2 -> 0"}, 16),
      z3x2,
      q("Z_3[x]/(x³)", 3, {"x"}, {"x^3 -> 0"}, 27),
      q("Z_4[x]/(x²)", 4, {"x"}, {"x^2 -> 0"}, 16),
      q("Z_4[x]/(x²+x+1)", 4, {"x"}, {"x^2 -> 3+3x"}, 16),
      q("Z_4[x]/(2x,x²)", 4, {"x"}, {"2x -> 0", "x^2 -> 0"}, 8),
      q("Z_4[x]/(x²−2,x⁴)", 4, {"x"}, {"x^2 -> 2", "x^4 -> 0"}, 16),
      q("Z_4[x]/(x³−2,x⁴)", 4, {"x"}, {"x^3 -> 2", "x^4 -> 0", "2x -> 0"}, 16),
      z4_x2m2_x3,
      q("Z_4[x]/(x³,x²−2x)", 4, {"x"}, {"x^2 -> 2x", "x^3 -> 0"}, 16),
      q("Z_4[x]/(x³+x²−2,x⁴)", 4, {"x"}, {"x^2 -> 2+2x", "x^3 -> 2+3x^2", "x^4 -> 0"}, 16),
      q("Z_4[x,y]/(x²,y²,xy−2)", 4, {"x", "y"}, {"x^2 -> 0", "y^2 -> 0", "xy -> 2", "2x -> 0", "2y -> 0"},
        16),
      q("Z_4[x,y]/(x³,x²−2,xy,y²−2)", 4, {"x", "y"},
        {"x^2 -> 2", "xy -> 0", "y^2 -> 2", "x^3 -> 0", "2x -> 0", "2y -> 0"}, 16),
      q("Z_5[x]/(x²)", 5, {"x"}, {"x^2 -> 0"}, 25),
      q("Z_8[x]/(x²−4,2x)", 8, {"x"}, {"x^2 -> 4", "2x -> 0"}, 16),
      q("Z_9[x]/(x²−3,x³)", 9, {"x"}, {"x^2 -> 3", "x^3 -> 0", "3x -> 0"}, 27),
      q("Z_9[x]/(x²+3,x³)", 9, {"x"}, {"x^2 -> 6", "x^3 -> 0", "3x -> 0"}, 27),
  };
  for (const auto& s : local_planar) add(s, CatalogGroup::LocalPlanar);

  const std::vector<RingSpec> local_toroidal = {
      zmod(32),
      zmod(49),
      q("Z_2[x]/(x⁵)", 2, {"x"}, {"x^5 -> 0"}, 32),
      q("F_8[x]/(x²)", 2, {"t", "x"}, {"t^3 -> 1+t", "x^2 -> 0"}, 64),
      q("Z_2[x,y]/(x³,xy,y²)", 2, {"x", "y"}, {"x^3 -> 0", "xy -> 0", "y^2 -> 0"}, 16),
      q("Z_2[x,y,z]/(x,y,z)²", 2, {"x", "y", "z"},
        {"x^2 -> 0", "xy -> 0", "xz -> 0", "y^2 -> 0", "yz -> 0", "z^2 -> 0"}, 16),
      q("Z_4[x]/(x³+x+1)", 4, {"x"}, {"x^3 -> 3+3x"}, 64),
      q("Z_4[x]/(x³−x+1)", 4, {"x"}, {"x^3 -> 3+x"}, 64),
      q("Z_4[x]/(x³−2,x⁵)", 4, {"x"}, {"x^3 -> 2", "x^5 -> 0", "2x^2 -> 0"}, 32),
      q("Z_4[x]/(x⁴−2,x⁵)", 4, {"x"}, {"x^4 -> 2", "x^5 -> 0", "2x -> 0"}, 32),
      q("Z_4[x]/(x⁴+x³−2,x⁵)", 4, {"x"}, {"x^3 -> 2+2x", "x^4 -> 2+3x^3", "x^5 -> 0", "2x^2 -> 0"}, 32),
      q("Z_4[x]/(x³,2x)", 4, {"x"}, {"x^3 -> 0", "2x -> 0"}, 16),
      q("Z_4[x,y]/(x³,x²−2,xy,y²)", 4, {"x", "y"},
        {"x^2 -> 2", "xy -> 0", "y^2 -> 0", "x^3 -> 0", "2x -> 0", "2y -> 0"}, 16),
      q("Z_4[x,y]/(2x,2y,x²,xy,y²)", 4, {"x", "y"}, {"2x -> 0", "2y -> 0", "x^2 -> 0", "xy -> 0", "y^2 -> 0"},
        16),
      q("Z_7[x]/(x²)", 7, {"x"}, {"x^2 -> 0"}, 49),
      q("Z_8[x]/(x²,2x)", 8, {"x"}, {"x^2 -> 0", "2x -> 0"}, 16),
      q("Z_8[x]/(x²−2,x⁵)", 8, {"x"}, {"x^2 -> 2", "x^5 -> 0", "4x -> 0"}, 32),
      q("Z_8[x]/(3x²−2,x⁵)", 8, {"x"}, {"x^2 -> 6", "x^5 -> 0", "4x -> 0"}, 32),
  };
  for (const auto& s : local_toroidal) add(s, CatalogGroup::LocalToroidal);

  for (int p : {2, 3}) {
    const std::string family = "Z_" + std::to_string(p) + "×F_q";
    for (int qq : {2, 3, 4, 5, 7, 8, 9}) {
      add(product({zmod(p), prime_or_gf(qq)}), CatalogGroup::TwoMaximalPlanar, family);
    }
  }
  const std::vector<RingSpec> two_max = {
      product({zmod(2), zmod(9)}),
      product({zmod(2), z3x2}),
      product({zmod(2), zmod(4)}),
      product({zmod(2), z2x2}),
      product({zmod(2), z2x3}),
      product({zmod(2), z4_x2m2_x3}),
      product({zmod(2), zmod(8)}),
      product({zmod(3), zmod(9)}),
      product({zmod(3), z3x2}),
      product({zmod(3), zmod(4)}),
      product({zmod(3), z2x2}),
      product({zmod(2), zmod(2), zmod(2)}),
      product({zmod(2), zmod(2), zmod(3)}),
  };
  for (const auto& s : two_max) add(s, CatalogGroup::TwoMaximalPlanar);

  for (int n = 2; n <= 32; ++n) add(zmod(n), CatalogGroup::Extra);
  for (int qq : {4, 8, 9, 16, 25, 27, 32, 49}) add(prime_or_gf(qq), CatalogGroup::Extra);
  add(product({zmod(2), zmod(2), zmod(2), zmod(2)}), CatalogGroup::Extra);
  add(product({zmod(2), zmod(2), zmod(4)}), CatalogGroup::Extra);
  add(product({zmod(3), zmod(3), zmod(2)}), CatalogGroup::Extra);
  add(product({zmod(2), zmod(2), zmod(2), zmod(3)}), CatalogGroup::Extra);
  return out;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::string fold_name(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  replace_all(s, "×", "x");
  replace_all(s, "*", "x");
  replace_all(s, "−", "-");
  static const char* const sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  for (int d = 0; d < 10; ++d) replace_all(s, sup[d], "^" + std::to_string(d));
  return s;
}

std::optional<CatalogEntry> catalog_lookup(std::string_view name) {
  const std::string key = fold_name(name);
  for (const auto& e : catalog()) {
    if (fold_name(e.name) == key) return e;
  }
  return std::nullopt;
}

namespace {

RingSpec factor_spec(const std::string& folded) {
  for (const auto& e : catalog()) {
    if (fold_name(e.name) == folded) return e.spec;
  }
  static const std::regex cyclic(R"(Z_?\(?(\d+)\)?)");
  static const std::regex field(R"((?:F_?|GF)\(?(\d+)\)?)");
  std::smatch m;
  if (std::regex_match(folded, m, cyclic)) return zmod(std::stoi(m[1]));
  if (std::regex_match(folded, m, field)) {
    const int q = std::stoi(m[1]);
    for (int p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      int k = 0, r = q;
      while (r % p == 0) {
        r /= p;
        ++k;
      }
      if (r != 1) break;
      return k == 1 ? zmod(p) : gf(p, k);
    }
    throw InvalidSpec("no field of order " + std::to_string(q));
  }
  throw InvalidSpec("unknown ring '" + folded + "'");
}

}  // namespace

RingSpec spec_from_name(std::string_view name) {
  const std::string folded = fold_name(name);
  if (folded.empty()) throw InvalidSpec("empty ring name");
  if (auto e = catalog_lookup(folded)) return e->spec;
  std::vector<std::string> parts(1);
  int depth = 0;
  for (char c : folded) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == 'x' && depth == 0) {
      parts.emplace_back();
    } else {
      parts.back().push_back(c);
    }
  }
  if (parts.size() == 1) return factor_spec(folded);
  std::vector<RingSpec> factors;
  for (const auto& p : parts) {
    if (p.empty()) throw InvalidSpec("empty factor in '" + std::string(name) + "'");
    factors.push_back(factor_spec(p));
  }
  return product(std::move(factors));
}

std::string group_name(CatalogGroup g) {
  switch (g) {
    case CatalogGroup::LocalPlanar: return "local-planar";
    case CatalogGroup::LocalToroidal: return "local-toroidal";
    case CatalogGroup::TwoMaximalPlanar: return "two-maximal-planar";
    case CatalogGroup::Extra: return "extra";
  }
  return "extra";
}

}  // namespace zdg
