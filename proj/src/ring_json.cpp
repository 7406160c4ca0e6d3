#include "zdg/ring_json.hpp"

#include <json.hpp>

#include "zdg/errors.hpp"

namespace zdg {
namespace {

using nlohmann::json;

json to_json(const RingSpec& spec) {
  json j = std::visit(
      [](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ZMod>) {
          return {{"kind", "zmod"}, {"n", k.n}};
        } else if constexpr (std::is_same_v<K, GaloisField>) {
          return {{"kind", "gf"}, {"p", k.p}, {"k", k.k}};
        } else if constexpr (std::is_same_v<K, Product>) {
          json factors = json::array();
          for (const auto& f : k.factors) factors.push_back(to_json(f));
          return {{"kind", "product"}, {"factors", factors}};
        } else {
          json rels = json::array();
          for (const auto& r : k.relations) rels.push_back(format_rule(r, k.variables));
          json q = {{"kind", "quotient"}, {"base", k.base}, {"variables", k.variables}, {"relations", rels}};
          if (k.expected_order) q["expected_order"] = *k.expected_order;
          return q;
        }
      },
      spec.kind);
  if (!spec.name.empty()) j["name"] = spec.name;
  return j;
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InvalidSpec(std::string("ring document needs integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

RingSpec from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InvalidSpec("ring document needs a string field 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  RingSpec s;
  if (kind == "zmod") {
    s = zmod(int_field(j, "n"));
  } else if (kind == "gf") {
    s = gf(int_field(j, "p"), int_field(j, "k"));
  } else if (kind == "product") {
    if (!j.contains("factors") || !j.at("factors").is_array()) throw InvalidSpec("product needs 'factors'");
    std::vector<RingSpec> factors;
    for (const auto& f : j.at("factors")) factors.push_back(from_json(f));
    s = product(std::move(factors));
  } else if (kind == "quotient") {
    if (!j.contains("variables") || !j.contains("relations")) {
      throw InvalidSpec("quotient needs 'variables' and 'relations'");
    }
    std::optional<int> order;
    if (j.contains("expected_order")) order = int_field(j, "expected_order");
    try {
      s = quotient(int_field(j, "base"), j.at("variables").get<std::vector<std::string>>(),
                   j.at("relations").get<std::vector<std::string>>(), order, name);
    } catch (const json::exception& e) {
      throw InvalidSpec(std::string("quotient fields: ") + e.what());
    }
  } else {
    throw InvalidSpec("unknown ring kind '" + kind + "'");
  }
  if (!name.empty()) s.name = name;
  check_spec(s);
  return s;
}

}  // namespace

std::string spec_to_json(const RingSpec& spec, int indent) { return to_json(spec).dump(indent); }

RingSpec spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("ring document is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace zdg
