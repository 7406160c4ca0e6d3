#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace zdg {

/// Exponent vector over the variables of a presentation.
using Monomial = std::vector<int>;

int degree(const Monomial& m);
/// Degree first, then lexicographic on the exponent vector (first variable
/// most significant).
bool deglex_less(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);

struct Term {
  long coeff = 0;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial; terms are kept in ascending deg-lex order with no
/// repeated monomials and no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;
  bool operator==(const Polynomial&) const = default;
};

/// `lhs_coeff * lhs  ->  rhs`. A rule with lhs_coeff > 1 bounds the
/// coefficient of every multiple of `lhs` to [0, lhs_coeff).
struct RewriteRule {
  long lhs_coeff = 1;
  Monomial lhs;
  Polynomial rhs;
  bool operator==(const RewriteRule&) const = default;
};

struct ZMod {
  int n = 2;
  bool operator==(const ZMod&) const = default;
};

struct GaloisField {
  int p = 2;
  int k = 1;
  bool operator==(const GaloisField&) const = default;
};

struct RingSpec;

struct Product {
  std::vector<RingSpec> factors;
  bool operator==(const Product&) const;
};

/// Z_base[variables] modulo rewrite rules. Variables are single letters.
struct QuotientAlgebra {
  int base = 2;
  std::vector<std::string> variables;
  std::vector<RewriteRule> relations;
  /// When present, build_ring rejects a table of any other order.
  std::optional<int> expected_order;
  bool operator==(const QuotientAlgebra&) const = default;
};

struct RingSpec {
  std::variant<ZMod, GaloisField, Product, QuotientAlgebra> kind;
  std::string name;
  bool operator==(const RingSpec&) const = default;
};

inline bool Product::operator==(const Product& o) const { return factors == o.factors; }

RingSpec zmod(int n);
RingSpec gf(int p, int k);
RingSpec product(std::vector<RingSpec> factors);
/// Builds a quotient algebra from rule strings such as "x^2 -> 2x" or
/// "2x -> 0". Throws InvalidSpec on malformed rules.
RingSpec quotient(int base, std::vector<std::string> variables,
                  const std::vector<std::string>& rules, std::optional<int> expected_order = {},
                  std::string name = {});

/// Display name derived from the structure when `name` is empty.
std::string display_name(const RingSpec& spec);

/// Checks the presentation invariants (moduli, primality, rule orientation).
void check_spec(const RingSpec& spec);

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);
RewriteRule parse_rule(std::string_view text, const std::vector<std::string>& variables);
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& variables);
std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables);
std::string format_rule(const RewriteRule& r, const std::vector<std::string>& variables);

/// Irreducible polynomial used for GF(p^k), lowest coefficient first (monic,
/// length k + 1). Throws InvalidSpec when the field is not tabulated.
std::vector<int> field_modulus(int p, int k);

bool is_prime_number(int n);

}  // namespace zdg
