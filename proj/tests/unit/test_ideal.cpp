#include <doctest.h>

#include "oracles.hpp"
#include "zdg/catalog.hpp"
#include "zdg/classify.hpp"
#include "zdg/errors.hpp"
#include "zdg/ideal.hpp"

using namespace zdg;

namespace {

RingTable named(const char* name) { return build_ring(spec_from_name(name)); }

IdealSet gen(const RingTable& t, std::vector<const char*> gens) {
  std::vector<RingElem> es;
  for (auto g : gens) es.push_back(parse_element(t, g));
  return generated_ideal(t, es);
}

std::vector<std::string> labels(const IdealSet& i) { return i.labels(); }

}  // namespace

TEST_CASE("cyclic ideals") {
  const RingTable z6 = build_ring(zmod(6));
  CHECK(labels(cyclic_ideal(z6, parse_element(z6, "2"))) == std::vector<std::string>{"0", "2", "4"});
  CHECK(cyclic_ideal(z6, z6.zero()).is_zero());
  CHECK(cyclic_ideal(z6, z6.one()).is_whole());
}

TEST_CASE("enumeration matches subset search") {
  for (const char* name : {"Z_6", "Z_8", "Z_12", "F_4", "Z_2xZ_2xZ_2", "Z_2[x]/(x^3)", "Z_4[x]/(2x,x^2)",
                           "Z_2[x,y]/(x^2,y^2)", "Z_4[x]/(x^2+x+1)", "Z_2xZ_4", "Z_16"}) {
    const RingTable t = named(name);
    std::set<std::vector<int>> got;
    for (const auto& i : enumerate_ideals(t)) {
      const auto e = i.elements();
      got.insert(std::vector<int>(e.begin(), e.end()));
      CHECK(is_ideal(t, i.members()));
    }
    CHECK_MESSAGE(got == oracle::ideals_by_subsets(t), name);
  }
}

TEST_CASE("ideal counts") {
  CHECK(enumerate_ideals(build_ring(zmod(6))).size() == 4);
  CHECK(enumerate_ideals(named("F_9")).size() == 2);
  CHECK(enumerate_ideals(named("Z_2xZ_2xZ_2")).size() == 8);
  // Z_n has one ideal per divisor of n.
  for (int n = 2; n <= 64; ++n) {
    int divisors = 0;
    for (int d = 1; d <= n; ++d) divisors += n % d == 0;
    CHECK(static_cast<int>(enumerate_ideals(build_ring(zmod(n))).size()) == divisors);
  }
}

TEST_CASE("enumeration order is by size then membership") {
  const auto ideals = enumerate_ideals(build_ring(zmod(16)));
  REQUIRE(ideals.size() == 5);
  std::vector<std::string> gens;
  for (const auto& i : ideals) gens.push_back(i.is_whole() ? "R" : describe_ideal(i));
  CHECK(gens == std::vector<std::string>{"(0)", "(8)", "(4)", "(2)", "R"});
}

TEST_CASE("quotients") {
  const RingTable z16 = build_ring(zmod(16));
  const QuotientRing q = quotient(gen(z16, {"8"}));
  CHECK(q.table.order() == 8);
  CHECK(iso_check(q.table, build_ring(zmod(8))).has_value());
  CHECK(validate_table(q.table).ok());

  const RingTable z6 = build_ring(zmod(6));
  CHECK(iso_check(quotient(zero_ideal(z6)).table, z6).has_value());

  const Instance inst = synthesized_instance(z6, 2);
  CHECK(iso_check(quotient(inst.ideal).table, z6).has_value());

  CHECK_THROWS_AS(quotient(gen(z6, {"1"})), WholeRingIdeal);
}

TEST_CASE("projection is a surjective homomorphism for every catalog ideal") {
  for (const auto& t : catalog_rings()) {
    if (t.order() > 32) continue;
    for (const auto& i : enumerate_ideals(t)) {
      if (i.is_whole()) continue;
      const QuotientRing q = quotient(i);
      CHECK(q.table.order() * i.size() == t.order());
      std::vector<bool> hit(static_cast<std::size_t>(q.table.order()), false);
      for (int a = 0; a < t.order(); ++a) {
        hit[q.projection[a]] = true;
        for (int b = 0; b < t.order(); ++b) {
          REQUIRE(q.projection[t.mul(a, b)] == q.table.mul(q.projection[a], q.projection[b]));
          REQUIRE(q.projection[t.add(a, b)] == q.table.add(q.projection[a], q.projection[b]));
        }
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));
    }
  }
}

TEST_CASE("prime and radical") {
  const RingTable z6 = build_ring(zmod(6));
  CHECK(is_prime(gen(z6, {"3"})));
  CHECK(is_radical(gen(z6, {"2"})));
  const RingTable z16 = build_ring(zmod(16));
  CHECK_FALSE(is_prime(gen(z16, {"4"})));
  CHECK(is_prime(zero_ideal(named("F_8"))));
  CHECK_FALSE(is_radical(zero_ideal(build_ring(zmod(4)))));
  CHECK(is_radical(synthesized_instance(z6, 2).ideal));
}

TEST_CASE("prime ideals are radical; minimal primes intersect to the ideal") {
  for (const auto& t : catalog_rings()) {
    for (const auto& i : enumerate_ideals(t)) {
      if (i.is_whole()) continue;
      if (is_prime(i)) CHECK(is_radical(i));
      if (!is_radical(i)) {
        CHECK_THROWS_AS(minimal_primes_over(i), NotRadical);
        continue;
      }
      const auto primes = minimal_primes_over(i);
      REQUIRE_FALSE(primes.empty());
      ElementSet meet = primes.front().members();
      for (const auto& p : primes) {
        CHECK(is_prime(p));
        CHECK((i.members() & ~p.members()).none());
        meet &= p.members();
      }
      CHECK(meet == i.members());
    }
  }
}

TEST_CASE("minimal primes and locality") {
  CHECK(minimal_primes_over(zero_ideal(build_ring(zmod(6)))).size() == 2);
  CHECK(minimal_primes_over(zero_ideal(named("Z_2xZ_2xZ_2"))).size() == 3);
  const auto field = minimal_primes_over(zero_ideal(named("F_4")));
  REQUIRE(field.size() == 1);
  CHECK(field.front().is_zero());

  const auto z8 = is_local(build_ring(zmod(8)));
  CHECK(z8.local);
  CHECK(describe_ideal(z8.maximal_ideals.front()) == "(2)");
  const auto z6 = is_local(build_ring(zmod(6)));
  CHECK_FALSE(z6.local);
  CHECK(z6.maximal_ideals.size() == 2);
  const auto f4 = is_local(named("F_4"));
  CHECK(f4.local);
  CHECK(f4.maximal_ideals.front().is_zero());
}

TEST_CASE("local catalog rings have order a power of the residue field size") {
  for (const auto& t : catalog_rings()) {
    const auto info = is_local(t);
    if (!info.local) continue;
    const int q = t.order() / info.maximal_ideals.front().size();
    int n = t.order();
    while (n % q == 0) n /= q;
    CHECK_MESSAGE(n == 1, t.name());
  }
}
