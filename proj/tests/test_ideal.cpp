#include <random>

#include <catch_amalgamated.hpp>

#include "edgereg/ideal.hpp"
#include "edgereg/symbolic.hpp"

using namespace edgereg;

namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t universe, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> draw(0, max_exp);
  Monomial m(universe);
  for (std::size_t i = 0; i < universe; ++i) m.set(i, draw(rng));
  return m;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t universe, int gens) {
  std::vector<Monomial> g;
  for (int i = 0; i < gens; ++i) g.push_back(random_monomial(rng, universe, 3));
  return MonomialIdeal::generated_by(universe, g);
}

// Membership by definition: some generator divides m.
bool divisible_by_some(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens) {
    if (g.divides(m)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial a{2, 0, 1};
  const Monomial b{1, 1, 0};
  CHECK((a * b) == Monomial{3, 1, 1});
  CHECK(lcm(a, b) == Monomial{2, 1, 1});
  CHECK(gcd(a, b) == Monomial{1, 0, 0});
  CHECK(a.degree() == 3);
  CHECK(a.to_string() == "x1^2*x3");
  CHECK(Monomial(3).to_string() == "1");
  CHECK(Monomial::parse("x1^2*x3", 3) == a);
  CHECK_THROWS(a / b);
  CHECK(((a * b) / b) == a);
  CHECK(lex_greater(a, b));
  CHECK(pow(b, 3) == Monomial{3, 3, 0});
}

TEST_CASE("monomial parse errors") {
  CHECK_THROWS(Monomial::parse("x4", 3));
  CHECK_THROWS(Monomial::parse("y1", 3));
  CHECK(Monomial::parse("1", 2).is_unit());
}

TEST_CASE("generators are minimalized and canonically ordered") {
  const auto i = MonomialIdeal::generated_by(
      3, {Monomial{1, 1, 0}, Monomial{2, 1, 0}, Monomial{0, 0, 1}, Monomial{1, 1, 0}});
  REQUIRE(i.size() == 2);
  CHECK(i.generators()[0] == Monomial{0, 0, 1});
  CHECK(i.to_string() == "(x3, x1*x2)");
  CHECK(MonomialIdeal::zero(2).to_string() == "(0)");
}

TEST_CASE("square of the C5 edge ideal") {
  const auto i = edge_ideal(cycle_graph(5));
  const auto i2 = ideal_power(i, 2);
  CHECK(i2.size() == 15);
  CHECK(alpha_degree(i2) == 4);
}

TEST_CASE("C5 colon by an edge") {
  const auto i = edge_ideal(cycle_graph(5));
  const auto colon = ideal_colon(ideal_power(i, 2), Monomial::from_variables(5, {1, 2}));
  const auto expected = ideal_sum(i, MonomialIdeal::generated_by(5, {Monomial::from_variables(5, {3, 5})}));
  CHECK(colon == expected);
}

TEST_CASE("colon edge cases") {
  const auto i = edge_ideal(cycle_graph(5));
  CHECK(ideal_colon(i, Monomial(5)) == i);
  CHECK(ideal_colon(i, Monomial::from_variables(5, {1, 2})).is_unit());
  CHECK_THROWS(ideal_colon(i, MonomialIdeal::zero(5)));
}

TEST_CASE("variable power ideals") {
  CHECK(variable_power_ideal(3, VertexSet{1, 2}, 2).size() == 3);
  CHECK(variable_power_ideal(3, VertexSet{1, 2}, 0).is_unit());
  CHECK(variable_power_ideal(3, VertexSet{}, 2).is_zero());
}

TEST_CASE("ideal operations satisfy membership definitions on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const auto a = random_ideal(rng, n, 4);
    const auto b = random_ideal(rng, n, 3);
    const auto sum = ideal_sum(a, b);
    const auto product = ideal_product(a, b);
    const auto meet = ideal_intersection(a, b);
    const auto d = random_monomial(rng, n, 2);
    const auto colon = ideal_colon(a, d);
    for (int k = 0; k < 40; ++k) {
      const auto m = random_monomial(rng, n, 4);
      const bool in_a = divisible_by_some(a.generators(), m);
      const bool in_b = divisible_by_some(b.generators(), m);
      CHECK(a.contains(m) == in_a);
      CHECK(sum.contains(m) == (in_a || in_b));
      CHECK(meet.contains(m) == (in_a && in_b));
      CHECK(colon.contains(m) == a.contains(m * d));
      bool in_product = false;
      for (const auto& x : a.generators()) {
        for (const auto& y : b.generators()) in_product = in_product || (x * y).divides(m);
      }
      CHECK(product.contains(m) == in_product);
    }
    CHECK(ideal_contains(sum, a));
    CHECK(ideal_contains(a, meet));
    CHECK(ideal_contains(meet, product));
    CHECK(ideal_equal(ideal_colon(a, b), ideal_intersection(
                                             [&] {
                                               std::vector<MonomialIdeal> parts;
                                               for (const auto& g : b.generators()) parts.push_back(ideal_colon(a, g));
                                               return parts;
                                             }())));
  }
}

TEST_CASE("symmetric difference witness") {
  const auto a = MonomialIdeal::generated_by(2, {Monomial{1, 0}});
  const auto b = MonomialIdeal::generated_by(2, {Monomial{2, 0}});
  const auto w = symmetric_difference_witness(a, b);
  REQUIRE(w);
  CHECK(*w == Monomial{1, 0});
  CHECK_FALSE(symmetric_difference_witness(a, a));
}

TEST_CASE("ideal parsing round trip") {
  const auto i = edge_ideal(cycle_graph(4));
  CHECK(parse_ideal(i.to_string(), 4) == i);
  CHECK(parse_ideal("(0)", 3).is_zero());
  CHECK_THROWS(parse_ideal("(x1, x9)", 3));
}
