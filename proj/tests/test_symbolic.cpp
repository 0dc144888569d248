#include <random>

#include <catch_amalgamated.hpp>

#include "edgereg/symbolic.hpp"
#include "instances.hpp"

using namespace edgereg;

namespace {

CycleDecomposition decomposition_of(const instances::Named& inst) {
  return make_cycle_decomposition(inst.graph, inst.cycles);
}

}  // namespace

TEST_CASE("symbolic powers of C5 in low degree") {
  EdgeIdealPowers p(cycle_graph(5));
  CHECK(p.symbolic(1) == p.edge_ideal());
  CHECK(p.symbolic(2) == p.ordinary(2));
  const Monomial mu = Monomial::from_variables(5, {1, 2, 3, 4, 5});
  const auto expected = ideal_sum(p.ordinary(3), MonomialIdeal::generated_by(5, {mu}));
  CHECK(p.symbolic(3) == expected);
  CHECK_FALSE(p.ordinary(3).contains(mu));
}

TEST_CASE("symbolic power preconditions") {
  CHECK_THROWS_AS(symbolic_power(Graph(3, {}), 1), std::invalid_argument);
  CHECK_THROWS_AS(symbolic_power(cycle_graph(5), 0), std::invalid_argument);
}

TEST_CASE("cover criterion matches the intersection on random monomials") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> draw(0, 3);
  for (const auto& inst : {instances::c5(), instances::bowtie(), instances::c5_pendants()}) {
    EdgeIdealPowers p(inst.graph);
    for (unsigned s = 1; s <= 3; ++s) {
      const auto& sym = p.symbolic(s);
      for (int k = 0; k < 200; ++k) {
        Monomial m(p.universe());
        for (std::size_t i = 0; i < p.universe(); ++i) m.set(i, draw(rng));
        CHECK(sym.contains(m) == symbolic_membership(p.covers(), m, s));
      }
      CHECK(cross_check_symbolic_power(p.covers(), sym, s).passed());
    }
  }
}

TEST_CASE("cross check catches a wrong candidate") {
  EdgeIdealPowers p(cycle_graph(5));
  CHECK(cross_check_symbolic_power(p.covers(), p.symbolic(3), 3).passed());
  CHECK(cross_check_symbolic_power(p.covers(), p.ordinary(3), 3).failed());
  const auto bad = ideal_sum(p.ordinary(2), MonomialIdeal::generated_by(5, {Monomial{1, 1, 1, 0, 0}}));
  CHECK(cross_check_symbolic_power(p.covers(), bad, 2).failed());
}

TEST_CASE("bipartite graphs have equal symbolic and ordinary powers") {
  EdgeIdealPowers p(cycle_graph(6));
  for (unsigned s = 1; s <= 3; ++s) CHECK(p.symbolic(s) == p.ordinary(s));
}

TEST_CASE("decomposition sum on the named instances") {
  for (const auto& inst : {instances::c5(), instances::c7(), instances::bowtie(),
                           instances::c5_pendant_path()}) {
    EdgeIdealPowers p(inst.graph);
    const auto cd = decomposition_of(inst);
    for (unsigned s = 1; s <= 3; ++s) {
      INFO(inst.name << " s=" << s);
      CHECK(verify_decomposition(p, cd, s).passed());
    }
  }
}

TEST_CASE("bowtie decomposition uses all three triangles") {
  const auto inst = instances::bowtie();
  EdgeIdealPowers p(inst.graph);
  const auto cd = decomposition_of(inst);
  CHECK(cd.n == 1);
  CHECK(cd.J.size() == 3);
  const auto d = decompose_symbolic(p, cd, 2);
  CHECK(d.k == 1);
  CHECK(d.sum == ideal_sum(p.ordinary(2), cd.J));
}

TEST_CASE("cycle designation validation") {
  const auto inst = instances::bowtie();
  CHECK_THROWS(make_cycle_decomposition(inst.graph, {}));
  CHECK_THROWS(make_cycle_decomposition(cycle_graph(6), {CycleCertificate{{1, 2, 3, 4, 5, 6}}}));
  CHECK_THROWS(make_cycle_decomposition(inst.graph, {CycleCertificate{{1, 2, 3}}}));
  CHECK_THROWS(make_cycle_decomposition(
      inst.graph, {CycleCertificate{{1, 2, 4}}, CycleCertificate{{1, 2, 3, 4, 5}}}));
}

TEST_CASE("decomposition pieces") {
  const auto inst = instances::c5_two_p3();
  const auto cd = decomposition_of(inst);
  CHECK(cd.y_vertices == VertexSet{6, 8});
  CHECK(cd.z_vertices == VertexSet{7, 9});
  CHECK(cd.K.size() == 2);
  CHECK(cd.L.size() == 7);
  CHECK(cd.mu_k.size() == 2);
  CHECK_FALSE(cd.all_dominant);
}

TEST_CASE("intersection with m^2s") {
  for (const auto& inst : {instances::c5(), instances::bowtie(), instances::c5_pendants(),
                           instances::c5_pendant_path()}) {
    EdgeIdealPowers p(inst.graph);
    const auto cd = decomposition_of(inst);
    for (unsigned s = 1; s <= 3; ++s) {
      INFO(inst.name << " s=" << s);
      const auto report = m2s_identities(p, cd, s);
      CHECK(report.passed());
    }
  }
}

TEST_CASE("dominant cycles give I^(s) cap m^2s = I^s") {
  for (const auto& inst : {instances::c5(), instances::bowtie(), instances::c5_pendants()}) {
    EdgeIdealPowers p(inst.graph);
    const auto cd = decomposition_of(inst);
    REQUIRE(cd.all_dominant);
    const auto sums = m2s_sums(p, cd, 3);
    CHECK(sums.intersection == p.ordinary(3));
  }
}

TEST_CASE("alpha closed form and asymptotic invariants") {
  const auto c5 = instances::c5();
  EdgeIdealPowers p(c5.graph);
  const auto cd = decomposition_of(c5);
  const auto inv = asymptotic_invariants(cd);
  CHECK(inv.waldschmidt == Fraction(5, 3));
  CHECK(inv.resurgence == Fraction(6, 5));
  CHECK(inv.alpha(3) == 5);
  for (unsigned s = 1; s <= 5; ++s) CHECK(verify_alpha(p, cd, s).passed());
  CHECK(Fraction(4, 6).to_string() == "2/3");
  CHECK(Fraction(3, -1).to_string() == "-3");
  CHECK(Fraction(1, 2) < Fraction(2, 3));
}

TEST_CASE("containment agrees with the alpha criterion on C5") {
  const auto c5 = instances::c5();
  EdgeIdealPowers p(c5.graph);
  const auto cd = decomposition_of(c5);
  for (unsigned s = 1; s <= 5; ++s) {
    for (unsigned t = 1; t <= 5; ++t) {
      const auto c = containment_check(p, cd, s, t);
      INFO("s=" << s << " t=" << t);
      CHECK(c.agree);
      if (!c.contained) CHECK(Fraction(s, t) <= Fraction(6, 5));
    }
  }
  CHECK(containment_check(p, cd, 3, 2).contained);
  const auto c = containment_check(p, cd, 3, 3);
  CHECK_FALSE(c.contained);
  REQUIRE(c.witness);
  CHECK(c.witness->degree() == 5);
}
