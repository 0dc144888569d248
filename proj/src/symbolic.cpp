#include "edgereg/symbolic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edgereg {

MonomialIdeal edge_ideal(const Graph& g) {
  const auto universe = static_cast<std::size_t>(g.vertex_count());
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) gens.push_back(Monomial::from_variables(universe, {e.u, e.v}));
  return MonomialIdeal::generated_by(universe, std::move(gens));
}

MonomialIdeal maximal_ideal(std::size_t universe) {
  std::vector<Vertex> all(universe);
  std::iota(all.begin(), all.end(), 1);
  return variable_ideal(universe, VertexSet(all));
}

Monomial vertex_product(std::size_t universe, const VertexSet& s) {
  Monomial m(universe);
  for (Vertex v : s) m.set(v - 1, m.exponent_of(v) + 1u);
  return m;
}

MonomialIdeal symbolic_power(const Graph& g, const CoverEnumeration& covers, unsigned s) {
  if (covers.edgeless) throw std::invalid_argument("symbolic power of an edgeless graph");
  if (s == 0) throw std::invalid_argument("symbolic power needs s >= 1");
  const auto universe = static_cast<std::size_t>(g.vertex_count());
  std::vector<MonomialIdeal> primes;
  primes.reserve(covers.covers.size());
  for (const VertexSet& w : covers.covers) primes.push_back(variable_power_ideal(universe, w, s));
  return ideal_intersection(primes);
}

MonomialIdeal symbolic_power(const Graph& g, unsigned s, const SearchLimits& limits) {
  return symbolic_power(g, minimal_vertex_covers(g, limits), s);
}

bool symbolic_membership(const CoverEnumeration& covers, const Monomial& m, unsigned s) {
  for (const VertexSet& w : covers.covers) {
    unsigned weight = 0;
    for (Vertex v : w) weight += m.exponent_of(v);
    if (weight < s) return false;
  }
  return true;
}

bool symbolic_membership(const Graph& g, const Monomial& m, unsigned s,
                         const SearchLimits& limits) {
  return symbolic_membership(minimal_vertex_covers(g, limits), m, s);
}

EdgeIdealPowers::EdgeIdealPowers(Graph g, const SearchLimits& limits)
    : graph_(std::move(g)),
      ideal_(edgereg::edge_ideal(graph_)),
      covers_(minimal_vertex_covers(graph_, limits)) {}

const MonomialIdeal& EdgeIdealPowers::ordinary(unsigned s) {
  auto it = ordinary_.find(s);
  if (it != ordinary_.end()) return it->second;
  MonomialIdeal value = s == 0 ? MonomialIdeal::unit(universe())
                               : ideal_product(ordinary(s - 1), ideal_);
  return ordinary_.emplace(s, std::move(value)).first->second;
}

const MonomialIdeal& EdgeIdealPowers::symbolic(unsigned s) {
  auto it = symbolic_.find(s);
  if (it != symbolic_.end()) return it->second;
  return symbolic_.emplace(s, symbolic_power(graph_, covers_, s)).first->second;
}

VerificationReport cross_check_symbolic_power(const CoverEnumeration& covers,
                                              const MonomialIdeal& candidate, unsigned s) {
  auto report = make_report("decomposition", "symbolic-membership-cross-check",
                            static_cast<int>(s));
  for (const Monomial& g : candidate.generators()) {
    if (!symbolic_membership(covers, g, s)) {
      report.fail("generator fails the cover criterion").witness("monomial", g.to_string());
      return report;
    }
    for (std::size_t i = 0; i < g.universe(); ++i) {
      if (g[i] == 0) continue;
      Monomial smaller = g;
      smaller.set(i, g[i] - 1u);
      if (symbolic_membership(covers, smaller, s)) {
        report.fail("generator is not minimal for the cover criterion")
            .witness("monomial", g.to_string());
        return report;
      }
    }
  }
  report.detail("generators", std::to_string(candidate.size()));
  return report;
}

std::string CycleDecomposition::describe() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) out << ' ';
    out << cycles[i].to_string();
  }
  return out.str();
}

CycleDecomposition make_cycle_decomposition(const Graph& g,
                                            std::vector<CycleCertificate> cycles) {
  if (cycles.empty()) throw std::invalid_argument("no designated cycle");
  const auto universe = static_cast<std::size_t>(g.vertex_count());
  CycleDecomposition cd;
  const int length = cycles.front().length();
  if (length % 2 == 0) throw std::invalid_argument("designated cycles must be odd");
  VertexSet cycle_vertices;
  std::vector<Monomial> mu_k_gens;
  cd.all_dominant = true;
  const VertexSet all = g.vertices();
  for (const CycleCertificate& c : cycles) {
    validate_cycle(g, c);
    if (c.length() != length) {
      throw std::invalid_argument("designated cycles must share one length; got " +
                                  std::to_string(length) + " and " +
                                  std::to_string(c.length()));
    }
    const VertexSet vs = c.vertex_set();
    const Monomial mu = vertex_product(universe, vs);
    cd.mu.push_back(mu);
    cycle_vertices = set_union(cycle_vertices, vs);
    const VertexSet nbhd = neighborhoods(g, vs);
    if (nbhd != all) cd.all_dominant = false;
    for (Vertex z : set_difference(all, nbhd)) {
      mu_k_gens.push_back(mu * Monomial::variable(universe, z));
    }
  }
  cd.cycles = std::move(cycles);
  cd.n = static_cast<unsigned>((length - 1) / 2);
  cd.J = MonomialIdeal::generated_by(universe, cd.mu);
  cd.neighborhood = neighborhoods(g, cycle_vertices);
  cd.y_vertices = set_difference(cd.neighborhood, cycle_vertices);
  cd.z_vertices = set_difference(all, cd.neighborhood);
  cd.K = variable_ideal(universe, cd.z_vertices);
  cd.L = variable_ideal(universe, set_union(cycle_vertices, cd.y_vertices));
  cd.mu_k = MonomialIdeal::generated_by(universe, std::move(mu_k_gens));
  return cd;
}

SymbolicDecomposition decompose_symbolic(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                         unsigned s) {
  SymbolicDecomposition d;
  d.s = s;
  d.k = s / (cd.n + 1);
  d.sum = MonomialIdeal::zero(powers.universe());
  for (unsigned i = 0; i <= d.k; ++i) {
    MonomialIdeal term =
        ideal_product(ideal_power(cd.J, i), powers.ordinary(s - i * (cd.n + 1)));
    d.sum = ideal_sum(d.sum, term);
    d.terms.emplace_back(i, std::move(term));
  }
  return d;
}

SymbolicDecomposition decompose_symbolic(const Graph& g, const CycleDecomposition& cd,
                                         unsigned s) {
  EdgeIdealPowers powers(g);
  return decompose_symbolic(powers, cd, s);
}

VerificationReport verify_decomposition(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                        unsigned s) {
  auto report = make_report("decomposition", "symbolic-power-sum", static_cast<int>(s));
  const SymbolicDecomposition d = decompose_symbolic(powers, cd, s);
  const MonomialIdeal& oracle = powers.symbolic(s);
  report.detail("k", std::to_string(d.k)).detail("generators", std::to_string(oracle.size()));
  if (!ideal_equal(d.sum, oracle)) {
    report.fail("sum of J^i I^(s-i(n+1)) differs from the cover intersection")
        .witness("monomial", symmetric_difference_witness(d.sum, oracle)->to_string());
    return report;
  }
  const auto cross = cross_check_symbolic_power(powers.covers(), oracle, s);
  if (cross.failed()) {
    report.fail("cover-criterion cross-check: " + cross.reason);
    report.witnesses = cross.witnesses;
  }
  return report;
}

M2sSums m2s_sums(EdgeIdealPowers& powers, const CycleDecomposition& cd, unsigned s) {
  const std::size_t universe = powers.universe();
  const MonomialIdeal m = maximal_ideal(universe);
  const unsigned k = s / (cd.n + 1);
  M2sSums sums;
  sums.intersection = ideal_intersection(powers.symbolic(s), ideal_power(m, 2 * s));
  sums.j_m_sum = MonomialIdeal::zero(universe);
  sums.mu_k_sum = MonomialIdeal::zero(universe);
  for (unsigned i = 0; i <= k; ++i) {
    const MonomialIdeal& tail = powers.ordinary(s - i * (cd.n + 1));
    const MonomialIdeal jm = ideal_product(ideal_power(cd.J, i), ideal_power(m, i));
    sums.j_m_sum = ideal_sum(sums.j_m_sum, ideal_product(jm, tail));
    if (i == 0 || !cd.mu_k.is_zero()) {
      sums.mu_k_sum = ideal_sum(sums.mu_k_sum, ideal_product(ideal_power(cd.mu_k, i), tail));
    }
  }
  return sums;
}

VerificationReport m2s_identities(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                  unsigned s) {
  auto report = make_report("m2s", "symbolic-power-cap-m2s", static_cast<int>(s));
  const M2sSums sums = m2s_sums(powers, cd, s);
  auto compare = [&](const std::string& name, const MonomialIdeal& rhs) {
    const bool ok = ideal_equal(sums.intersection, rhs);
    report.detail(name, ok ? "equal" : "differs");
    if (!ok && !report.failed()) {
      report.fail(name + " differs from I^(s) ∩ m^(2s)")
          .witness("monomial", symmetric_difference_witness(sums.intersection, rhs)->to_string());
    }
  };
  compare("J^i m^i sum", sums.j_m_sum);
  compare("(mu K)^i sum", sums.mu_k_sum);
  if (cd.all_dominant) {
    compare("I^s (dominant cycles)", powers.ordinary(s));
  } else {
    report.detail("I^s (dominant cycles)", "not applicable: a cycle is not dominant");
  }
  return report;
}

Fraction::Fraction(long long p, long long q) : num(p), den(q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  const long long g = std::gcd(p, q);
  num = p / g;
  den = q / g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
}

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

AsymptoticInvariants asymptotic_invariants(const CycleDecomposition& cd) {
  AsymptoticInvariants inv;
  inv.n = cd.n;
  const long long n = cd.n;
  inv.waldschmidt = Fraction(2 * n + 1, n + 1);
  inv.resurgence = Fraction(2 * n + 2, 2 * n + 1);
  return inv;
}

VerificationReport verify_alpha(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                unsigned s) {
  auto report = make_report("invariants", "alpha-closed-form", static_cast<int>(s));
  const unsigned computed = alpha_degree(powers.symbolic(s));
  const unsigned expected = asymptotic_invariants(cd).alpha(s);
  report.detail("alpha computed", std::to_string(computed))
      .detail("alpha formula", std::to_string(expected));
  if (computed != expected) {
    report.fail("alpha(I^(s)) = " + std::to_string(computed) + " but 2s - floor(s/(n+1)) = " +
                std::to_string(expected))
        .witness("monomial", powers.symbolic(s).generators().front().to_string());
  }
  return report;
}

ContainmentCheck containment_check(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                   unsigned s, unsigned t) {
  if (s == 0 || t == 0) throw std::invalid_argument("containment check needs s, t >= 1");
  ContainmentCheck c;
  c.s = s;
  c.t = t;
  c.witness = powers.ordinary(t).first_missing(powers.symbolic(s));
  c.contained = !c.witness.has_value();
  c.alpha_criterion = asymptotic_invariants(cd).alpha(s) < 2 * t;
  c.agree = c.contained == !c.alpha_criterion;
  return c;
}

}  // namespace edgereg
