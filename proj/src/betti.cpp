#include "edgereg/betti.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <unordered_set>

namespace edgereg {

namespace {

using Face = SimplicialComplex::Face;

struct KoszulFacets {
  std::vector<int> ground;   // 1-based variables in supp(b)
  std::vector<Face> facets;  // maximal faces only
};

KoszulFacets koszul_facets(const MonomialIdeal& a, const Monomial& b) {
  KoszulFacets out;
  std::vector<std::size_t> position(b.universe(), 0);
  for (std::size_t v = 0; v < b.universe(); ++v) {
    if (b[v]) {
      position[v] = out.ground.size();
      out.ground.push_back(static_cast<int>(v + 1));
    }
  }
  const std::uint32_t support = b.support_mask();
  std::vector<Face> candidates;
  for (const Monomial& g : a.generators()) {
    if ((g.support_mask() & ~support) != 0 || !g.divides(b)) continue;
    Face facet = 0;
    for (std::size_t v = 0; v < b.universe(); ++v) {
      if (b[v] && g[v] < b[v]) facet |= Face{1} << position[v];
    }
    candidates.push_back(facet);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (Face f : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](Face other) {
      return other != f && (f & ~other) == 0;
    });
    if (!dominated) out.facets.push_back(f);
  }
  return out;
}

void check_bounds(const MonomialIdeal& a, const BettiOptions& options) {
  if (a.size() > options.max_generators) {
    throw BoundExceeded("Betti table: " + std::to_string(a.size()) +
                        " generators exceeds the bound of " +
                        std::to_string(options.max_generators));
  }
  std::uint32_t support = 0;
  for (const Monomial& g : a.generators()) support |= g.support_mask();
  const auto used = static_cast<std::size_t>(std::popcount(support));
  if (used > options.max_variables || used > SimplicialComplex::kMaxGround) {
    throw BoundExceeded("Betti table: " + std::to_string(used) +
                        " variables exceeds the bound of " +
                        std::to_string(options.max_variables));
  }
}

}  // namespace

BettiTable::BettiTable(Field field, std::vector<BettiEntry> entries, std::size_t examined)
    : field_(field), entries_(std::move(entries)), examined_(examined) {
  std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& x, const BettiEntry& y) {
    if (!(x.b == y.b)) return canonical_less(x.b, y.b);
    return x.i < y.i;
  });
}

std::map<std::pair<int, int>, long long> BettiTable::graded() const {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& e : entries_) out[{e.i, static_cast<int>(e.b.degree())}] += e.rank;
  return out;
}

long long BettiTable::total(int i) const {
  long long sum = 0;
  for (const auto& e : entries_) {
    if (e.i == i) sum += e.rank;
  }
  return sum;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw std::invalid_argument("regularity of the zero ideal");
  int reg = INT32_MIN;
  for (const auto& e : entries_) reg = std::max(reg, static_cast<int>(e.b.degree()) - e.i);
  return reg;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& a, const Monomial& b) {
  if (b.universe() != a.universe()) {
    throw std::invalid_argument("multidegree universe does not match the ideal");
  }
  KoszulFacets kf = koszul_facets(a, b);
  if (kf.facets.empty()) return SimplicialComplex::void_complex(std::move(kf.ground));
  return SimplicialComplex::from_facets(std::move(kf.ground), kf.facets);
}

std::vector<Monomial> lcm_closure(const MonomialIdeal& a, std::size_t limit) {
  const auto& gens = a.generators();
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier) {
      for (const Monomial& g : gens) {
        Monomial l = lcm(m, g);
        if (seen.insert(l).second) {
          if (seen.size() > limit) {
            throw BoundExceeded("lcm-closure exceeds " + std::to_string(limit) +
                                " multidegrees");
          }
          next.push_back(l);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

BettiTable betti_table(const MonomialIdeal& a, const BettiOptions& options) {
  if (a.is_zero()) return BettiTable(options.field, {}, 0);
  check_bounds(a, options);
  const std::vector<Monomial> degrees = lcm_closure(a, options.max_multidegrees);
  std::vector<BettiEntry> entries;
  for (const Monomial& b : degrees) {
    KoszulFacets kf = koszul_facets(a, b);
    // A common vertex of all facets makes the complex a cone, hence acyclic.
    Face common = ~Face{0};
    for (Face f : kf.facets) common &= f;
    if (kf.facets.empty() || common != 0) continue;
    const auto complex = SimplicialComplex::from_facets(std::move(kf.ground), kf.facets);
    const auto ranks = homology_ranks(complex, options.field);
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      if (ranks[k] != 0) entries.push_back({static_cast<int>(k), b, ranks[k]});
    }
  }
  return BettiTable(options.field, std::move(entries), degrees.size());
}

int regularity(const MonomialIdeal& a, const BettiOptions& options) {
  return betti_table(a, options).regularity();
}

int quotient_regularity(const MonomialIdeal& a, const BettiOptions& options) {
  return regularity(a, options) - 1;
}

unsigned long long standard_monomial_count(const MonomialIdeal& a, unsigned d) {
  const std::size_t n = a.universe();
  unsigned long long count = 0;
  Monomial m(n);
  auto walk = [&](auto&& self, std::size_t index, unsigned remaining) -> void {
    if (n == 0) {
      if (remaining == 0 && !a.contains(m)) ++count;
      return;
    }
    if (index + 1 == n) {
      m.set(index, remaining);
      if (!a.contains(m)) ++count;
      m.set(index, 0);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      m.set(index, e);
      self(self, index + 1, remaining - e);
    }
    m.set(index, 0);
  };
  walk(walk, 0, d);
  return count;
}

SocleCheck socle_regularity(EdgeIdealPowers& powers, unsigned s) {
  if (s == 0) throw std::invalid_argument("socle check needs s >= 1");
  SocleCheck check;
  check.s = s;
  const MonomialIdeal artinian =
      ideal_sum(powers.symbolic(s), ideal_power(maximal_ideal(powers.universe()), 2 * s));
  for (unsigned d = 0; d <= 2 * s; ++d) {
    const auto dim = standard_monomial_count(artinian, d);
    if (dim > 0) check.top_degree = static_cast<int>(d);
    if (d == 2 * s - 1) check.dim_below = dim;
    if (d == 2 * s) check.dim_at = dim;
  }
  check.ok = check.dim_below > 0 && check.dim_at == 0;
  check.regularity = check.top_degree;
  return check;
}

VerificationReport lower_bound_check(EdgeIdealPowers& powers, unsigned s,
                                     const BettiOptions& options, const SearchLimits& limits) {
  auto report = make_report("regularity", "symbolic-lower-bound", static_cast<int>(s));
  const int nu = induced_matching_number(powers.graph(), limits);
  const int reg = quotient_regularity(powers.symbolic(s), options);
  const int bound = 2 * static_cast<int>(s) + nu - 2;
  report.detail("reg(S/I^(s))", std::to_string(reg))
      .detail("nu(G)", std::to_string(nu))
      .detail("2s+nu-2", std::to_string(bound));
  if (reg < bound) {
    report.fail("reg(S/I^(s)) = " + std::to_string(reg) + " < " + std::to_string(bound));
  }
  return report;
}

VerificationReport colon_upper_bound_check(const std::vector<MonomialIdeal>& colons, int bound,
                                           const BettiOptions& options) {
  auto report = make_report("regularity", "colon-upper-bound");
  report.detail("bound", std::to_string(bound)).detail("colons", std::to_string(colons.size()));
  int worst = INT32_MIN;
  for (const MonomialIdeal& colon : colons) {
    const int reg = quotient_regularity(colon, options);
    worst = std::max(worst, reg);
    if (reg > bound && !report.failed()) {
      report.fail("reg(S/(I+L'')) = " + std::to_string(reg) + " exceeds nu(H) = " +
                  std::to_string(bound))
          .witness("ideal", colon.to_string());
    }
  }
  if (!colons.empty()) report.detail("max reg", std::to_string(worst));
  return report;
}

VerificationReport forest_regularity_check(const Graph& forest, const BettiOptions& options,
                                           const SearchLimits& limits) {
  auto report = make_report("regularity", "forest-reg-equals-induced-matching");
  const int nu = induced_matching_number(forest, limits);
  report.detail("nu(H)", std::to_string(nu));
  if (forest.edge_count() == 0) {
    report.detail("reg(S/I(H))", "0 (zero ideal)");
    if (nu != 0) report.fail("edgeless forest with nonzero induced matching number");
    return report;
  }
  const int reg = quotient_regularity(edge_ideal(forest), options);
  report.detail("reg(S/I(H))", std::to_string(reg));
  if (reg != nu) {
    report.fail("reg(S/I(H)) = " + std::to_string(reg) + " but nu(H) = " + std::to_string(nu))
        .witness("graph", forest.to_string());
  }
  return report;
}

VerificationReport regularity_equality_check(EdgeIdealPowers& powers, unsigned s,
                                             const BettiOptions& options) {
  auto report = make_report("regularity", "symbolic-vs-ordinary", static_cast<int>(s));
  const int symbolic = regularity(powers.symbolic(s), options);
  const int ordinary = regularity(powers.ordinary(s), options);
  report.detail("reg(I^(s))", std::to_string(symbolic))
      .detail("reg(I^s)", std::to_string(ordinary))
      .detail("field", options.field.name());
  if (symbolic != ordinary) {
    report.fail("reg(I^(s)) = " + std::to_string(symbolic) + " but reg(I^s) = " +
                std::to_string(ordinary));
  }
  return report;
}

}  // namespace edgereg
