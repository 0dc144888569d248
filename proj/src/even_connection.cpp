#include "edgereg/even_connection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace edgereg {

namespace {

Monomial edge_monomial(std::size_t universe, const Edge& e) {
  return Monomial::from_variables(universe, {e.u, e.v});
}

std::string edge_string(const Edge& e) {
  return "x" + std::to_string(e.u) + "x" + std::to_string(e.v);
}

std::uint32_t vertex_mask(const VertexSet& vs) {
  std::uint32_t mask = 0;
  for (Vertex v : vs) mask |= std::uint32_t{1} << (v - 1);
  return mask;
}

bool tail_greater(const Monomial& a, const Monomial& b, const std::vector<Vertex>& variables) {
  for (Vertex v : variables) {
    if (a.exponent_of(v) != b.exponent_of(v)) return a.exponent_of(v) > b.exponent_of(v);
  }
  return false;
}

/// Greedy-first search: exponents of higher-ranked edges are tried largest
/// first, so the first complete solution carries the lex-largest key.
bool search_expression(const Graph& g, const EdgeOrder& order, std::size_t position,
                       Monomial& remaining, unsigned left, std::uint32_t tail_mask,
                       std::vector<unsigned>& key) {
  if (left == 0) return (remaining.support_mask() & ~tail_mask) == 0;
  if (position == order.ranked.size()) return false;
  const Edge& e = order.ranked[position];
  const unsigned cap = std::min({static_cast<unsigned>(remaining.exponent_of(e.u)),
                                 static_cast<unsigned>(remaining.exponent_of(e.v)), left});
  for (unsigned a = cap + 1; a-- > 0;) {
    remaining.set(e.u - 1, remaining.exponent_of(e.u) - a);
    remaining.set(e.v - 1, remaining.exponent_of(e.v) - a);
    key[position] = a;
    const bool found = search_expression(g, order, position + 1, remaining, left - a, tail_mask, key);
    remaining.set(e.u - 1, remaining.exponent_of(e.u) + a);
    remaining.set(e.v - 1, remaining.exponent_of(e.v) + a);
    if (found) return true;
    key[position] = 0;
  }
  return false;
}

void factor_search(const Graph& g, std::size_t index, Monomial& remaining, unsigned left,
                   std::vector<Edge>& chosen, const Monomial& target,
                   std::vector<EdgeFactorization>& out) {
  if (left == 0) {
    if (remaining.is_unit()) out.push_back({chosen, target});
    return;
  }
  if (index == g.edge_count()) return;
  const Edge& e = g.edges()[index];
  const unsigned cap = std::min({static_cast<unsigned>(remaining.exponent_of(e.u)),
                                 static_cast<unsigned>(remaining.exponent_of(e.v)), left});
  for (unsigned a = 0; a <= cap; ++a) {
    remaining.set(e.u - 1, remaining.exponent_of(e.u) - a);
    remaining.set(e.v - 1, remaining.exponent_of(e.v) - a);
    for (unsigned k = 0; k < a; ++k) chosen.push_back(e);
    factor_search(g, index + 1, remaining, left - a, chosen, target, out);
    chosen.resize(chosen.size() - a);
    remaining.set(e.u - 1, remaining.exponent_of(e.u) + a);
    remaining.set(e.v - 1, remaining.exponent_of(e.v) + a);
  }
}

bool power_search(const Graph& g, std::size_t index, Monomial& remaining, unsigned left) {
  if (left == 0) return true;
  if (index == g.edge_count()) return false;
  const Edge& e = g.edges()[index];
  const unsigned cap = std::min({static_cast<unsigned>(remaining.exponent_of(e.u)),
                                 static_cast<unsigned>(remaining.exponent_of(e.v)), left});
  for (unsigned a = cap + 1; a-- > 0;) {
    remaining.set(e.u - 1, remaining.exponent_of(e.u) - a);
    remaining.set(e.v - 1, remaining.exponent_of(e.v) - a);
    const bool found = power_search(g, index + 1, remaining, left - a);
    remaining.set(e.u - 1, remaining.exponent_of(e.u) + a);
    remaining.set(e.v - 1, remaining.exponent_of(e.v) + a);
    if (found) return true;
  }
  return false;
}

std::string variables_string(const VertexSet& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : ",") + ("x" + std::to_string(v));
  return "{" + out + "}";
}

/// Checks that q = I + (variables) with every variable of `required` among
/// them; returns a description of the mismatch.
std::optional<std::string> check_variable_form(const MonomialIdeal& q, const MonomialIdeal& i,
                                               const VertexSet& required) {
  std::vector<Vertex> vars;
  for (const Monomial& m : q.generators()) {
    if (m.degree() == 1) {
      for (std::size_t v = 0; v < m.universe(); ++v) {
        if (m[v]) vars.push_back(static_cast<Vertex>(v + 1));
      }
    }
  }
  const VertexSet var_set(vars);
  const MonomialIdeal expected = ideal_sum(i, variable_ideal(q.universe(), var_set));
  if (!ideal_equal(q, expected)) {
    return "colon " + q.to_string() + " is not I plus variables";
  }
  for (Vertex v : required) {
    if (!var_set.contains(v)) {
      return "colon misses x" + std::to_string(v) + " of L: " + q.to_string();
    }
  }
  return std::nullopt;
}

struct LayerOrdering {
  std::vector<Monomial> generators;  // greatest first
  bool ok = true;
  std::string problem;
};

/// Orders G(mu^i K^i I^(s')) by the maximal expression of the quotient by mu^i,
/// with tails restricted to z-variables.
LayerOrdering order_layer(const Graph& g, const EdgeOrder& order, const MonomialIdeal& layer,
                          const Monomial& mu_power, unsigned s_prime, std::uint32_t z_mask) {
  LayerOrdering out;
  std::vector<std::pair<Monomial, Expression>> items;
  for (const Monomial& w : layer.generators()) {
    if (!mu_power.divides(w)) {
      out.ok = false;
      out.problem = "layer generator " + w.to_string() + " not divisible by mu^i";
      return out;
    }
    auto e = maximal_expression(g, order, w / mu_power, s_prime, z_mask);
    if (!e) {
      out.ok = false;
      out.problem = "layer generator " + w.to_string() + " has no expression mu^i K^i I^s'";
      return out;
    }
    items.emplace_back(w, std::move(*e));
  }
  std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    return expression_greater(a.second, b.second, order);
  });
  for (auto& item : items) out.generators.push_back(item.first);
  return out;
}

}  // namespace

EdgeOrder EdgeOrder::lex(const Graph& g) {
  EdgeOrder order;
  order.name = "lex";
  order.ranked = g.edges();
  for (Vertex v = 1; v <= g.vertex_count(); ++v) order.variables.push_back(v);
  return order;
}

EdgeOrder EdgeOrder::from_list(const Graph& g, std::vector<Edge> ranked, std::string name) {
  std::vector<Edge> sorted = ranked;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges()) {
    throw std::invalid_argument("edge order must list every edge of the graph exactly once");
  }
  EdgeOrder order;
  order.name = std::move(name);
  order.ranked = std::move(ranked);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) order.variables.push_back(v);
  return order;
}

std::string EdgeOrder::to_string() const {
  std::string out = name + ":";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    out += (i ? " > " : " ") + edge_string(ranked[i]);
  }
  return out;
}

LeafPeeling leaf_peeling(const Graph& g, const CycleDecomposition& cd) {
  LeafPeeling lp;
  if (cd.cycles.size() != 1) {
    lp.reason = "leaf peeling needs exactly one designated cycle";
    return lp;
  }
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<bool> removed(g.edge_count(), false);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) degree[v] = g.degree(v);
  std::set<Vertex> pending(cd.z_vertices.begin(), cd.z_vertices.end());
  while (!pending.empty()) {
    auto it = std::find_if(pending.begin(), pending.end(), [&](Vertex z) { return degree[z] == 1; });
    if (it == pending.end()) {
      const bool all_isolated =
          std::all_of(pending.begin(), pending.end(), [&](Vertex z) { return degree[z] == 0; });
      if (!all_isolated) {
        lp.reason = "no pendant vertex left among " +
                    VertexSet(std::vector<Vertex>(pending.begin(), pending.end())).to_string() +
                    "; a z-vertex lies on a cycle";
        return lp;
      }
      lp.z_order.insert(lp.z_order.end(), pending.begin(), pending.end());
      break;
    }
    const Vertex z = *it;
    for (Vertex w : g.neighbors(z)) {
      const auto idx = static_cast<std::size_t>(g.edge_index(Edge(z, w)));
      if (removed[idx]) continue;
      removed[idx] = true;
      --degree[z];
      --degree[w];
      lp.leaf_edges.emplace_back(z, w);
      break;
    }
    lp.z_order.push_back(z);
    pending.erase(it);
  }
  EdgeOrder order;
  order.name = "leaf-peeling";
  order.variables = lp.z_order;
  for (Vertex y : cd.y_vertices) order.variables.push_back(y);
  for (Vertex x : cd.cycles.front().vertices) order.variables.push_back(x);
  std::vector<int> var_rank(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < order.variables.size(); ++i) {
    var_rank[order.variables[i]] = static_cast<int>(i);
  }
  order.ranked = lp.leaf_edges;
  std::vector<std::pair<std::pair<int, int>, Edge>> rest;
  for (const Edge& e : g.edges()) {
    if (std::find(lp.leaf_edges.begin(), lp.leaf_edges.end(), e) != lp.leaf_edges.end()) continue;
    const int a = var_rank[e.u], b = var_rank[e.v];
    rest.push_back({{std::min(a, b), std::max(a, b)}, e});
  }
  std::sort(rest.begin(), rest.end());
  for (const auto& item : rest) order.ranked.push_back(item.second);
  lp.order = std::move(order);
  lp.ok = true;
  return lp;
}

std::string EdgeFactorization::to_string() const {
  std::string out;
  for (const Edge& e : edges) out += (out.empty() ? "" : ", ") + edge_string(e);
  return "{" + out + "}";
}

std::vector<EdgeFactorization> enumerate_factorizations(const Graph& g, const Monomial& m,
                                                        unsigned s) {
  std::vector<EdgeFactorization> out;
  if (m.degree() != 2 * s) return out;
  Monomial remaining = m;
  std::vector<Edge> chosen;
  factor_search(g, 0, remaining, s, chosen, m, out);
  return out;
}

bool in_edge_power(const Graph& g, const Monomial& m, unsigned t) {
  if (m.degree() < 2 * t) return false;
  Monomial remaining = m;
  return power_search(g, 0, remaining, t);
}

bool edge_divides(const Graph& g, const Edge& e, const Monomial& u, unsigned s) {
  if (s == 0) return false;
  const Monomial em = edge_monomial(u.universe(), e);
  if (!em.divides(u)) return false;
  return in_edge_power(g, u / em, s - 1);
}

std::string Expression::to_string() const {
  return f.to_string() + (tail.is_unit() ? "" : " * " + tail.to_string());
}

std::optional<Expression> maximal_expression(const Graph& g, const EdgeOrder& order,
                                             const Monomial& u, unsigned s,
                                             std::uint32_t tail_mask) {
  if (u.degree() < 2 * s) return std::nullopt;
  Monomial remaining = u;
  std::vector<unsigned> key(order.ranked.size(), 0);
  if (!search_expression(g, order, 0, remaining, s, tail_mask, key)) return std::nullopt;
  Expression e;
  e.key = key;
  Monomial product(u.universe());
  for (std::size_t i = 0; i < key.size(); ++i) {
    for (unsigned k = 0; k < key[i]; ++k) {
      e.f.edges.push_back(order.ranked[i]);
      product = product * edge_monomial(u.universe(), order.ranked[i]);
    }
  }
  std::sort(e.f.edges.begin(), e.f.edges.end());
  e.f.product = product;
  e.tail = u / product;
  return e;
}

bool expression_greater(const Expression& a, const Expression& b, const EdgeOrder& order) {
  if (a.key != b.key) return a.key > b.key;
  return tail_greater(a.tail, b.tail, order.variables);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kLess: return "less";
    case Verdict::kEqual: return "equal";
    case Verdict::kGreater: return "greater";
  }
  return "unknown";
}

EdgelexComparison edgelex_compare(const Graph& g, const EdgeOrder& order, const Monomial& a,
                                  const Monomial& b, unsigned s, unsigned r) {
  auto expr = [&](const Monomial& m) {
    if (m.degree() != 2 * s + r) {
      throw std::invalid_argument(m.to_string() + " is not a minimal generator of I^" +
                                  std::to_string(s) + " m^" + std::to_string(r));
    }
    auto e = maximal_expression(g, order, m, s);
    if (!e) {
      throw std::invalid_argument(m.to_string() + " is not in I^" + std::to_string(s));
    }
    return *e;
  };
  EdgelexComparison c;
  c.a = expr(a);
  c.b = expr(b);
  if (a == b) {
    c.verdict = Verdict::kEqual;
  } else {
    c.verdict = expression_greater(c.a, c.b, order) ? Verdict::kGreater : Verdict::kLess;
  }
  return c;
}

GeneratorOrdering order_generators(const Graph& g, const EdgeOrder& order, unsigned s, unsigned r) {
  const auto universe = static_cast<std::size_t>(g.vertex_count());
  const MonomialIdeal j = ideal_product(ideal_power(edge_ideal(g), s),
                                        ideal_power(maximal_ideal(universe), r));
  std::vector<std::pair<Monomial, Expression>> items;
  for (const Monomial& u : j.generators()) {
    auto e = maximal_expression(g, order, u, s);
    if (!e) throw std::logic_error("generator without an expression: " + u.to_string());
    items.emplace_back(u, std::move(*e));
  }
  std::sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
    return expression_greater(x.second, y.second, order);
  });
  GeneratorOrdering out;
  out.edge_order = order.to_string();
  for (auto& item : items) {
    out.generators.push_back(item.first);
    out.expressions.push_back(std::move(item.second));
  }
  return out;
}

std::string EvenConnectionPath::to_string() const {
  std::string out;
  for (Vertex v : vertices) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "(" + out + ") w.r.t. " + factorization.to_string();
}

std::vector<EvenConnection> even_connections(const Graph& g, const EdgeFactorization& f,
                                             std::size_t max_states) {
  // Distinct factorization edges with their multiplicities.
  std::vector<Edge> distinct;
  std::vector<unsigned> multiplicity;
  for (const Edge& e : f.edges) {
    if (!distinct.empty() && distinct.back() == e) {
      ++multiplicity.back();
    } else {
      distinct.push_back(e);
      multiplicity.push_back(1);
    }
  }
  struct State {
    Vertex at;
    std::vector<unsigned> used;
    int parent;
    Vertex via;  // the even-position vertex entered by the factorization edge
  };
  std::map<std::pair<Vertex, Vertex>, EvenConnectionPath> found;
  std::size_t total_states = 0;
  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    std::vector<State> states;
    std::set<std::pair<Vertex, std::vector<unsigned>>> seen;
    const std::vector<unsigned> zero(distinct.size(), 0);
    for (Vertex p1 : g.neighbors(x)) {
      if (seen.insert({p1, zero}).second) states.push_back({p1, zero, -1, 0});
    }
    for (std::size_t head = 0; head < states.size(); ++head) {
      if (++total_states > max_states) {
        throw BoundExceeded("even-connection search exceeds " + std::to_string(max_states) +
                            " states");
      }
      const State current = states[head];
      for (std::size_t k = 0; k < distinct.size(); ++k) {
        if (current.used[k] >= multiplicity[k] || !distinct[k].contains(current.at)) continue;
        const Vertex w = distinct[k].other(current.at);
        auto used = current.used;
        ++used[k];
        for (Vertex next : g.neighbors(w)) {
          if (!seen.insert({next, used}).second) continue;
          states.push_back({next, used, static_cast<int>(head), w});
          const auto key = std::make_pair(std::min(x, next), std::max(x, next));
          if (found.count(key)) continue;
          std::vector<Vertex> walk;
          for (int idx = static_cast<int>(states.size()) - 1; idx >= 0; idx = states[idx].parent) {
            walk.push_back(states[idx].at);
            if (states[idx].parent >= 0) walk.push_back(states[idx].via);
          }
          walk.push_back(x);
          std::reverse(walk.begin(), walk.end());
          if (x > next) std::reverse(walk.begin(), walk.end());
          found.emplace(key, EvenConnectionPath{std::move(walk), f});
        }
      }
    }
  }
  std::vector<EvenConnection> out;
  for (auto& [key, path] : found) out.push_back({key.first, key.second, std::move(path)});
  return out;
}

std::optional<std::string> validate_even_connection(const Graph& g, const EvenConnectionPath& p) {
  const auto& w = p.vertices;
  if (w.size() < 4 || w.size() % 2 != 0) {
    return "walk must be p_0..p_{2k+1} with k >= 1";
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] < 1 || w[i] > g.vertex_count() || w[i + 1] < 1 || w[i + 1] > g.vertex_count() ||
        !g.adjacent(w[i], w[i + 1])) {
      return "consecutive vertices " + std::to_string(w[i]) + "," + std::to_string(w[i + 1]) +
             " are not adjacent";
    }
  }
  std::map<Edge, unsigned> available;
  for (const Edge& e : p.factorization.edges) ++available[e];
  std::map<Edge, unsigned> used;
  const std::size_t k = (w.size() - 2) / 2;
  for (std::size_t l = 1; l <= k; ++l) {
    const Edge e(w[2 * l - 1], w[2 * l]);
    if (!available.count(e)) {
      return "pair p_" + std::to_string(2 * l - 1) + "p_" + std::to_string(2 * l) +
             " is not an edge of the factorization";
    }
    if (++used[e] > available[e]) {
      return "edge " + edge_string(e) + " used beyond its multiplicity";
    }
  }
  return std::nullopt;
}

BanerjeeCheck colon_via_even_connections(EdgeIdealPowers& powers, const Monomial& u, unsigned s) {
  if (s == 0) throw std::invalid_argument("colon theorem needs s >= 1");
  const Graph& g = powers.graph();
  const std::size_t universe = powers.universe();
  BanerjeeCheck check;
  check.direct = ideal_colon(powers.ordinary(s), u);
  const auto factorizations = enumerate_factorizations(g, u, s - 1);
  if (factorizations.empty()) {
    throw std::invalid_argument(u.to_string() + " is not a minimal generator of I^" +
                                std::to_string(s - 1));
  }
  check.factorizations = factorizations.size();
  std::map<std::pair<Vertex, Vertex>, EvenConnection> pairs;
  for (const auto& f : factorizations) {
    for (auto& c : even_connections(g, f)) pairs.emplace(std::make_pair(c.x, c.y), std::move(c));
  }
  std::vector<Monomial> gens = powers.edge_ideal().generators();
  std::vector<Monomial> without_self = gens;
  for (auto& [key, c] : pairs) {
    const Monomial xy = Monomial::from_variables(universe, {c.x, c.y});
    gens.push_back(xy);
    if (c.x != c.y) without_self.push_back(xy);
    check.connections.push_back(std::move(c));
  }
  check.via_paths = MonomialIdeal::generated_by(universe, std::move(gens));
  check.agree = ideal_equal(check.via_paths, check.direct);
  if (!check.agree) check.witness = symmetric_difference_witness(check.via_paths, check.direct);
  const MonomialIdeal reduced = MonomialIdeal::generated_by(universe, std::move(without_self));
  check.self_connections_needed = !ideal_equal(reduced, check.direct) && check.agree;
  return check;
}

VerificationReport verify_banerjee(EdgeIdealPowers& powers, unsigned s) {
  auto report = make_report("banerjee", "even-connection-colon", static_cast<int>(s));
  if (s < 2) return report.skip("needs s >= 2");
  std::size_t checked = 0, self_needed = 0, paths = 0;
  for (const Monomial& u : powers.ordinary(s - 1).generators()) {
    const BanerjeeCheck check = colon_via_even_connections(powers, u, s);
    ++checked;
    if (check.self_connections_needed) ++self_needed;
    for (const auto& c : check.connections) {
      ++paths;
      if (auto bad = validate_even_connection(powers.graph(), c.witness)) {
        report.fail("invalid even-connection witness: " + *bad)
            .witness("path", c.witness.to_string());
        return report;
      }
    }
    if (!check.agree) {
      report.fail("I^s : u differs from I + (even connections) at u = " + u.to_string())
          .witness("monomial", check.witness->to_string())
          .witness("generator", u.to_string());
      return report;
    }
  }
  report.detail("generators u", std::to_string(checked))
      .detail("connections validated", std::to_string(paths))
      .detail("colons needing x=y connections", std::to_string(self_needed));
  return report;
}

VerificationReport verify_order_lemma(const Graph& g, const EdgeOrder& order, unsigned s,
                                      unsigned r) {
  auto report = make_report("orderings", "order-lemma", static_cast<int>(s));
  report.instance.params.emplace_back("r", std::to_string(r));
  report.detail("edge order", order.to_string());
  if (s == 0) return report.skip("needs s >= 1");
  const GeneratorOrdering ordering = order_generators(g, order, s, r);
  const auto& u = ordering.generators;
  const MonomialIdeal next = ideal_power(edge_ideal(g), s + 1);
  std::size_t first_branch = 0, second_branch = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    // Variables v with (u_i : u_k) = (v) for some i < k.
    std::uint32_t principal = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial q = u[i] / gcd(u[i], u[k]);
      if (q.degree() == 1) principal |= q.support_mask();
    }
    for (std::size_t j = 0; j < k; ++j) {
      const Monomial q = u[j] / gcd(u[j], u[k]);
      if (q.support_mask() & principal) {
        ++second_branch;
        continue;
      }
      if (!next.contains(q * u[k])) {
        report.fail("neither branch holds for (u_j : u_k) = (" + q.to_string() + ")")
            .witness("pair", "j=" + std::to_string(j + 1) + " " + u[j].to_string() + ", k=" +
                                 std::to_string(k + 1) + " " + u[k].to_string());
        return report;
      }
      ++first_branch;
    }
  }
  report.detail("generators", std::to_string(u.size()))
      .detail("pairs covered by a variable colon", std::to_string(second_branch))
      .detail("remaining pairs in I^(s+1):u_k", std::to_string(first_branch));
  return report;
}

VerificationReport verify_leaf_lemma(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                     unsigned s) {
  auto report = make_report("orderings", "leaf-order-lemma", static_cast<int>(s));
  const Graph& g = powers.graph();
  if (s == 0) return report.skip("needs s >= 1");
  if (cd.z_vertices.empty()) {
    return report.detail("z-vertices", "none (vacuous)");
  }
  const auto cycles = odd_cycles(g);
  for (Vertex z : cd.z_vertices) {
    if (cycles.on_cycle[z - 1]) return report.skip("z-vertex x" + std::to_string(z) + " lies on a cycle");
  }
  const LeafPeeling lp = leaf_peeling(g, cd);
  if (!lp.ok) return report.skip(lp.reason);
  report.detail("edge order", lp.order.to_string());
  std::vector<int> z_position(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  for (std::size_t i = 0; i < lp.z_order.size(); ++i) z_position[lp.z_order[i]] = static_cast<int>(i);

  const std::size_t universe = powers.universe();
  const auto& gens = powers.ordinary(s).generators();
  std::map<std::string, Expression> expressions;
  auto expression_of = [&](const Monomial& m) -> const Expression& {
    auto key = m.to_string();
    auto it = expressions.find(key);
    if (it == expressions.end()) {
      it = expressions.emplace(key, *maximal_expression(g, lp.order, m, s)).first;
    }
    return it->second;
  };
  std::size_t pairs = 0;
  std::set<std::pair<Vertex, Vertex>> adjacent_pairs;
  for (const Monomial& ut : gens) {
    std::set<std::pair<Vertex, Vertex>> z_pairs;
    std::map<std::pair<Vertex, Vertex>, EvenConnectionPath> witness;
    for (const auto& f : enumerate_factorizations(g, ut, s)) {
      for (auto& c : even_connections(g, f)) {
        if (z_position[c.x] < 0 || z_position[c.y] < 0) continue;
        // An adjacent pair only reproduces an edge already in I.
        if (c.x != c.y && g.adjacent(c.x, c.y)) {
          adjacent_pairs.insert({c.x, c.y});
          continue;
        }
        if (z_pairs.insert({c.x, c.y}).second) witness.emplace(std::make_pair(c.x, c.y), c.witness);
      }
    }
    for (const auto& [a, b] : z_pairs) {
      ++pairs;
      const Vertex zk = z_position[a] <= z_position[b] ? a : b;
      const Monomial zm = Monomial::variable(universe, zk);
      bool ok = false;
      for (Vertex w = 1; w <= g.vertex_count() && !ok; ++w) {
        if (w == zk || ut.exponent_of(w) == 0) continue;
        const Monomial us = zm * (ut / Monomial::variable(universe, w));
        if (!in_edge_power(g, us, s)) continue;
        if (!expression_greater(expression_of(us), expression_of(ut), lp.order)) continue;
        ok = us / gcd(us, ut) == zm;
      }
      if (!ok) {
        report.fail("no greater generator with colon (x" + std::to_string(zk) + ")")
            .witness("generator", ut.to_string())
            .witness("path", witness.at({a, b}).to_string());
        return report;
      }
    }
  }
  report.detail("generators", std::to_string(gens.size()))
      .detail("z-pairs checked", std::to_string(pairs))
      .detail("adjacent z-pairs skipped (already in I)", std::to_string(adjacent_pairs.size()));
  return report;
}

std::vector<MonomialIdeal> partial_sums(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                        unsigned s) {
  const unsigned k = s / (cd.n + 1);
  std::vector<MonomialIdeal> sums;
  MonomialIdeal running = MonomialIdeal::zero(powers.universe());
  for (unsigned t = 0; t <= k; ++t) {
    const MonomialIdeal term =
        ideal_product(ideal_power(cd.mu_k, t), powers.ordinary(s - t * (cd.n + 1)));
    running = ideal_sum(running, term);
    sums.push_back(running);
  }
  return sums;
}

ColonChain verify_colon_chain(EdgeIdealPowers& powers, const CycleDecomposition& cd, unsigned s) {
  ColonChain chain{make_report("orderings", "colon-chain", static_cast<int>(s)), {}};
  auto& report = chain.report;
  if (s == 0) {
    report.skip("needs s >= 1");
    return chain;
  }
  const unsigned k = s / (cd.n + 1);
  report.detail("k", std::to_string(k));
  if (k == 0) {
    report.detail("layers", "none (vacuous)");
    return chain;
  }
  if (cd.z_vertices.empty()) {
    report.detail("layers", "K = 0, every layer mu^i K^i I^(s-i(n+1)) is zero (vacuous)");
    return chain;
  }
  const Graph& g = powers.graph();
  const LeafPeeling lp = leaf_peeling(g, cd);
  if (!lp.ok) {
    report.skip(lp.reason);
    return chain;
  }
  const MonomialIdeal& i_ideal = powers.edge_ideal();
  const std::uint32_t z_mask = vertex_mask(cd.z_vertices);
  const VertexSet l_vars = set_difference(g.vertices(), cd.z_vertices);
  std::vector<MonomialIdeal> layers;
  for (unsigned i = 0; i <= k; ++i) {
    layers.push_back(ideal_product(ideal_power(cd.mu_k, i), powers.ordinary(s - i * (cd.n + 1))));
  }
  const std::vector<MonomialIdeal> sums = partial_sums(powers, cd, s);
  std::size_t colon_lemma_checks = 0, colon_lemma_skipped = 0, walk_steps = 0, walk_skipped = 0;
  std::set<std::string> seen_colons;
  for (unsigned i = 1; i <= k; ++i) {
    const MonomialIdeal& previous = layers[i - 1];
    for (const Monomial& f : layers[i].generators()) {
      if (previous.contains(f)) {
        ++colon_lemma_skipped;
        continue;
      }
      ++colon_lemma_checks;
      const MonomialIdeal q = ideal_colon(previous, f);
      if (auto bad = check_variable_form(q, i_ideal, l_vars)) {
        report.fail("layer colon at i = " + std::to_string(i) + ": " + *bad)
            .witness("generator", f.to_string())
            .witness("ideal", q.to_string());
        return chain;
      }
    }
    const Monomial mu_power = pow(cd.mu.front(), i);
    const LayerOrdering ordering =
        order_layer(g, lp.order, layers[i], mu_power, s - i * (cd.n + 1), z_mask);
    if (!ordering.ok) {
      report.fail(ordering.problem).witness("ideal", layers[i].to_string());
      return chain;
    }
    MonomialIdeal running = sums[i - 1];
    for (const Monomial& u : ordering.generators) {
      if (running.contains(u)) {
        ++walk_skipped;
        continue;
      }
      ++walk_steps;
      const MonomialIdeal q = ideal_colon(running, u);
      if (auto bad = check_variable_form(q, i_ideal, l_vars)) {
        report.fail("partial-sum colon at i = " + std::to_string(i) + ": " + *bad)
            .witness("generator", u.to_string())
            .witness("ideal", q.to_string());
        return chain;
      }
      if (seen_colons.insert(q.to_string()).second) chain.colons.push_back(q);
      running = ideal_sum(running, MonomialIdeal::generated_by(running.universe(), {u}));
    }
    if (!ideal_equal(running, sums[i])) {
      report.fail("walk does not reach I_" + std::to_string(i))
          .witness("monomial", symmetric_difference_witness(running, sums[i])->to_string());
      return chain;
    }
  }
  report.detail("edge order", lp.order.to_string())
      .detail("L", variables_string(l_vars))
      .detail("layer colons checked", std::to_string(colon_lemma_checks))
      .detail("layer generators already in previous layer", std::to_string(colon_lemma_skipped))
      .detail("walk colons checked", std::to_string(walk_steps))
      .detail("walk generators already in partial sum", std::to_string(walk_skipped))
      .detail("distinct colons", std::to_string(chain.colons.size()));
  return chain;
}

VerificationReport verify_reg_chain(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                    unsigned s, const BettiOptions& options,
                                    const SearchLimits& limits) {
  auto report = make_report("regularity", "partial-sum-chain", static_cast<int>(s));
  if (s == 0) return report.skip("needs s >= 1");
  if (cd.cycles.size() != 1) return report.skip("needs exactly one designated cycle");
  const HypothesisReport h = check_hypotheses(powers.graph(), cd.cycles.front(), limits);
  report.detail("nu(G)", std::to_string(h.nu_g)).detail("nu(H)", std::to_string(h.nu_h));
  if (!h.gap_at_least_3) return report.skip("ν(G)−ν(H) < 3");
  const std::vector<MonomialIdeal> sums = partial_sums(powers, cd, s);
  try {
    const int target = regularity(powers.ordinary(s), options);
    report.detail("reg(I^s)", std::to_string(target));
    for (std::size_t i = 0; i < sums.size(); ++i) {
      const int reg = regularity(sums[i], options);
      report.detail("reg(I_" + std::to_string(i) + ")", std::to_string(reg));
      if (reg != target) {
        report.fail("reg(I_" + std::to_string(i) + ") = " + std::to_string(reg) +
                    " but reg(I^s) = " + std::to_string(target))
            .witness("index", std::to_string(i + 1));
        return report;
      }
    }
  } catch (const BoundExceeded& e) {
    return report.skip(std::string("bound exceeded: ") + e.what());
  }
  return report;
}

}  // namespace edgereg
