// Edge factorizations, edgelex orderings, even connections and the colon
// ideals they describe.

#ifndef EDGEREG_EVEN_CONNECTION_HPP
#define EDGEREG_EVEN_CONNECTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgereg/betti.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/report.hpp"
#include "edgereg/symbolic.hpp"

namespace edgereg {

/// Total order on the edges (and, for tails, on the variables) of a graph.
struct EdgeOrder {
  std::string name;
  std::vector<Edge> ranked;       // greatest first
  std::vector<Vertex> variables;  // greatest first

  /// Edges as monomials under lex with x1 > x2 > ...
  static EdgeOrder lex(const Graph& g);
  /// Explicit edge ranking; must list every edge of g exactly once.
  static EdgeOrder from_list(const Graph& g, std::vector<Edge> ranked, std::string name = "explicit");
  std::string to_string() const;
};

struct LeafPeeling {
  bool ok = false;
  std::string reason;
  std::vector<Vertex> z_order;   // z_1 > ... > z_m
  std::vector<Edge> leaf_edges;  // e_1 > ... > e_m
  EdgeOrder order;
};

/// Peels pendant z-vertices (outside N(C)) one at a time, smallest index
/// first, then ranks the remaining edges lex with y-variables above the cycle
/// variables. Needs a single designated cycle.
LeafPeeling leaf_peeling(const Graph& g, const CycleDecomposition& cd);

struct EdgeFactorization {
  std::vector<Edge> edges;  // multiset, sorted
  Monomial product;
  std::string to_string() const;
};

/// All multisets of s edges whose product is exactly m.
std::vector<EdgeFactorization> enumerate_factorizations(const Graph& g, const Monomial& m,
                                                        unsigned s);
/// m lies in I(g)^t.
bool in_edge_power(const Graph& g, const Monomial& m, unsigned t);
/// e divides u and u/e lies in I^(s-1) (ordinary power).
bool edge_divides(const Graph& g, const Edge& e, const Monomial& u, unsigned s);

struct Expression {
  EdgeFactorization f;
  Monomial tail;
  std::vector<unsigned> key;  // edge exponents in rank order
  std::string to_string() const;
};

/// Expression u = f * tail (f a product of s edges, tail supported on
/// tail_mask) that is greatest by edge key, then by tail lex.
std::optional<Expression> maximal_expression(const Graph& g, const EdgeOrder& order,
                                             const Monomial& u, unsigned s,
                                             std::uint32_t tail_mask = ~std::uint32_t{0});

/// a > b when expression a beats expression b: key first, then tail lex.
bool expression_greater(const Expression& a, const Expression& b, const EdgeOrder& order);

enum class Verdict { kLess, kEqual, kGreater };
std::string to_string(Verdict v);

struct EdgelexComparison {
  Verdict verdict = Verdict::kEqual;
  Expression a;
  Expression b;
};

/// Compares minimal generators of I^s m^r; throws std::invalid_argument when
/// an input is not one.
EdgelexComparison edgelex_compare(const Graph& g, const EdgeOrder& order, const Monomial& a,
                                  const Monomial& b, unsigned s, unsigned r);

struct GeneratorOrdering {
  std::vector<Monomial> generators;  // greatest first
  std::vector<Expression> expressions;
  std::string edge_order;
};

GeneratorOrdering order_generators(const Graph& g, const EdgeOrder& order, unsigned s, unsigned r);

struct EvenConnectionPath {
  std::vector<Vertex> vertices;
  EdgeFactorization factorization;
  std::string to_string() const;
};

struct EvenConnection {
  Vertex x = 0;
  Vertex y = 0;  // x <= y
  EvenConnectionPath witness;
};

/// Every pair joined by an even connection with respect to f, with a shortest
/// witness walk.
std::vector<EvenConnection> even_connections(const Graph& g, const EdgeFactorization& f,
                                             std::size_t max_states = 500000);

/// Rechecks the three defining conditions; returns the violated one.
std::optional<std::string> validate_even_connection(const Graph& g, const EvenConnectionPath& p);

struct BanerjeeCheck {
  MonomialIdeal via_paths;
  MonomialIdeal direct;
  bool agree = false;
  /// Dropping the x = y connections would change the colon.
  bool self_connections_needed = false;
  std::size_t factorizations = 0;
  std::vector<EvenConnection> connections;
  std::optional<Monomial> witness;
};

/// I^s : u computed as I + (xy : x even connected to y) over all
/// factorizations of u, next to the direct colon.
BanerjeeCheck colon_via_even_connections(EdgeIdealPowers& powers, const Monomial& u, unsigned s);

/// The colon theorem for every u in G(I^(s-1)).
VerificationReport verify_banerjee(EdgeIdealPowers& powers, unsigned s);

VerificationReport verify_order_lemma(const Graph& g, const EdgeOrder& order, unsigned s,
                                      unsigned r);

VerificationReport verify_leaf_lemma(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                     unsigned s);

struct ColonChain {
  VerificationReport report;
  /// Distinct colons (I_{i-1} + (u_1..u_j)) : u_{j+1} met along the walk.
  std::vector<MonomialIdeal> colons;
};

ColonChain verify_colon_chain(EdgeIdealPowers& powers, const CycleDecomposition& cd, unsigned s);

/// Partial sums I_{i-1} = sum_{t<i} mu^t K^t I^{s-t(n+1)}.
std::vector<MonomialIdeal> partial_sums(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                        unsigned s);

VerificationReport verify_reg_chain(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                    unsigned s, const BettiOptions& options = {},
                                    const SearchLimits& limits = {});

}  // namespace edgereg

#endif  // EDGEREG_EVEN_CONNECTION_HPP
