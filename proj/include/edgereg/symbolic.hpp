// Edge ideals, their ordinary and symbolic powers, and the structured
// decompositions of symbolic powers attached to designated odd cycles.
//
// The symbolic power is always computed from scratch as the intersection of
// p^s over the primes p generated by minimal vertex covers; every other route
// (cycle decompositions, the m^{2s} identities, the alpha closed form) is
// checked against it.

#ifndef EDGEREG_SYMBOLIC_HPP
#define EDGEREG_SYMBOLIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/report.hpp"

namespace edgereg {

MonomialIdeal edge_ideal(const Graph& g);
/// The homogeneous maximal ideal (x1, ..., xN).
MonomialIdeal maximal_ideal(std::size_t universe);
/// Product of the variables of a vertex set.
Monomial vertex_product(std::size_t universe, const VertexSet& s);

MonomialIdeal symbolic_power(const Graph& g, unsigned s, const SearchLimits& limits = {});
MonomialIdeal symbolic_power(const Graph& g, const CoverEnumeration& covers, unsigned s);

/// m is in I^(s) iff every minimal cover W has sum_{x in W} deg_x(m) >= s.
bool symbolic_membership(const CoverEnumeration& covers, const Monomial& m, unsigned s);
bool symbolic_membership(const Graph& g, const Monomial& m, unsigned s,
                         const SearchLimits& limits = {});

/// Caches I, the minimal covers, and the powers of one graph.
class EdgeIdealPowers {
 public:
  explicit EdgeIdealPowers(Graph g, const SearchLimits& limits = {});

  const Graph& graph() const { return graph_; }
  const MonomialIdeal& edge_ideal() const { return ideal_; }
  const CoverEnumeration& covers() const { return covers_; }
  std::size_t universe() const { return static_cast<std::size_t>(graph_.vertex_count()); }

  const MonomialIdeal& ordinary(unsigned s);
  const MonomialIdeal& symbolic(unsigned s);

 private:
  Graph graph_;
  MonomialIdeal ideal_;
  CoverEnumeration covers_;
  std::map<unsigned, MonomialIdeal> ordinary_;
  std::map<unsigned, MonomialIdeal> symbolic_;
};

/// Recomputes membership of every generator of `candidate` through the cover
/// criterion and checks that dropping any variable leaves I^(s).
VerificationReport cross_check_symbolic_power(const CoverEnumeration& covers,
                                              const MonomialIdeal& candidate, unsigned s);

/// Data attached to designated odd cycles of a common length 2n+1.
struct CycleDecomposition {
  std::vector<CycleCertificate> cycles;
  unsigned n = 0;
  std::vector<Monomial> mu;   // product of the variables of each cycle
  MonomialIdeal J;            // (mu_1, ..., mu_r)
  VertexSet neighborhood;     // N_G of the union of the cycles
  VertexSet y_vertices;       // neighbourhood minus the cycle vertices
  VertexSet z_vertices;       // everything outside the neighbourhood
  MonomialIdeal K;            // (z_1, ..., z_m)
  MonomialIdeal L;            // cycle variables and y variables
  /// sum_j mu_j * K_j where K_j holds the variables outside N_G(C_j); for a
  /// single cycle this is mu * K.
  MonomialIdeal mu_k;
  bool all_dominant = false;  // N_G(C_j) = V(G) for every designated cycle

  std::string describe() const;
};

/// Validates the cycles (simple, odd, common length) and builds the data.
CycleDecomposition make_cycle_decomposition(const Graph& g,
                                            std::vector<CycleCertificate> cycles);

struct SymbolicDecomposition {
  unsigned s = 0;
  unsigned k = 0;  // floor(s / (n+1))
  std::vector<std::pair<unsigned, MonomialIdeal>> terms;
  MonomialIdeal sum;
};

/// sum_{i=0}^{k} J^i I^{s-i(n+1)}.
SymbolicDecomposition decompose_symbolic(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                         unsigned s);
SymbolicDecomposition decompose_symbolic(const Graph& g, const CycleDecomposition& cd,
                                         unsigned s);

/// Compares decompose_symbolic against the cover intersection.
VerificationReport verify_decomposition(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                        unsigned s);

struct M2sSums {
  MonomialIdeal intersection;  // I^(s) ∩ m^{2s}
  MonomialIdeal j_m_sum;       // sum J^i m^i I^{s-i(n+1)}
  MonomialIdeal mu_k_sum;      // sum (mu K)^i I^{s-i(n+1)}
};

M2sSums m2s_sums(EdgeIdealPowers& powers, const CycleDecomposition& cd, unsigned s);

/// The two sum identities for I^(s) ∩ m^{2s}, plus I^(s) ∩ m^{2s} = I^s when
/// every designated cycle dominates the graph.
VerificationReport m2s_identities(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                  unsigned s);

/// Exact nonnegative fraction in lowest terms.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long p, long long q);
  std::string to_string() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
};

struct AsymptoticInvariants {
  unsigned n = 0;
  Fraction waldschmidt;  // (2n+1)/(n+1)
  Fraction resurgence;   // (2n+2)/(2n+1); also the asymptotic resurgence
  /// 2s - floor(s/(n+1)).
  unsigned alpha(unsigned s) const { return 2 * s - s / (n + 1); }
};

AsymptoticInvariants asymptotic_invariants(const CycleDecomposition& cd);

/// alpha(I^(s)) from the cover intersection against the closed form.
VerificationReport verify_alpha(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                unsigned s);

struct ContainmentCheck {
  unsigned s = 0;
  unsigned t = 0;
  bool contained = false;         // I^(s) ⊆ I^t by generator membership
  bool alpha_criterion = false;   // closed-form alpha(I^(s)) < alpha(I^t)
  bool agree = false;             // contained == !alpha_criterion
  std::optional<Monomial> witness;  // generator of I^(s) outside I^t
};

ContainmentCheck containment_check(EdgeIdealPowers& powers, const CycleDecomposition& cd,
                                   unsigned s, unsigned t);

}  // namespace edgereg

#endif  // EDGEREG_SYMBOLIC_HPP
