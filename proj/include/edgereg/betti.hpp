// Multigraded Betti numbers of monomial ideals and Castelnuovo-Mumford
// regularity.
//
// beta_{i,b}(I) is the dimension of the reduced homology in degree i-1 of the
// upper Koszul complex K^b(I) = { squarefree tau <= b : x^(b - tau) in I }.
// Only multidegrees in the lcm-closure of the generators can carry nonzero
// Betti numbers, so those are the only ones examined.

#ifndef EDGEREG_BETTI_HPP
#define EDGEREG_BETTI_HPP

#include <map>
#include <utility>
#include <vector>

#include "edgereg/homology.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/report.hpp"
#include "edgereg/symbolic.hpp"

namespace edgereg {

struct BettiOptions {
  Field field;
  std::size_t max_generators = 200;
  std::size_t max_multidegrees = 20000;
  std::size_t max_variables = 16;
};

struct BettiEntry {
  int i = 0;
  Monomial b;
  long long rank = 0;
};

class BettiTable {
 public:
  BettiTable(Field field, std::vector<BettiEntry> entries, std::size_t multidegrees_examined);

  const Field& field() const { return field_; }
  /// Nonzero entries ordered by (canonical multidegree, i).
  const std::vector<BettiEntry>& entries() const { return entries_; }
  std::size_t multidegrees_examined() const { return examined_; }
  /// (i, total degree j) -> sum of ranks.
  std::map<std::pair<int, int>, long long> graded() const;
  long long total(int i) const;
  /// max (j - i) over nonzero entries.
  int regularity() const;

 private:
  Field field_;
  std::vector<BettiEntry> entries_;
  std::size_t examined_ = 0;
};

SimplicialComplex upper_koszul_complex(const MonomialIdeal& a, const Monomial& b);

/// Closure of the generators under pairwise lcm; throws BoundExceeded past limit.
std::vector<Monomial> lcm_closure(const MonomialIdeal& a, std::size_t limit);

BettiTable betti_table(const MonomialIdeal& a, const BettiOptions& options = {});

int regularity(const MonomialIdeal& a, const BettiOptions& options = {});
/// reg(S/I) = reg(I) - 1.
int quotient_regularity(const MonomialIdeal& a, const BettiOptions& options = {});

struct SocleCheck {
  unsigned s = 0;
  int regularity = 0;  // 2s - 1 when the checks hold
  int top_degree = -1;  // largest degree with a nonzero graded piece
  unsigned long long dim_below = 0;  // dim of the degree 2s-1 piece
  unsigned long long dim_at = 0;     // dim of the degree 2s piece
  bool ok = false;
};

/// Regularity of the Artinian ring S/(I^(s) + m^{2s}) from its Hilbert function.
SocleCheck socle_regularity(EdgeIdealPowers& powers, unsigned s);

/// Number of degree-d monomials outside the ideal.
unsigned long long standard_monomial_count(const MonomialIdeal& a, unsigned d);

/// reg(S/I^(s)) >= 2s + nu(G) - 2.
VerificationReport lower_bound_check(EdgeIdealPowers& powers, unsigned s,
                                     const BettiOptions& options = {},
                                     const SearchLimits& limits = {});

/// reg(S/J) <= bound for each J (colon ideals of the form I + L'').
VerificationReport colon_upper_bound_check(const std::vector<MonomialIdeal>& colons, int bound,
                                           const BettiOptions& options = {});

/// reg(S/I(H)) = nu(H) for a forest H.
VerificationReport forest_regularity_check(const Graph& forest, const BettiOptions& options = {},
                                           const SearchLimits& limits = {});

/// reg(I^(s)) = reg(I^s), both through the Betti engine.
VerificationReport regularity_equality_check(EdgeIdealPowers& powers, unsigned s,
                                             const BettiOptions& options = {});

}  // namespace edgereg

#endif  // EDGEREG_BETTI_HPP
