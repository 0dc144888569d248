// Monomial ideals held by their minimal generating set.
//
// Generators are kept minimal (no generator divides another) and in canonical
// order: total degree ascending, then lex descending with x1 highest. Two
// ideals are equal exactly when their generator lists are identical.

#ifndef EDGEREG_IDEAL_HPP
#define EDGEREG_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"

namespace edgereg {

class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(std::size_t universe);
  static MonomialIdeal unit(std::size_t universe);
  /// Minimalizes the given generators.
  static MonomialIdeal generated_by(std::size_t universe, std::vector<Monomial> gens);

  std::size_t universe() const { return universe_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  /// A generator of `other` outside this ideal, if any.
  std::optional<Monomial> first_missing(const MonomialIdeal& other) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Monomial> gens_;
};

/// Drops duplicates and every monomial divisible by another one.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned t);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// Left-to-right intersection; `ideals` must be nonempty.
MonomialIdeal ideal_intersection(const std::vector<MonomialIdeal>& ideals);
MonomialIdeal ideal_colon(const MonomialIdeal& a, const Monomial& d);
MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& d);

bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b);
bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Least degree of a minimal generator; throws on the zero ideal.
unsigned alpha_degree(const MonomialIdeal& a);

/// All degree-t monomials in the given 1-based variables.
MonomialIdeal variable_power_ideal(std::size_t universe, const VertexSet& vars, unsigned t);
/// The ideal generated by the given variables (zero ideal when empty).
MonomialIdeal variable_ideal(std::size_t universe, const VertexSet& vars);

/// A monomial in exactly one of a and b (a minimal generator of one side).
std::optional<Monomial> symmetric_difference_witness(const MonomialIdeal& a,
                                                     const MonomialIdeal& b);

/// Parses "(x1*x2, x3^2)" or "x1*x2, x3^2"; "0" / "()" is the zero ideal.
MonomialIdeal parse_ideal(const std::string& text, std::size_t universe);

}  // namespace edgereg

#endif  // EDGEREG_IDEAL_HPP
