// Monomials over a fixed variable universe x1..xN, stored inline.

#ifndef EDGEREG_MONOMIAL_HPP
#define EDGEREG_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace edgereg {

class Monomial {
 public:
  using Exponent = std::uint16_t;
  static constexpr std::size_t kMaxVariables = 32;

  Monomial() = default;
  /// The unit monomial in `universe` variables.
  explicit Monomial(std::size_t universe);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  /// Product of the given 1-based variables (repeats allowed).
  static Monomial from_variables(std::size_t universe, std::initializer_list<int> vars);
  static Monomial variable(std::size_t universe, int var);

  std::size_t universe() const { return size_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  /// Exponent of the 1-based variable x_var.
  Exponent exponent_of(int var) const { return exps_[static_cast<std::size_t>(var - 1)]; }
  void set(std::size_t i, unsigned e);

  unsigned degree() const;
  bool is_unit() const { return degree() == 0; }
  /// Bit i set when variable i+1 has positive exponent.
  std::uint32_t support_mask() const;
  bool squarefree() const;

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; throws unless b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial pow(const Monomial& a, unsigned t);

  friend bool operator==(const Monomial& a, const Monomial& b);

  /// Lex comparison with x1 the highest variable: true when a >_lex b.
  friend bool lex_greater(const Monomial& a, const Monomial& b);
  /// Canonical order: total degree ascending, then lex descending.
  friend bool canonical_less(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  /// Renders as `x1^2*x3`; the unit monomial renders as `1`.
  std::string to_string() const;
  static Monomial parse(std::string_view text, std::size_t universe);

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

}  // namespace edgereg

#endif  // EDGEREG_MONOMIAL_HPP
