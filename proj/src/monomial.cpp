#include "edgereg/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace edgereg {

namespace {

void require_same_universe(const Monomial& a, const Monomial& b) {
  if (a.universe() != b.universe()) {
    throw std::invalid_argument("monomials over different variable universes (" +
                                std::to_string(a.universe()) + " vs " +
                                std::to_string(b.universe()) + ")");
  }
}

Monomial::Exponent checked(unsigned long value) {
  if (value > std::numeric_limits<Monomial::Exponent>::max()) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return static_cast<Monomial::Exponent>(value);
}

}  // namespace

Monomial::Monomial(std::size_t universe) {
  if (universe > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                " variables are supported");
  }
  size_ = static_cast<std::uint8_t>(universe);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) exps_[i++] = checked(e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.exps_[i] = checked(exponents[i]);
  return m;
}

Monomial Monomial::from_variables(std::size_t universe, std::initializer_list<int> vars) {
  Monomial m(universe);
  for (int v : vars) {
    if (v < 1 || static_cast<std::size_t>(v) > universe) {
      throw std::out_of_range("variable x" + std::to_string(v) + " outside universe");
    }
    m.exps_[v - 1] = checked(m.exps_[v - 1] + 1UL);
  }
  return m;
}

Monomial Monomial::variable(std::size_t universe, int var) {
  return from_variables(universe, {var});
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= size_) throw std::out_of_range("variable index outside universe");
  exps_[i] = checked(e);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += exps_[i];
  return d;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i]) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

bool Monomial::squarefree() const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > 1) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_universe(a, b);
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    out.exps_[i] = checked(static_cast<unsigned long>(a.exps_[i]) + b.exps_[i]);
  }
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) {
    throw std::invalid_argument(b.to_string() + " does not divide " + a.to_string());
  }
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    out.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_universe(a, b);
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_universe(a, b);
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial pow(const Monomial& a, unsigned t) {
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    out.exps_[i] = checked(static_cast<unsigned long>(a.exps_[i]) * t);
  }
  return out;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_) return false;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.exps_[i] != b.exps_[i]) return false;
  }
  return true;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
  }
  return false;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_greater(a, b);
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < size_; ++i) {
    if (!exps_[i]) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << i + 1;
    if (exps_[i] > 1) out << '^' << exps_[i];
  }
  if (first) return "1";
  return out.str();
}

Monomial Monomial::parse(std::string_view text, std::size_t universe) {
  Monomial m(universe);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_number = [&]() -> unsigned long {
    skip_space();
    const std::size_t start = pos;
    unsigned long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (value > 1'000'000) throw std::invalid_argument("number too large in monomial");
      ++pos;
    }
    if (pos == start) {
      throw std::invalid_argument("expected a number at offset " + std::to_string(start) +
                                  " in '" + std::string(text) + "'");
    }
    return value;
  };
  skip_space();
  if (text.substr(pos) == "1") return m;
  while (true) {
    skip_space();
    if (pos >= text.size() || text[pos] != 'x') {
      throw std::invalid_argument("expected variable at offset " + std::to_string(pos) +
                                  " in '" + std::string(text) + "'");
    }
    ++pos;
    const unsigned long var = read_number();
    if (var < 1 || var > universe) {
      throw std::out_of_range("variable x" + std::to_string(var) + " outside universe of " +
                              std::to_string(universe));
    }
    unsigned long e = 1;
    skip_space();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = read_number();
    }
    m.exps_[var - 1] = checked(m.exps_[var - 1] + e);
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] != '*') {
      throw std::invalid_argument("unexpected character '" + std::string(1, text[pos]) +
                                  "' in monomial");
    }
    ++pos;
  }
  return m;
}

}  // namespace edgereg
