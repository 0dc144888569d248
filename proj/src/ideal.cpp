#include "edgereg/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace edgereg {

namespace {

void require_same_universe(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("ideals over different variable universes (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

void check_lengths(const std::vector<Monomial>& gens, std::size_t universe) {
  for (const Monomial& g : gens) {
    if (g.universe() != universe) {
      throw std::invalid_argument("generator " + g.to_string() +
                                  " has mismatched exponent-vector length");
    }
  }
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  const std::size_t universe = gens.front().universe();
  check_lengths(gens, universe);
  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  std::vector<std::uint32_t> kept_support;
  for (const Monomial& m : gens) {
    const std::uint32_t support = m.support_mask();
    bool redundant = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if ((kept_support[i] & ~support) == 0 && kept[i].divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(m);
      kept_support.push_back(support);
    }
  }
  return kept;
}

MonomialIdeal MonomialIdeal::zero(std::size_t universe) {
  MonomialIdeal out;
  out.universe_ = universe;
  return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t universe) {
  MonomialIdeal out;
  out.universe_ = universe;
  out.gens_.push_back(Monomial(universe));
  return out;
}

MonomialIdeal MonomialIdeal::generated_by(std::size_t universe, std::vector<Monomial> gens) {
  check_lengths(gens, universe);
  MonomialIdeal out;
  out.universe_ = universe;
  out.gens_ = minimalize(std::move(gens));
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.universe() != universe_) {
    throw std::invalid_argument("monomial universe does not match the ideal");
  }
  const std::uint32_t support = m.support_mask();
  const unsigned degree = m.degree();
  for (const Monomial& g : gens_) {
    if (g.degree() > degree) break;
    if ((g.support_mask() & ~support) == 0 && g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return !first_missing(other).has_value();
}

std::optional<Monomial> MonomialIdeal::first_missing(const MonomialIdeal& other) const {
  require_same_universe(universe_, other.universe_);
  for (const Monomial& g : other.gens_) {
    if (!contains(g)) return g;
  }
  return std::nullopt;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].to_string();
  }
  out << ')';
  return out.str();
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a.universe(), b.universe());
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::generated_by(a.universe(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a.universe(), b.universe());
  std::unordered_set<Monomial, MonomialHash> products;
  for (const Monomial& x : a.generators()) {
    for (const Monomial& y : b.generators()) products.insert(x * y);
  }
  return MonomialIdeal::generated_by(a.universe(), {products.begin(), products.end()});
}

MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned t) {
  MonomialIdeal out = MonomialIdeal::unit(a.universe());
  for (unsigned i = 0; i < t; ++i) out = ideal_product(out, a);
  return out;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a.universe(), b.universe());
  std::unordered_set<Monomial, MonomialHash> lcms;
  for (const Monomial& x : a.generators()) {
    for (const Monomial& y : b.generators()) lcms.insert(lcm(x, y));
  }
  return MonomialIdeal::generated_by(a.universe(), {lcms.begin(), lcms.end()});
}

MonomialIdeal ideal_intersection(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  MonomialIdeal out = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) out = ideal_intersection(out, ideals[i]);
  return out;
}

MonomialIdeal ideal_colon(const MonomialIdeal& a, const Monomial& d) {
  if (d.universe() != a.universe()) {
    throw std::invalid_argument("colon by a monomial over a different universe");
  }
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const Monomial& g : a.generators()) gens.push_back(g / gcd(g, d));
  return MonomialIdeal::generated_by(a.universe(), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& d) {
  require_same_universe(a.universe(), d.universe());
  if (d.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  MonomialIdeal out = ideal_colon(a, d.generators().front());
  for (std::size_t i = 1; i < d.size(); ++i) {
    out = ideal_intersection(out, ideal_colon(a, d.generators()[i]));
  }
  return out;
}

bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b) { return a.contains(b); }

bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a.universe(), b.universe());
  return a.generators() == b.generators();
}

unsigned alpha_degree(const MonomialIdeal& a) {
  if (a.is_zero()) throw std::invalid_argument("alpha of the zero ideal");
  return a.generators().front().degree();
}

MonomialIdeal variable_power_ideal(std::size_t universe, const VertexSet& vars, unsigned t) {
  for (Vertex v : vars) {
    if (v < 1 || static_cast<std::size_t>(v) > universe) {
      throw std::out_of_range("variable x" + std::to_string(v) + " outside universe");
    }
  }
  if (t == 0) return MonomialIdeal::unit(universe);
  if (vars.empty()) return MonomialIdeal::zero(universe);
  std::vector<Monomial> gens;
  Monomial current(universe);
  const auto& members = vars.members();
  // Distribute t among the variables (stars and bars).
  auto place = [&](auto&& self, std::size_t index, unsigned remaining) -> void {
    if (index + 1 == members.size()) {
      current.set(members[index] - 1, remaining);
      gens.push_back(current);
      current.set(members[index] - 1, 0);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      current.set(members[index] - 1, e);
      self(self, index + 1, remaining - e);
    }
    current.set(members[index] - 1, 0);
  };
  place(place, 0, t);
  return MonomialIdeal::generated_by(universe, std::move(gens));
}

MonomialIdeal variable_ideal(std::size_t universe, const VertexSet& vars) {
  return variable_power_ideal(universe, vars, 1);
}

std::optional<Monomial> symmetric_difference_witness(const MonomialIdeal& a,
                                                     const MonomialIdeal& b) {
  if (auto m = b.first_missing(a)) return m;
  return a.first_missing(b);
}

MonomialIdeal parse_ideal(const std::string& text, std::size_t universe) {
  std::string body = text;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return std::string{};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
  };
  body = trim(body);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in ideal");
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty() || body == "0") return MonomialIdeal::zero(universe);
  std::vector<Monomial> gens;
  std::stringstream stream(body);
  std::string item;
  while (std::getline(stream, item, ',')) gens.push_back(Monomial::parse(trim(item), universe));
  return MonomialIdeal::generated_by(universe, std::move(gens));
}

}  // namespace edgereg
