#include "edgereg/homology.hpp"

#include <algorithm>
#include <bit>
#include <gmpxx.h>
#include <sstream>
#include <stdexcept>

namespace edgereg {

namespace {

struct Overflow {};

long long checked_step(long long pivot, long long a, long long b, long long c, long long prev) {
  // (pivot * a - b * c) / prev, exact by Bareiss.
  const __int128 value = static_cast<__int128>(pivot) * a - static_cast<__int128>(b) * c;
  const __int128 q = value / prev;
  if (q > INT64_MAX || q < INT64_MIN) throw Overflow{};
  return static_cast<long long>(q);
}

template <typename Int, typename Step>
long long bareiss_rank(std::vector<std::vector<Int>>& m, Step step) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = step(m[rank][c], m[i][j], m[i][c], m[rank][j], prev);
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<long long>(rank);
}

long long rank_rationals(const std::vector<std::vector<long long>>& rows) {
  auto small = rows;
  try {
    return bareiss_rank(small, checked_step);
  } catch (const Overflow&) {
  }
  std::vector<std::vector<mpz_class>> big(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (long long v : rows[i]) big[i].emplace_back(static_cast<long>(v));
  }
  return bareiss_rank(big, [](const mpz_class& pivot, const mpz_class& a, const mpz_class& b,
                              const mpz_class& c, const mpz_class& prev) {
    mpz_class out = pivot * a - b * c;
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), prev.get_mpz_t());
    return out;
  });
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

long long rank_mod_p(const std::vector<std::vector<long long>>& rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t nrows = rows.size(), ncols = rows.front().size();
  std::vector<std::vector<std::uint64_t>> m(nrows, std::vector<std::uint64_t>(ncols));
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      const long long r = rows[i][j] % static_cast<long long>(p);
      m[i][j] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t piv = rank;
    while (piv < nrows && m[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = power_mod(m[rank][c], p - 2, p);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t factor = m[i][c] * inv % p;
      for (std::size_t j = c; j < ncols; ++j) {
        m[i][j] = (m[i][j] + (p - factor) * m[rank][j]) % p;
      }
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return {Kind::kPrime, p};
}

std::string Field::name() const {
  return kind == Kind::kRationals ? "QQ" : "ZZ/" + std::to_string(prime);
}

long long matrix_rank(std::vector<std::vector<long long>> rows, const Field& field) {
  if (field.kind == Field::Kind::kRationals) return rank_rationals(rows);
  return rank_mod_p(rows, field.prime);
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<int> ground) {
  if (ground.size() > kMaxGround) throw std::invalid_argument("ground set too large");
  SimplicialComplex c;
  c.ground_ = std::move(ground);
  c.member_.assign(std::size_t{1} << c.ground_.size(), false);
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<int> ground,
                                                 const std::vector<Face>& facets) {
  SimplicialComplex c = void_complex(std::move(ground));
  const Face full = static_cast<Face>((std::size_t{1} << c.ground_.size()) - 1);
  for (Face f : facets) {
    if ((f & ~full) != 0) throw std::invalid_argument("facet outside the ground set");
    c.member_[f] = true;
  }
  // Close downward, one ground element at a time.
  for (std::size_t bit = 0; bit < c.ground_.size(); ++bit) {
    const Face b = Face{1} << bit;
    for (Face f = full; ; --f) {
      if ((f & b) && c.member_[f]) c.member_[f & ~b] = true;
      if (f == 0) break;
    }
  }
  for (Face f = 0; f <= full; ++f) {
    if (c.member_[f]) c.faces_.push_back(f);
    if (f == full) break;
  }
  std::stable_sort(c.faces_.begin(), c.faces_.end(),
                   [](Face a, Face b) { return std::popcount(a) < std::popcount(b); });
  return c;
}

bool SimplicialComplex::contains(Face f) const {
  return f < member_.size() && member_[f];
}

std::vector<SimplicialComplex::Face> SimplicialComplex::maximal_faces() const {
  std::vector<Face> out;
  for (Face f : faces_) {
    bool maximal = true;
    for (std::size_t bit = 0; bit < ground_.size() && maximal; ++bit) {
      const Face b = Face{1} << bit;
      if (!(f & b) && member_[f | b]) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  return std::popcount(faces_.back()) - 1;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 2), 0);
  for (Face face : faces_) ++f[std::popcount(face)];
  return f;
}

std::string SimplicialComplex::to_string() const {
  if (is_void()) return "void";
  std::ostringstream out;
  out << '<';
  bool first = true;
  for (Face f : maximal_faces()) {
    if (!first) out << ' ';
    first = false;
    out << '{';
    bool inner = true;
    for (std::size_t bit = 0; bit < ground_.size(); ++bit) {
      if (!(f & (Face{1} << bit))) continue;
      if (!inner) out << ',';
      inner = false;
      out << ground_[bit];
    }
    out << '}';
  }
  out << '>';
  return out.str();
}

std::vector<long long> homology_ranks(const SimplicialComplex& c, const Field& field) {
  if (c.is_void()) return {};
  const int top = c.dimension();
  // Faces grouped by dimension; index[f] is the position within its group.
  std::vector<std::vector<SimplicialComplex::Face>> by_dim(static_cast<std::size_t>(top + 2));
  std::vector<int> index(std::size_t{1} << c.ground().size(), -1);
  for (auto f : c.faces()) {
    auto& group = by_dim[std::popcount(f)];
    index[f] = static_cast<int>(group.size());
    group.push_back(f);
  }
  // boundary_rank[d+1] = rank of the map from d-faces to (d-1)-faces, d >= 0.
  std::vector<long long> boundary_rank(static_cast<std::size_t>(top + 3), 0);
  for (int d = 0; d <= top; ++d) {
    const auto& cols = by_dim[d + 1];
    const auto& rows = by_dim[d];
    std::vector<std::vector<long long>> matrix(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int position = 0;
      for (std::size_t bit = 0; bit < c.ground().size(); ++bit) {
        const auto b = SimplicialComplex::Face{1} << bit;
        if (!(cols[j] & b)) continue;
        matrix[index[cols[j] & ~b]][j] = (position % 2 == 0) ? 1 : -1;
        ++position;
      }
    }
    boundary_rank[d + 1] = matrix_rank(std::move(matrix), field);
  }
  std::vector<long long> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int d = -1; d <= top; ++d) {
    const auto faces = static_cast<long long>(by_dim[d + 1].size());
    const long long out_rank = d >= 0 ? boundary_rank[d + 1] : 0;
    const long long in_rank = boundary_rank[d + 2];
    ranks[d + 1] = faces - out_rank - in_rank;
  }
  return ranks;
}

}  // namespace edgereg
