// Finite simplicial complexes on small ground sets and their reduced homology
// over Q (fraction-free integer elimination) or a prime field.

#ifndef EDGEREG_HOMOLOGY_HPP
#define EDGEREG_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace edgereg {

struct Field {
  enum class Kind { kRationals, kPrime };
  Kind kind = Kind::kRationals;
  std::uint32_t prime = 32003;

  static Field rationals() { return {}; }
  static Field prime_field(std::uint32_t p);
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Faces are bitmasks over positions in ground(); bit j stands for ground()[j].
/// The void complex has no faces; the irrelevant complex has only the empty face.
class SimplicialComplex {
 public:
  using Face = std::uint32_t;
  static constexpr std::size_t kMaxGround = 20;

  static SimplicialComplex void_complex(std::vector<int> ground);
  /// Downward closure of the given facets.
  static SimplicialComplex from_facets(std::vector<int> ground, const std::vector<Face>& facets);

  const std::vector<int>& ground() const { return ground_; }
  bool is_void() const { return faces_.empty(); }
  bool contains(Face f) const;
  /// All faces, ordered by size then value.
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<Face> maximal_faces() const;
  int dimension() const;
  /// f[d+1] is the number of d-dimensional faces, d >= -1.
  std::vector<std::size_t> f_vector() const;

  std::string to_string() const;

 private:
  std::vector<int> ground_;
  std::vector<Face> faces_;
  std::vector<bool> member_;
};

/// ranks[d+1] = dim H̃_d for d = -1 .. dimension(); empty for the void complex.
std::vector<long long> homology_ranks(const SimplicialComplex& c, const Field& field = {});

/// Rank of an integer matrix (rows of equal length) over the field.
long long matrix_rank(std::vector<std::vector<long long>> rows, const Field& field);

}  // namespace edgereg

#endif  // EDGEREG_HOMOLOGY_HPP
