#include <map>
#include <random>

#include <catch_amalgamated.hpp>

#include "edgereg/homology.hpp"

using namespace edgereg;
using Face = SimplicialComplex::Face;

namespace {

Face face(std::initializer_list<int> positions) {
  Face f = 0;
  for (int p : positions) f |= Face{1} << p;
  return f;
}

std::vector<int> ground(int n) {
  std::vector<int> g;
  for (int i = 1; i <= n; ++i) g.push_back(i);
  return g;
}

// Six-vertex real projective plane.
SimplicialComplex projective_plane() {
  const std::vector<std::initializer_list<int>> triangles = {
      {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
      {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
  std::vector<Face> facets;
  for (const auto& t : triangles) facets.push_back(face(t));
  return SimplicialComplex::from_facets(ground(6), facets);
}

}  // namespace

TEST_CASE("void and irrelevant complexes") {
  CHECK(homology_ranks(SimplicialComplex::void_complex(ground(3))).empty());
  const auto irrelevant = SimplicialComplex::from_facets(ground(3), {0});
  CHECK(irrelevant.dimension() == -1);
  CHECK(homology_ranks(irrelevant) == std::vector<long long>{1});
}

TEST_CASE("spheres and points") {
  const auto point = SimplicialComplex::from_facets(ground(1), {face({0})});
  CHECK(homology_ranks(point) == std::vector<long long>{0, 0});
  const auto two_points = SimplicialComplex::from_facets(ground(2), {face({0}), face({1})});
  CHECK(homology_ranks(two_points) == std::vector<long long>{0, 1});
  const auto circle = SimplicialComplex::from_facets(
      ground(3), {face({0, 1}), face({1, 2}), face({0, 2})});
  CHECK(homology_ranks(circle) == std::vector<long long>{0, 0, 1});
  const auto sphere = SimplicialComplex::from_facets(
      ground(4), {face({0, 1, 2}), face({0, 1, 3}), face({0, 2, 3}), face({1, 2, 3})});
  CHECK(homology_ranks(sphere) == std::vector<long long>{0, 0, 0, 1});
  CHECK(sphere.f_vector() == std::vector<std::size_t>{1, 4, 6, 4});
  CHECK(sphere.maximal_faces().size() == 4);
}

TEST_CASE("projective plane distinguishes the coefficient field") {
  const auto rp2 = projective_plane();
  REQUIRE(rp2.f_vector() == std::vector<std::size_t>{1, 6, 15, 10});
  CHECK(homology_ranks(rp2, Field::rationals()) == std::vector<long long>{0, 0, 0, 0});
  CHECK(homology_ranks(rp2, Field::prime_field(2)) == std::vector<long long>{0, 0, 1, 1});
  CHECK(homology_ranks(rp2, Field::prime_field(3)) == std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("field validation and names") {
  CHECK_THROWS(Field::prime_field(4));
  CHECK(Field::prime_field(7).name() == "ZZ/7");
  CHECK(Field::rationals().name() == "QQ");
}

TEST_CASE("reduced Euler characteristic matches the f-vector") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 5;
    std::uniform_int_distribution<Face> draw(1, (Face{1} << n) - 1);
    std::vector<Face> facets;
    for (int k = 0; k < 2 + trial % 4; ++k) facets.push_back(draw(rng));
    const auto c = SimplicialComplex::from_facets(ground(n), facets);
    const auto ranks = homology_ranks(c);
    const auto f = c.f_vector();
    long long chi_h = 0, chi_f = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) chi_h += (i % 2 ? -1 : 1) * ranks[i];
    for (std::size_t i = 0; i < f.size(); ++i) chi_f += (i % 2 ? -1 : 1) * static_cast<long long>(f[i]);
    CHECK(chi_h == chi_f);
    // A cone over any complex is acyclic.
    std::vector<Face> cone;
    for (Face x : facets) cone.push_back(x | (Face{1} << n));
    const auto coned = SimplicialComplex::from_facets(ground(n + 1), cone);
    for (long long r : homology_ranks(coned)) CHECK(r == 0);
  }
}

TEST_CASE("matrix rank falls back to big integers") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long long> draw(-1000000, 1000000);
  for (int trial = 0; trial < 10; ++trial) {
    // 7x7 matrix of rank 3 with entries near 1e12.
    std::vector<std::vector<long long>> a(7, std::vector<long long>(3)), b(3, std::vector<long long>(7));
    for (auto& row : a) for (auto& x : row) x = draw(rng);
    for (auto& row : b) for (auto& x : row) x = draw(rng);
    std::vector<std::vector<long long>> m(7, std::vector<long long>(7, 0));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
    CHECK(matrix_rank(m, Field::rationals()) == 3);
    CHECK(matrix_rank(m, Field::prime_field(1000003)) <= 3);
  }
  CHECK(matrix_rank({{2, 4}, {1, 2}}, Field::rationals()) == 1);
  CHECK(matrix_rank({{2, 0}, {0, 2}}, Field::prime_field(2)) == 0);
  CHECK(matrix_rank({}, Field::rationals()) == 0);
}
