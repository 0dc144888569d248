// Seeded graph generators and small exhaustive families.
//
// Draws go through mt19937_64 with a local rejection sampler so that a seed
// produces the same graphs on every platform.

#ifndef EDGEREG_RANDOM_GRAPHS_HPP
#define EDGEREG_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

/// Each pair becomes an edge with probability num/den.
Graph random_graph(SeededRng& rng, int vertices, std::uint64_t num, std::uint64_t den);

/// Connected, with vertex count drawn from [min_vertices, max_vertices].
Graph random_connected_graph(SeededRng& rng, int min_vertices, int max_vertices);
/// Connected, built around a planted odd cycle of random length plus edges
/// drawn with probability 1/4.
Graph random_nonbipartite_graph(SeededRng& rng, int min_vertices, int max_vertices);
Graph random_forest(SeededRng& rng, int min_vertices, int max_vertices);

/// Lexicographically least edge list over all relabellings.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class of connected bipartite graphs on
/// 2..max_vertices vertices.
std::vector<Graph> connected_bipartite_graphs(int max_vertices);

}  // namespace edgereg

#endif  // EDGEREG_RANDOM_GRAPHS_HPP
