#include "edgereg/random_graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace edgereg {

namespace {

constexpr int kMaxCanonical = 8;
constexpr int kMaxAttempts = 10000;

std::vector<Edge> relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.emplace_back(perm[e.u - 1], perm[e.v - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> shuffled(SeededRng& rng, int n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return perm;
}

template <typename Accept>
Graph draw_until(SeededRng& rng, int lo, int hi, Accept accept) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int n = rng.between(lo, hi);
    Graph g = random_graph(rng, n, 1, 2);
    if (accept(g)) return g;
  }
  throw std::runtime_error("random graph generator: no acceptable graph drawn");
}

}  // namespace

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SeededRng::below: empty range");
  const std::uint64_t limit = engine_.max() - engine_.max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

int SeededRng::between(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("SeededRng::between: empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n + 1, false);
  std::vector<Vertex> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_forest(const Graph& g) {
  std::vector<Vertex> parent(g.vertex_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Graph random_graph(SeededRng& rng, int vertices, std::uint64_t num, std::uint64_t den) {
  std::vector<Edge> edges;
  for (int i = 1; i <= vertices; ++i) {
    for (int j = i + 1; j <= vertices; ++j) {
      if (rng.chance(num, den)) edges.emplace_back(i, j);
    }
  }
  return Graph(vertices, edges);
}

Graph random_connected_graph(SeededRng& rng, int min_vertices, int max_vertices) {
  return draw_until(rng, std::max(min_vertices, 2), max_vertices,
                    [](const Graph& g) { return is_connected(g); });
}

Graph random_nonbipartite_graph(SeededRng& rng, int min_vertices, int max_vertices) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int n = rng.between(std::max(min_vertices, 3), max_vertices);
    const int length = 3 + 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 3) / 2) + 1));
    const auto perm = shuffled(rng, n);
    std::set<Edge> edges;
    for (int i = 0; i < length; ++i) edges.emplace(perm[i], perm[(i + 1) % length]);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (rng.chance(1, 4)) edges.emplace(i, j);
      }
    }
    Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random graph generator: no acceptable graph drawn");
}

Graph random_forest(SeededRng& rng, int min_vertices, int max_vertices) {
  const int n = rng.between(std::max(min_vertices, 1), max_vertices);
  const auto perm = shuffled(rng, n);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    if (rng.chance(3, 4)) {
      edges.emplace_back(perm[i], perm[rng.below(static_cast<std::uint64_t>(i))]);
    }
  }
  return Graph(n, edges);
}

Graph canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCanonical) {
    throw BoundExceeded("canonical_form: " + std::to_string(n) + " vertices exceeds " +
                        std::to_string(kMaxCanonical));
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Edge> best = g.edges();
  do {
    auto candidate = relabel(g, perm);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Graph(n, best);
}

std::vector<Graph> connected_bipartite_graphs(int max_vertices) {
  if (max_vertices > kMaxCanonical - 1) {
    throw BoundExceeded("connected_bipartite_graphs: more than " +
                        std::to_string(kMaxCanonical - 1) + " vertices");
  }
  std::vector<Graph> out;
  for (int n = 2; n <= max_vertices; ++n) {
    std::vector<Edge> pairs;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    }
    std::set<std::vector<Edge>> classes;
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      // A connected graph on n vertices has at least n-1 edges.
      if (std::popcount(mask) < n - 1) continue;
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1u) edges.push_back(pairs[k]);
      }
      const Graph g(n, edges);
      if (!is_connected(g) || !is_bipartite(g).bipartite) continue;
      classes.insert(canonical_form(g).edges());
    }
    for (const auto& edges : classes) out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace edgereg
