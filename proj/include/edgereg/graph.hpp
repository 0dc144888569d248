// Finite simple graphs and the combinatorial invariants consumed by the
// edge-ideal computations: vertex covers, induced matchings, odd cycles,
// parallelization and decomposability.
//
// Vertices are 1-based and contiguous. All exhaustive searches are guarded by
// SearchLimits and throw BoundExceeded instead of truncating.

#ifndef EDGEREG_GRAPH_HPP
#define EDGEREG_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgereg {

using Vertex = int;

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchLimits {
  int max_vertices = 16;
};

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::string to_string() const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, repeated edges, or endpoints
  /// outside [1, vertex_count].
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return vertex_count_; }
  /// Edges in canonical (u, v) ascending order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(Vertex a, Vertex b) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  VertexSet vertices() const;
  /// Position of an edge in edges(), or -1.
  int edge_index(const Edge& e) const;

  std::string to_string() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<bool>> matrix_;
};

/// Subgraph together with the new -> old vertex map (origin[i-1] is the
/// parent vertex of new vertex i).
struct MappedGraph {
  Graph graph;
  std::vector<Vertex> origin;
};

struct CycleCertificate {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const { return VertexSet(vertices); }
  std::string to_string() const;

  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

/// Throws std::invalid_argument unless c is a simple cycle of g.
void validate_cycle(const Graph& g, const CycleCertificate& c);

MappedGraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Union of the open neighbourhoods of the members of s.
VertexSet neighborhoods(const Graph& g, const VertexSet& s);
/// s together with its neighbourhood.
VertexSet closed_neighborhoods(const Graph& g, const VertexSet& s);

struct CoverEnumeration {
  std::vector<VertexSet> covers;
  int alpha = 0;
  bool edgeless = false;
};

CoverEnumeration minimal_vertex_covers(const Graph& g, const SearchLimits& limits = {});

int induced_matching_number(const Graph& g, const SearchLimits& limits = {});

struct BipartiteCheck {
  bool bipartite = true;
  std::optional<CycleCertificate> odd_cycle;
};

BipartiteCheck is_bipartite(const Graph& g);

struct CycleEnumeration {
  std::vector<CycleCertificate> odd_cycles;
  /// on_cycle[v-1] is true when v lies on some simple cycle (odd or even).
  std::vector<bool> on_cycle;
};

/// Odd simple cycles, each listed once starting from its smallest vertex.
/// With chordless_only the list is restricted to induced cycles.
CycleEnumeration odd_cycles(const Graph& g, const SearchLimits& limits = {},
                            bool chordless_only = true);

MappedGraph parallelization(const Graph& g, const std::vector<int>& multiplicity);

struct Decomposition {
  bool decomposable = false;
  int alpha = 0;
  std::vector<VertexSet> parts;
};

Decomposition decomposability(const Graph& g, const SearchLimits& limits = {});

struct HypothesisReport {
  bool dominant = false;         // N_G(V(C)) = V(G), open neighbourhoods
  bool dominant_closed = false;  // same with V(C) added explicitly
  VertexSet neighborhood;
  VertexSet outside;             // V(G) minus the neighbourhood
  MappedGraph h;                 // induced on `outside`
  bool h_acyclic = false;        // no vertex of H on a cycle of G
  int nu_g = 0;
  int nu_h = 0;
  int gap = 0;
  bool gap_at_least_3 = false;
};

HypothesisReport check_hypotheses(const Graph& g, const CycleCertificate& c,
                                  const SearchLimits& limits = {});

// Named families used by tests, the CLI and the acceptance suite.
Graph cycle_graph(int length);
Graph path_graph(int vertices);
Graph complete_graph(int vertices);

}  // namespace edgereg

#endif  // EDGEREG_GRAPH_HPP
