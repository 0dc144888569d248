#include "edgereg/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace edgereg {

namespace {

using Mask = std::uint64_t;

void require_within(const Graph& g, const SearchLimits& limits, const char* what) {
  const int cap = std::min(limits.max_vertices, 30);
  if (g.vertex_count() > cap) {
    std::ostringstream msg;
    msg << what << ": " << g.vertex_count() << " vertices exceeds the search bound of "
        << cap;
    throw BoundExceeded(msg.str());
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u - 1] |= Mask{1} << (e.v - 1);
    adj[e.v - 1] |= Mask{1} << (e.u - 1);
  }
  return adj;
}

VertexSet mask_to_set(Mask m) {
  std::vector<Vertex> members;
  while (m != 0) {
    members.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return VertexSet(std::move(members));
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges)
    : vertex_count_(vertex_count),
      adjacency_(vertex_count < 0 ? 0 : vertex_count),
      matrix_(vertex_count < 0 ? 0 : vertex_count,
              std::vector<bool>(vertex_count < 0 ? 0 : vertex_count, false)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    check_vertex(e.u);
    check_vertex(e.v);
    if (matrix_[e.u - 1][e.v - 1]) {
      throw std::invalid_argument("repeated edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    matrix_[e.u - 1][e.v - 1] = matrix_[e.v - 1][e.u - 1] = true;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > vertex_count_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " +
                            std::to_string(vertex_count_) + "]");
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  return matrix_[a - 1][b - 1];
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v - 1];
}

VertexSet Graph::vertices() const {
  std::vector<Vertex> all(vertex_count_);
  for (int i = 0; i < vertex_count_; ++i) all[i] = i + 1;
  return VertexSet(std::move(all));
}

int Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::string Graph::to_string() const {
  std::ostringstream out;
  out << "n " << vertex_count_;
  for (const Edge& e : edges_) out << "; e " << e.u << ' ' << e.v;
  return out.str();
}

std::string CycleCertificate::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out << ',';
    out << vertices[i];
  }
  out << ')';
  return out.str();
}

void validate_cycle(const Graph& g, const CycleCertificate& c) {
  if (c.length() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  if (c.vertex_set().size() != c.vertices.size()) {
    throw std::invalid_argument("cycle " + c.to_string() + " repeats a vertex");
  }
  for (int i = 0; i < c.length(); ++i) {
    const Vertex a = c.vertices[i];
    const Vertex b = c.vertices[(i + 1) % c.length()];
    if (a < 1 || a > g.vertex_count()) {
      throw std::out_of_range("cycle vertex " + std::to_string(a) + " out of range");
    }
    if (!g.adjacent(a, b)) {
      throw std::invalid_argument("cycle " + c.to_string() + " uses non-edge " +
                                  std::to_string(a) + " " + std::to_string(b));
    }
  }
}

MappedGraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> new_index(g.vertex_count() + 1, 0);
  std::vector<Vertex> origin;
  for (Vertex v : s) {
    if (v < 1 || v > g.vertex_count()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside the graph");
    }
    origin.push_back(v);
    new_index[v] = static_cast<int>(origin.size());
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (new_index[e.u] && new_index[e.v]) edges.emplace_back(new_index[e.u], new_index[e.v]);
  }
  return {Graph(static_cast<int>(origin.size()), edges), std::move(origin)};
}

VertexSet neighborhoods(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    const auto& nbrs = g.neighbors(v);
    out.insert(out.end(), nbrs.begin(), nbrs.end());
  }
  return VertexSet(std::move(out));
}

VertexSet closed_neighborhoods(const Graph& g, const VertexSet& s) {
  return set_union(neighborhoods(g, s), s);
}

CoverEnumeration minimal_vertex_covers(const Graph& g, const SearchLimits& limits) {
  CoverEnumeration result;
  if (g.edge_count() == 0) {
    result.covers.push_back(VertexSet{});
    result.edgeless = true;
    return result;
  }
  require_within(g, limits, "minimal_vertex_covers");
  const int n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  result.alpha = n;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    // Complement must be independent.
    const Mask rest = ~mask & ((Mask{1} << n) - 1);
    bool cover = true;
    for (Mask r = rest; r && cover; r &= r - 1) {
      if (adj[std::countr_zero(r)] & rest) cover = false;
    }
    if (!cover) continue;
    bool minimal = true;
    for (Mask m = mask; m && minimal; m &= m - 1) {
      if ((adj[std::countr_zero(m)] & rest) == 0) minimal = false;
    }
    if (!minimal) continue;
    result.covers.push_back(mask_to_set(mask));
    result.alpha = std::min(result.alpha, std::popcount(mask));
  }
  std::sort(result.covers.begin(), result.covers.end());
  return result;
}

int induced_matching_number(const Graph& g, const SearchLimits& limits) {
  if (g.edge_count() == 0) return 0;
  require_within(g, limits, "induced_matching_number");
  const auto adj = adjacency_masks(g);
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int best = 0;
  std::function<void(int, Mask, int)> search = [&](int next, Mask blocked, int size) {
    best = std::max(best, size);
    for (int i = next; i < m; ++i) {
      if (size + (m - i) <= best) return;
      const Mask a = Mask{1} << (edges[i].u - 1);
      const Mask b = Mask{1} << (edges[i].v - 1);
      if ((blocked & (a | b)) != 0) continue;
      const Mask closed = a | b | adj[edges[i].u - 1] | adj[edges[i].v - 1];
      search(i + 1, blocked | closed, size + 1);
    }
  };
  search(0, 0, 0);
  return best;
}

BipartiteCheck is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n + 1, -1), parent(n + 1, 0), depth(n + 1, 0);
  for (Vertex root = 1; root <= n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop_front();
      for (Vertex b : g.neighbors(a)) {
        if (color[b] == -1) {
          color[b] = 1 - color[a];
          parent[b] = a;
          depth[b] = depth[a] + 1;
          queue.push_back(b);
        } else if (color[b] == color[a]) {
          // Walk both endpoints up to their common ancestor.
          std::vector<Vertex> up_a{a}, up_b{b};
          Vertex x = a, y = b;
          while (depth[x] > depth[y]) up_a.push_back(x = parent[x]);
          while (depth[y] > depth[x]) up_b.push_back(y = parent[y]);
          while (x != y) {
            up_a.push_back(x = parent[x]);
            up_b.push_back(y = parent[y]);
          }
          up_b.pop_back();
          CycleCertificate cycle{up_a};
          cycle.vertices.insert(cycle.vertices.end(), up_b.rbegin(), up_b.rend());
          return {false, cycle};
        }
      }
    }
  }
  return {true, std::nullopt};
}

CycleEnumeration odd_cycles(const Graph& g, const SearchLimits& limits, bool chordless_only) {
  require_within(g, limits, "odd_cycles");
  const int n = g.vertex_count();
  CycleEnumeration result;
  result.on_cycle.assign(n, false);

  // A vertex is on a cycle iff one of its edges is not a bridge.
  for (const Edge& e : g.edges()) {
    std::vector<bool> seen(n + 1, false);
    std::deque<Vertex> queue{e.u};
    seen[e.u] = true;
    while (!queue.empty() && !seen[e.v]) {
      const Vertex a = queue.front();
      queue.pop_front();
      for (Vertex b : g.neighbors(a)) {
        if (seen[b] || (a == e.u && b == e.v)) continue;
        seen[b] = true;
        queue.push_back(b);
      }
    }
    if (seen[e.v]) result.on_cycle[e.u - 1] = result.on_cycle[e.v - 1] = true;
  }

  std::vector<Vertex> path;
  std::vector<bool> used(n + 1, false);
  auto chordless = [&](const std::vector<Vertex>& cyc) {
    const int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i) {
      for (int j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (g.adjacent(cyc[i], cyc[j])) return false;
      }
    }
    return true;
  };
  std::function<void(Vertex)> extend = [&](Vertex start) {
    const Vertex last = path.back();
    for (Vertex next : g.neighbors(last)) {
      if (next == start && path.size() >= 3 && path[1] < last && path.size() % 2 == 1) {
        if (!chordless_only || chordless(path)) result.odd_cycles.push_back({path});
      }
      if (next <= start || used[next]) continue;
      used[next] = true;
      path.push_back(next);
      extend(start);
      path.pop_back();
      used[next] = false;
    }
  };
  for (Vertex start = 1; start <= n; ++start) {
    path = {start};
    used.assign(n + 1, false);
    used[start] = true;
    extend(start);
  }
  std::sort(result.odd_cycles.begin(), result.odd_cycles.end(),
            [](const CycleCertificate& a, const CycleCertificate& b) {
              if (a.length() != b.length()) return a.length() < b.length();
              return a.vertices < b.vertices;
            });
  return result;
}

MappedGraph parallelization(const Graph& g, const std::vector<int>& multiplicity) {
  if (static_cast<int>(multiplicity.size()) != g.vertex_count()) {
    throw std::invalid_argument("parallelization vector length must equal vertex count");
  }
  std::vector<std::vector<Vertex>> copies(g.vertex_count() + 1);
  std::vector<Vertex> origin;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (multiplicity[v - 1] < 0) throw std::invalid_argument("negative multiplicity");
    for (int c = 0; c < multiplicity[v - 1]; ++c) {
      origin.push_back(v);
      copies[v].push_back(static_cast<Vertex>(origin.size()));
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (Vertex a : copies[e.u]) {
      for (Vertex b : copies[e.v]) edges.emplace_back(a, b);
    }
  }
  return {Graph(static_cast<int>(origin.size()), edges), std::move(origin)};
}

Decomposition decomposability(const Graph& g, const SearchLimits& limits) {
  require_within(g, limits, "decomposability");
  const int n = g.vertex_count();
  Decomposition result;
  if (n == 0) return result;
  const auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  // Largest independent subset of every vertex subset; alpha(S) = |S| - mis(S).
  std::vector<std::uint8_t> mis(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full; ++s) {
    const int v = std::countr_zero(s);
    const Mask without = s & ~(Mask{1} << v);
    const Mask closed = (Mask{1} << v) | adj[v];
    mis[s] = std::max<std::uint8_t>(mis[without], 1 + mis[s & ~closed]);
  }
  auto alpha = [&](Mask s) { return std::popcount(s) - mis[s]; };
  result.alpha = alpha(full);
  // Any witnessing partition can be coarsened to two blocks, so bipartitions
  // containing vertex 1 in the first block cover the search.
  for (Mask s = 1; s < full; s += 2) {
    if (alpha(s) + alpha(full & ~s) == result.alpha) {
      result.decomposable = true;
      result.parts = {mask_to_set(s), mask_to_set(full & ~s)};
      break;
    }
  }
  return result;
}

HypothesisReport check_hypotheses(const Graph& g, const CycleCertificate& c,
                                  const SearchLimits& limits) {
  validate_cycle(g, c);
  if (c.length() % 2 == 0) throw std::invalid_argument("designated cycle must be odd");
  HypothesisReport r;
  const VertexSet all = g.vertices();
  r.neighborhood = neighborhoods(g, c.vertex_set());
  r.dominant = r.neighborhood == all;
  r.dominant_closed = closed_neighborhoods(g, c.vertex_set()) == all;
  r.outside = set_difference(all, r.neighborhood);
  r.h = induced_subgraph(g, r.outside);
  const auto cycles = odd_cycles(g, limits);
  r.h_acyclic = std::none_of(r.outside.begin(), r.outside.end(),
                             [&](Vertex v) { return cycles.on_cycle[v - 1]; });
  r.nu_g = induced_matching_number(g, limits);
  r.nu_h = induced_matching_number(r.h.graph, limits);
  r.gap = r.nu_g - r.nu_h;
  r.gap_at_least_3 = r.gap >= 3;
  return r;
}

Graph cycle_graph(int length) {
  std::vector<Edge> edges;
  for (int i = 1; i <= length; ++i) edges.emplace_back(i, i % length + 1);
  return Graph(length, edges);
}

Graph path_graph(int vertices) {
  std::vector<Edge> edges;
  for (int i = 1; i < vertices; ++i) edges.emplace_back(i, i + 1);
  return Graph(vertices, edges);
}

Graph complete_graph(int vertices) {
  std::vector<Edge> edges;
  for (int i = 1; i <= vertices; ++i) {
    for (int j = i + 1; j <= vertices; ++j) edges.emplace_back(i, j);
  }
  return Graph(vertices, edges);
}

}  // namespace edgereg
