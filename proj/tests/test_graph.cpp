#include <algorithm>
#include <random>

#include <catch_amalgamated.hpp>

#include "edgereg/graph.hpp"
#include "instances.hpp"

using namespace edgereg;

namespace {

bool is_cover(const Graph& g, unsigned mask) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return (mask >> (e.u - 1) & 1u) || (mask >> (e.v - 1) & 1u);
  });
}

// Covers straight from the definition: every edge hit, no vertex removable.
std::vector<VertexSet> covers_by_definition(const Graph& g) {
  std::vector<VertexSet> out;
  const unsigned n = static_cast<unsigned>(g.vertex_count());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!is_cover(g, mask)) continue;
    bool minimal = true;
    for (unsigned v = 0; v < n && minimal; ++v) {
      if ((mask >> v & 1u) && is_cover(g, mask & ~(1u << v))) minimal = false;
    }
    if (!minimal) continue;
    std::vector<Vertex> members;
    for (unsigned v = 0; v < n; ++v) {
      if (mask >> v & 1u) members.push_back(static_cast<Vertex>(v + 1));
    }
    out.emplace_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Induced matching number over all edge subsets.
int induced_matching_by_subsets(const Graph& g) {
  const auto& edges = g.edges();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask >> i & 1u) chosen.push_back(edges[i]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
        for (Vertex a : {chosen[i].u, chosen[i].v}) {
          for (Vertex b : {chosen[j].u, chosen[j].v}) {
            if (a == b || g.adjacent(a, b)) ok = false;
          }
        }
      }
    }
    if (ok) best = std::max(best, static_cast<int>(chosen.size()));
  }
  return best;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS(Graph(3, {{1, 4}}));
  const Graph g(4, {{3, 4}, {1, 2}});
  CHECK(g.edges().front() == Edge(1, 2));
  CHECK(g.adjacent(4, 3));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK(g.degree(1) == 1);
}

TEST_CASE("minimal vertex covers of C5") {
  const auto covers = minimal_vertex_covers(cycle_graph(5));
  CHECK(covers.alpha == 3);
  CHECK(covers.covers.size() == 5);
  CHECK(std::find(covers.covers.begin(), covers.covers.end(), VertexSet{1, 3, 4}) !=
        covers.covers.end());
}

TEST_CASE("edgeless graph has the empty cover flagged") {
  const auto covers = minimal_vertex_covers(Graph(3, {}));
  CHECK(covers.edgeless);
  REQUIRE(covers.covers.size() == 1);
  CHECK(covers.covers.front().empty());
}

TEST_CASE("cover enumeration refuses graphs beyond the bound") {
  CHECK_THROWS_AS(minimal_vertex_covers(cycle_graph(18)), BoundExceeded);
  CHECK_NOTHROW(minimal_vertex_covers(cycle_graph(18), SearchLimits{18}));
}

TEST_CASE("covers and induced matchings agree with definitions on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = random_graph(rng, n, 0.45);
    auto covers = minimal_vertex_covers(g).covers;
    std::sort(covers.begin(), covers.end());
    if (g.edge_count() > 0) CHECK(covers == covers_by_definition(g));
    if (g.edge_count() <= 14) CHECK(induced_matching_number(g) == induced_matching_by_subsets(g));
  }
}

TEST_CASE("induced matching numbers of the named instances") {
  CHECK(induced_matching_number(cycle_graph(5)) == 1);
  CHECK(induced_matching_number(cycle_graph(7)) == 2);
  CHECK(induced_matching_number(path_graph(6)) == 2);
  CHECK(induced_matching_number(instances::c5_two_p3().graph) == 3);
  CHECK(induced_matching_number(instances::c7_p3().graph) == 3);
}

TEST_CASE("bipartiteness with odd cycle certificate") {
  CHECK(is_bipartite(cycle_graph(6)).bipartite);
  const auto odd = is_bipartite(instances::c5_pendant_path().graph);
  REQUIRE_FALSE(odd.bipartite);
  REQUIRE(odd.odd_cycle);
  CHECK(odd.odd_cycle->length() == 5);
  CHECK_NOTHROW(validate_cycle(instances::c5_pendant_path().graph, *odd.odd_cycle));
}

TEST_CASE("odd cycles of the bowtie") {
  const auto bow = instances::bowtie();
  const auto chordless = odd_cycles(bow.graph);
  REQUIRE(chordless.odd_cycles.size() == 3);
  for (const auto& c : chordless.odd_cycles) CHECK(c.length() == 3);
  const auto all = odd_cycles(bow.graph, {}, false);
  CHECK(all.odd_cycles.size() == 4);
}

TEST_CASE("vertices on cycles") {
  const auto g = instances::c5_two_p3().graph;
  const auto cycles = odd_cycles(g);
  for (Vertex v = 1; v <= 5; ++v) CHECK(cycles.on_cycle[v - 1]);
  for (Vertex v = 6; v <= 9; ++v) CHECK_FALSE(cycles.on_cycle[v - 1]);
}

TEST_CASE("cycle validation") {
  const Graph g = cycle_graph(5);
  CHECK_NOTHROW(validate_cycle(g, CycleCertificate{{1, 2, 3, 4, 5}}));
  CHECK_THROWS_AS(validate_cycle(g, CycleCertificate{{1, 2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_cycle(g, CycleCertificate{{1, 2, 3, 2, 1}}), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps the vertex map") {
  const auto m = induced_subgraph(cycle_graph(5), VertexSet{2, 3, 5});
  CHECK(m.graph.vertex_count() == 3);
  CHECK(m.graph.edge_count() == 1);
  CHECK(m.origin == std::vector<Vertex>{2, 3, 5});
}

TEST_CASE("parallelization duplicates neighbourhoods") {
  const auto p = parallelization(path_graph(3), {1, 2, 0});
  CHECK(p.graph.vertex_count() == 3);
  CHECK(p.graph.edge_count() == 2);
  CHECK_FALSE(p.graph.adjacent(2, 3));
  CHECK(p.origin == std::vector<Vertex>{1, 2, 2});
}

TEST_CASE("decomposability") {
  // Two disjoint triangles decompose along their components.
  const Graph two(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  const auto d = decomposability(two);
  CHECK(d.decomposable);
  CHECK(d.alpha == 4);
  CHECK_FALSE(decomposability(cycle_graph(5)).decomposable);
}

TEST_CASE("hypotheses of the regularity theorem") {
  const auto inst = instances::c5_two_p3();
  const auto h = check_hypotheses(inst.graph, inst.cycles.front());
  CHECK_FALSE(h.dominant);
  CHECK(h.outside == VertexSet{7, 9});
  CHECK(h.h_acyclic);
  CHECK(h.nu_g == 3);
  CHECK(h.nu_h == 0);
  CHECK(h.gap_at_least_3);

  const auto c5 = instances::c5();
  const auto hc = check_hypotheses(c5.graph, c5.cycles.front());
  CHECK(hc.dominant);
  CHECK_FALSE(hc.gap_at_least_3);

  const auto pend = instances::c5_pendants();
  CHECK(check_hypotheses(pend.graph, pend.cycles.front()).dominant);
}
