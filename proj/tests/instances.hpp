// Graph instances shared by the unit tests and the acceptance suite.

#ifndef EDGEREG_TESTS_INSTANCES_HPP
#define EDGEREG_TESTS_INSTANCES_HPP

#include <string>
#include <vector>

#include "edgereg/graph.hpp"

namespace instances {

struct Named {
  std::string name;
  edgereg::Graph graph;
  std::vector<edgereg::CycleCertificate> cycles;
};

inline Named with_edges(std::string name, int n, std::vector<edgereg::Edge> extra,
                        std::vector<edgereg::CycleCertificate> cycles) {
  return {std::move(name), edgereg::Graph(n, extra), std::move(cycles)};
}

inline std::vector<edgereg::Edge> cycle_edges(int length) {
  std::vector<edgereg::Edge> e;
  for (int i = 1; i <= length; ++i) e.emplace_back(i, i % length + 1);
  return e;
}

inline edgereg::CycleCertificate cycle_cert(int length) {
  edgereg::CycleCertificate c;
  for (int i = 1; i <= length; ++i) c.vertices.push_back(i);
  return c;
}

inline Named c5() { return {"C5", edgereg::cycle_graph(5), {cycle_cert(5)}}; }
inline Named c7() { return {"C7", edgereg::cycle_graph(7), {cycle_cert(7)}}; }

/// Three triangles glued along edges: 124, 234, 145.
inline Named bowtie() {
  return with_edges("bowtie", 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 4}, {1, 4}},
                    {{{1, 2, 4}}, {{2, 3, 4}}, {{1, 4, 5}}});
}

/// C5 with the path 1-6-7-8 attached.
inline Named c5_pendant_path() {
  auto e = cycle_edges(5);
  e.insert(e.end(), {{1, 6}, {6, 7}, {7, 8}});
  return with_edges("C5+P3", 8, e, {cycle_cert(5)});
}

/// C5 with two paths 1-6-7 and 1-8-9 at vertex 1.
inline Named c5_two_p3() {
  auto e = cycle_edges(5);
  e.insert(e.end(), {{1, 6}, {6, 7}, {1, 8}, {8, 9}});
  return with_edges("C5+2P3", 9, e, {cycle_cert(5)});
}

/// C7 with the path 1-8-9 attached.
inline Named c7_p3() {
  auto e = cycle_edges(7);
  e.insert(e.end(), {{1, 8}, {8, 9}});
  return with_edges("C7+P3", 9, e, {cycle_cert(7)});
}

/// C5 with pendant vertices 6 at 1 and 7 at 3; the cycle stays dominant.
inline Named c5_pendants() {
  auto e = cycle_edges(5);
  e.insert(e.end(), {{1, 6}, {3, 7}});
  return with_edges("C5+pendants", 7, e, {cycle_cert(5)});
}

}  // namespace instances

#endif  // EDGEREG_TESTS_INSTANCES_HPP
