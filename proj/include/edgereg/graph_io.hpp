// Text format for graphs:
//
//   n <vertex_count>
//   e <u> <v>              one line per edge
//   c <v1> <v2> ... <vk>   optional designated cycle
//
// Blank lines are ignored and '#' starts a comment.

#ifndef EDGEREG_GRAPH_IO_HPP
#define EDGEREG_GRAPH_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_ = 0;
};

struct GraphFile {
  std::string name;
  Graph graph;
  std::vector<CycleCertificate> cycles;
};

GraphFile parse_graph(std::string_view text, const std::string& name = "<input>");

/// Reads and parses a file; the name is the file stem. I/O failures throw
/// std::runtime_error mentioning the path.
GraphFile load_graph(const std::filesystem::path& path);

std::string format_graph(const GraphFile& file);

/// 16 hex digits of FNV-1a over the canonical edge list.
std::string graph_hash(const Graph& g);

}  // namespace edgereg

#endif  // EDGEREG_GRAPH_IO_HPP
