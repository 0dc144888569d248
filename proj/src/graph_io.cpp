#include "edgereg/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace edgereg {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

GraphFile parse_graph(std::string_view text, const std::string& name) {
  int vertex_count = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::pair<int, CycleCertificate>> cycles;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    auto fail = [&](const std::string& why) -> ParseError { return ParseError(name, line_no, why); };
    auto number = [&](std::string_view t) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw fail("expected an integer, got '" + std::string(t) + "'");
      }
      return value;
    };
    auto vertex = [&](std::string_view t) {
      const int v = number(t);
      if (v < 1 || v > vertex_count) {
        throw fail("vertex " + std::to_string(v) + " outside 1.." + std::to_string(vertex_count));
      }
      return v;
    };

    const std::string_view key = tok[0];
    if (key == "n") {
      if (vertex_count >= 0) throw fail("repeated 'n' line");
      if (tok.size() != 2) throw fail("'n' takes exactly one value");
      vertex_count = number(tok[1]);
      if (vertex_count < 0) throw fail("negative vertex count");
      continue;
    }
    if (vertex_count < 0) throw fail("'" + std::string(key) + "' line before the 'n' header");
    if (key == "e") {
      if (tok.size() != 3) throw fail("'e' takes exactly two vertices");
      const int u = vertex(tok[1]), v = vertex(tok[2]);
      if (u == v) throw fail("loop at vertex " + std::to_string(u));
      const Edge e(u, v);
      if (!seen.insert(e).second) {
        throw fail("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
      }
      edges.push_back(e);
    } else if (key == "c") {
      if (tok.size() < 4) throw fail("'c' needs at least three vertices");
      CycleCertificate c;
      for (std::size_t i = 1; i < tok.size(); ++i) c.vertices.push_back(vertex(tok[i]));
      cycles.emplace_back(line_no, std::move(c));
    } else {
      throw fail("unknown line type '" + std::string(key) + "'");
    }
  }
  if (vertex_count < 0) throw ParseError(name, 1, "missing 'n' header");

  GraphFile out;
  out.name = name;
  out.graph = Graph(vertex_count, edges);
  for (auto& [line, c] : cycles) {
    try {
      validate_cycle(out.graph, c);
    } catch (const std::invalid_argument& e) {
      throw ParseError(name, line, e.what());
    }
    out.cycles.push_back(std::move(c));
  }
  return out;
}

GraphFile load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error(path.string() + ": read error");
  GraphFile g = parse_graph(buffer.str(), path.string());
  g.name = path.stem().string();
  return g;
}

std::string format_graph(const GraphFile& file) {
  std::ostringstream out;
  out << "n " << file.graph.vertex_count() << '\n';
  for (const Edge& e : file.graph.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (const auto& c : file.cycles) {
    out << 'c';
    for (Vertex v : c.vertices) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string graph_hash(const Graph& g) {
  std::ostringstream canon;
  canon << "n " << g.vertex_count();
  for (const Edge& e : g.edges()) canon << ';' << e.u << '-' << e.v;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canon.str()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

}  // namespace edgereg
