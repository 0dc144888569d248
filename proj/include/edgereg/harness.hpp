// Suite orchestration and report serialization behind the command line tool.

#ifndef EDGEREG_HARNESS_HPP
#define EDGEREG_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "edgereg/graph_io.hpp"
#include "edgereg/homology.hpp"
#include "edgereg/report.hpp"

namespace edgereg {

enum class OutputFormat { kJson, kCsv, kText };

struct RunConfig {
  unsigned s_min = 1;
  unsigned s_max = 3;
  /// Expanded suite names in canonical order.
  std::vector<std::string> suites;
  Field field;
  int max_vertices = 16;
  std::size_t max_generators = 200;
  std::size_t max_multidegrees = 20000;
  std::uint64_t seed = 1;
  /// Seeded connected graphs appended to the inputs.
  int random_graphs = 0;
  int random_max_vertices = 7;
  std::string edge_order = "lex";  // lex | peeling
  OutputFormat format = OutputFormat::kJson;
  std::string out;
  bool timing = false;

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

const std::vector<std::string>& known_suites();
/// Comma separated names, "all" expands to every suite.
std::vector<std::string> parse_suites(const std::string& list);
OutputFormat parse_format(const std::string& name);
std::string to_string(OutputFormat f);
/// "QQ", "rationals", "ZZ/p" or a bare prime p.
Field parse_field(const std::string& name);

std::vector<GraphFile> seeded_inputs(const RunConfig& cfg);

std::vector<VerificationReport> run_suite(const RunConfig& cfg, const std::vector<GraphFile>& inputs);

std::string emit_report(const std::vector<VerificationReport>& reports, const RunConfig& cfg);

bool any_failed(const std::vector<VerificationReport>& reports);

}  // namespace edgereg

#endif  // EDGEREG_HARNESS_HPP
