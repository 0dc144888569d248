// Command line front end: check, sympow, reg, invariants.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgereg/betti.hpp"
#include "edgereg/harness.hpp"
#include "edgereg/symbolic.hpp"

using namespace edgereg;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::vector<std::string> files;
  unsigned s_min = 1;
  unsigned s_max = 3;
  std::string suites = "all";
  std::string field = "QQ";
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  int max_vertices = 16;
  std::size_t max_generators = 200;
  std::size_t max_multidegrees = 20000;
  int random_graphs = 0;
  int random_max_vertices = 7;
  std::string edge_order = "lex";
  std::string ideal = "symbolic";
  bool timing = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--s-min", o.s_min, "smallest power")->capture_default_str();
  cmd->add_option("--s-max", o.s_max, "largest power")->capture_default_str();
  cmd->add_option("--field", o.field, "QQ or a prime p (ZZ/p)")->capture_default_str();
  cmd->add_option("--format", o.format, "json, csv or text")->capture_default_str();
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--max-vertices", o.max_vertices, "bound on exhaustive searches")->capture_default_str();
  cmd->add_option("--max-generators", o.max_generators, "bound on generators fed to the Betti engine")
      ->capture_default_str();
  cmd->add_option("--max-multidegrees", o.max_multidegrees, "bound on lcm-closure size")->capture_default_str();
}

RunConfig to_config(const Options& o) {
  RunConfig cfg;
  cfg.s_min = o.s_min;
  cfg.s_max = o.s_max;
  cfg.suites = parse_suites(o.suites);
  cfg.field = parse_field(o.field);
  cfg.seed = o.seed;
  cfg.format = parse_format(o.format);
  cfg.out = o.out;
  cfg.max_vertices = o.max_vertices;
  cfg.max_generators = o.max_generators;
  cfg.max_multidegrees = o.max_multidegrees;
  cfg.random_graphs = o.random_graphs;
  cfg.random_max_vertices = o.random_max_vertices;
  cfg.edge_order = o.edge_order;
  cfg.timing = o.timing;
  cfg.validate();
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path + ": write error");
}

std::vector<GraphFile> load_all(const std::vector<std::string>& files) {
  std::vector<GraphFile> out;
  for (const auto& f : files) out.push_back(load_graph(f));
  return out;
}

MonomialIdeal chosen_ideal(EdgeIdealPowers& p, const std::string& which, unsigned s) {
  if (which == "symbolic") return p.symbolic(s);
  if (which == "ordinary") return p.ordinary(s);
  throw std::invalid_argument("--ideal must be symbolic or ordinary");
}

std::string power_name(const std::string& which, unsigned s) {
  return which == "symbolic" ? "I^(" + std::to_string(s) + ")" : "I^" + std::to_string(s);
}

int run_check(const Options& o) {
  const RunConfig cfg = to_config(o);
  auto inputs = load_all(o.files);
  for (auto& g : seeded_inputs(cfg)) inputs.push_back(std::move(g));
  if (inputs.empty()) throw std::invalid_argument("no input graphs (pass files or --random-graphs)");
  const auto reports = run_suite(cfg, inputs);
  write_output(cfg.out, emit_report(reports, cfg));
  return any_failed(reports) ? 1 : 0;
}

int run_sympow(const Options& o) {
  const RunConfig cfg = to_config(o);
  SearchLimits limits;
  limits.max_vertices = cfg.max_vertices;
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& input : load_all(o.files)) {
    EdgeIdealPowers p(input.graph, limits);
    for (unsigned s = cfg.s_min; s <= cfg.s_max; ++s) {
      const auto& ideal = chosen_ideal(p, o.ideal, s);
      Json j;
      j["graph"] = input.name;
      j["graph_hash"] = graph_hash(input.graph);
      j["ideal"] = power_name(o.ideal, s);
      j["s"] = s;
      std::vector<std::string> gens;
      for (const auto& m : ideal.generators()) gens.push_back(m.to_string());
      j["generators"] = gens;
      arr.push_back(j);
      text << input.name << " " << power_name(o.ideal, s) << " (" << gens.size()
           << " generators) = " << ideal.to_string() << "\n";
    }
  }
  write_output(cfg.out, cfg.format == OutputFormat::kJson ? arr.dump(2) + "\n" : text.str());
  return 0;
}

int run_reg(const Options& o) {
  const RunConfig cfg = to_config(o);
  SearchLimits limits;
  limits.max_vertices = cfg.max_vertices;
  BettiOptions options;
  options.field = cfg.field;
  options.max_generators = cfg.max_generators;
  options.max_multidegrees = cfg.max_multidegrees;
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& input : load_all(o.files)) {
    EdgeIdealPowers p(input.graph, limits);
    for (unsigned s = cfg.s_min; s <= cfg.s_max; ++s) {
      const auto table = betti_table(chosen_ideal(p, o.ideal, s), options);
      const int reg = table.regularity();
      Json j;
      j["graph"] = input.name;
      j["graph_hash"] = graph_hash(input.graph);
      j["ideal"] = power_name(o.ideal, s);
      j["s"] = s;
      j["field"] = table.field().name();
      Json rows = Json::array();
      for (const auto& [key, value] : table.graded()) rows.push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
      j["graded_betti"] = rows;
      j["multidegrees_examined"] = table.multidegrees_examined();
      j["reg"] = reg;
      j["reg_quotient"] = reg - 1;
      arr.push_back(j);
      text << input.name << " " << power_name(o.ideal, s) << " over " << table.field().name() << "\n";
      for (const auto& [key, value] : table.graded()) {
        text << "  beta_{" << key.first << "," << key.second << "} = " << value << "\n";
      }
      text << "  reg = " << reg << ", reg(S/I) = " << reg - 1 << "\n";
    }
  }
  write_output(cfg.out, cfg.format == OutputFormat::kJson ? arr.dump(2) + "\n" : text.str());
  return 0;
}

int run_invariants(const Options& o) {
  const RunConfig cfg = to_config(o);
  SearchLimits limits;
  limits.max_vertices = cfg.max_vertices;
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& input : load_all(o.files)) {
    if (input.cycles.empty()) throw std::invalid_argument(input.name + ": no designated odd cycle");
    const auto cd = make_cycle_decomposition(input.graph, input.cycles);
    const auto inv = asymptotic_invariants(cd);
    EdgeIdealPowers p(input.graph, limits);
    Json j;
    j["graph"] = input.name;
    j["graph_hash"] = graph_hash(input.graph);
    j["n"] = cd.n;
    Json seq = Json::array();
    text << input.name << " (n = " << cd.n << ")\n";
    for (unsigned s = cfg.s_min; s <= cfg.s_max; ++s) {
      const unsigned computed = alpha_degree(p.symbolic(s));
      seq.push_back({{"s", s}, {"alpha", computed}, {"closed_form", inv.alpha(s)}});
      text << "  alpha(I^(" << s << ")) = " << computed << ", closed form " << inv.alpha(s) << "\n";
    }
    j["alpha"] = seq;
    j["waldschmidt"] = inv.waldschmidt.to_string();
    j["resurgence"] = inv.resurgence.to_string();
    text << "  Waldschmidt constant " << inv.waldschmidt.to_string() << "\n"
         << "  resurgence " << inv.resurgence.to_string() << "\n";
    arr.push_back(j);
  }
  write_output(cfg.out, cfg.format == OutputFormat::kJson ? arr.dump(2) + "\n" : text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic powers and regularity of edge ideals"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run verification suites");
  check->add_option("files", o.files, "graph files");
  add_common(check, o);
  check->add_option("--suite", o.suites, "comma separated suites or all")->capture_default_str();
  check->add_option("--seed", o.seed, "seed for generated graphs")->capture_default_str();
  check->add_option("--random-graphs", o.random_graphs, "number of seeded random graphs to add")
      ->capture_default_str();
  check->add_option("--random-max-vertices", o.random_max_vertices, "size of seeded random graphs")
      ->capture_default_str();
  check->add_option("--edge-order", o.edge_order, "lex or peeling")->capture_default_str();
  check->add_flag("--timing", o.timing, "record wall-clock time per check");

  auto* sympow = app.add_subcommand("sympow", "print minimal generators of I^(s)");
  sympow->add_option("files", o.files, "graph files")->required();
  add_common(sympow, o);
  sympow->add_option("--ideal", o.ideal, "symbolic or ordinary")->capture_default_str();

  auto* reg = app.add_subcommand("reg", "print the graded Betti table and regularity");
  reg->add_option("files", o.files, "graph files")->required();
  add_common(reg, o);
  reg->add_option("--ideal", o.ideal, "symbolic or ordinary")->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "alpha sequence, Waldschmidt constant and resurgence");
  inv->add_option("files", o.files, "graph files with a designated odd cycle")->required();
  add_common(inv, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(o);
    if (*sympow) return run_sympow(o);
    if (*reg) return run_reg(o);
    if (*inv) return run_invariants(o);
  } catch (const std::exception& e) {
    std::cerr << "edgereg: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
