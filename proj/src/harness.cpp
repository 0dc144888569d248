#include "edgereg/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "edgereg/betti.hpp"
#include "edgereg/even_connection.hpp"
#include "edgereg/random_graphs.hpp"
#include "edgereg/symbolic.hpp"

namespace edgereg {

namespace {

using Json = nlohmann::ordered_json;

bool wants(const RunConfig& cfg, const std::string& suite) {
  return std::find(cfg.suites.begin(), cfg.suites.end(), suite) != cfg.suites.end();
}

VerificationReport error_report(const std::string& suite, const std::string& check,
                                 std::optional<int> s, const std::string& what) {
  auto r = make_report(suite, check, s);
  r.fail("error: " + what).witness("error", what);
  return r;
}

// Per-input state shared by the suites.
class Context {
 public:
  Context(const RunConfig& cfg, const GraphFile& input) : cfg_(cfg), input_(input) {
    limits_.max_vertices = cfg.max_vertices;
    options_.field = cfg.field;
    options_.max_generators = cfg.max_generators;
    options_.max_multidegrees = cfg.max_multidegrees;
    instance_.graph = input.name;
    instance_.graph_hash = graph_hash(input.graph);
    for (const auto& c : input.cycles) instance_.cycles.push_back(c.to_string());
  }

  const Graph& graph() const { return input_.graph; }
  const SearchLimits& limits() const { return limits_; }
  const BettiOptions& options() const { return options_; }

  EdgeIdealPowers& powers() {
    if (!powers_) powers_.emplace(input_.graph, limits_);
    return *powers_;
  }

  bool designated() const { return !input_.cycles.empty(); }

  /// Throws std::invalid_argument when the designation is unusable.
  const CycleDecomposition& decomposition() {
    if (!cd_) cd_ = make_cycle_decomposition(input_.graph, input_.cycles);
    return *cd_;
  }

  const HypothesisReport& hypotheses() {
    if (!hyp_) hyp_ = check_hypotheses(input_.graph, input_.cycles.front(), limits_);
    return *hyp_;
  }

  void add(VerificationReport r) {
    const auto params = std::move(r.instance.params);
    const auto s = r.instance.s;
    r.instance = instance_;
    r.instance.s = s;
    r.instance.params = params;
    out_.push_back(std::move(r));
  }

  /// Runs one check, turning bound violations into skips and unexpected
  /// exceptions into failures.
  void run(const std::string& suite, const std::string& check, std::optional<int> s,
           const std::function<VerificationReport()>& body) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    try {
      r = body();
    } catch (const BoundExceeded& e) {
      r = make_report(suite, check, s);
      r.skip(std::string("bound exceeded: ") + e.what());
    } catch (const std::exception& e) {
      r = error_report(suite, check, s, e.what());
    }
    if (cfg_.timing) {
      r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    add(std::move(r));
  }

  void skip(const std::string& suite, const std::string& check, std::optional<int> s,
            const std::string& why) {
    auto r = make_report(suite, check, s);
    r.skip(why);
    add(std::move(r));
  }

  /// Null when the cycle data is available, otherwise the reason to skip.
  std::optional<std::string> cycle_gate() {
    if (!designated()) return "no designated odd cycle";
    try {
      decomposition();
    } catch (const std::invalid_argument& e) {
      return std::string("invalid cycle designation: ") + e.what();
    }
    return std::nullopt;
  }

  std::vector<VerificationReport> take() { return std::move(out_); }

 private:
  const RunConfig& cfg_;
  const GraphFile& input_;
  SearchLimits limits_;
  BettiOptions options_;
  Instance instance_;
  std::optional<EdgeIdealPowers> powers_;
  std::optional<CycleDecomposition> cd_;
  std::optional<HypothesisReport> hyp_;
  std::vector<VerificationReport> out_;
};

template <typename PerS>
void for_each_s(const RunConfig& cfg, PerS body) {
  for (unsigned s = cfg.s_min; s <= cfg.s_max; ++s) body(s);
}

void decomposition_suite(const RunConfig& cfg, Context& ctx) {
  if (const auto why = ctx.cycle_gate()) {
    for_each_s(cfg, [&](unsigned s) { ctx.skip("decomposition", "symbolic-power-sum", s, *why); });
    return;
  }
  for_each_s(cfg, [&](unsigned s) {
    const int si = static_cast<int>(s);
    ctx.run("decomposition", "symbolic-power-sum", si,
            [&] { return verify_decomposition(ctx.powers(), ctx.decomposition(), s); });
    ctx.run("decomposition", "symbolic-membership-cross-check", si, [&] {
      auto& p = ctx.powers();
      return cross_check_symbolic_power(p.covers(), p.symbolic(s), s);
    });
  });
}

void m2s_suite(const RunConfig& cfg, Context& ctx) {
  const auto why = ctx.cycle_gate();
  for_each_s(cfg, [&](unsigned s) {
    if (why) return ctx.skip("m2s", "symbolic-power-cap-m2s", s, *why);
    ctx.run("m2s", "symbolic-power-cap-m2s", static_cast<int>(s),
            [&] { return m2s_identities(ctx.powers(), ctx.decomposition(), s); });
  });
}

void invariants_suite(const RunConfig& cfg, Context& ctx) {
  const auto why = ctx.cycle_gate();
  for_each_s(cfg, [&](unsigned s) {
    if (why) return ctx.skip("invariants", "alpha-closed-form", s, *why);
    ctx.run("invariants", "alpha-closed-form", static_cast<int>(s),
            [&] { return verify_alpha(ctx.powers(), ctx.decomposition(), s); });
  });
}

void containment_suite(const RunConfig& cfg, Context& ctx) {
  const auto why = ctx.cycle_gate();
  for_each_s(cfg, [&](unsigned s) {
    if (why) return ctx.skip("containment", "alpha-criterion", s, *why);
    for (unsigned t = cfg.s_min; t <= cfg.s_max; ++t) {
      ctx.run("containment", "alpha-criterion", static_cast<int>(s), [&] {
        const auto& cd = ctx.decomposition();
        const auto c = containment_check(ctx.powers(), cd, s, t);
        const Fraction rho = asymptotic_invariants(cd).resurgence;
        auto r = make_report("containment", "alpha-criterion", static_cast<int>(s));
        r.instance.params.emplace_back("t", std::to_string(t));
        r.detail("contained", c.contained ? "true" : "false");
        r.detail("alpha criterion predicts containment", c.alpha_criterion ? "false" : "true");
        if (c.witness) r.witness("monomial outside I^t", c.witness->to_string());
        if (!c.agree) {
          r.fail("direct containment disagrees with the alpha criterion");
        } else if (!c.contained && rho < Fraction(s, t)) {
          r.fail("non-containment with s/t above the resurgence " + rho.to_string());
        }
        return r;
      });
    }
  });
}

void banerjee_suite(const RunConfig& cfg, Context& ctx) {
  for_each_s(cfg, [&](unsigned s) {
    ctx.run("banerjee", "even-connection-colon", static_cast<int>(s),
            [&] { return verify_banerjee(ctx.powers(), s); });
  });
}

void orderings_suite(const RunConfig& cfg, Context& ctx) {
  const auto why = ctx.cycle_gate();
  std::optional<EdgeOrder> order;
  std::string order_problem;
  if (cfg.edge_order == "lex") {
    order = EdgeOrder::lex(ctx.graph());
  } else if (why) {
    order_problem = *why;
  } else {
    auto lp = leaf_peeling(ctx.graph(), ctx.decomposition());
    if (lp.ok) {
      order = lp.order;
    } else {
      order_problem = "no leaf-peeling order: " + lp.reason;
    }
  }
  for_each_s(cfg, [&](unsigned s) {
    const int si = static_cast<int>(s);
    for (unsigned r = 0; r <= 1; ++r) {
      if (!order) {
        ctx.skip("orderings", "order-lemma", si, order_problem);
        continue;
      }
      ctx.run("orderings", "order-lemma", si,
              [&] { return verify_order_lemma(ctx.graph(), *order, s, r); });
    }
    if (why) {
      ctx.skip("orderings", "leaf-order-lemma", si, *why);
      ctx.skip("orderings", "colon-chain", si, *why);
      return;
    }
    ctx.run("orderings", "leaf-order-lemma", si,
            [&] { return verify_leaf_lemma(ctx.powers(), ctx.decomposition(), s); });
    std::vector<MonomialIdeal> colons;
    bool chain_passed = false;
    ctx.run("orderings", "colon-chain", si, [&] {
      auto chain = verify_colon_chain(ctx.powers(), ctx.decomposition(), s);
      colons = std::move(chain.colons);
      chain_passed = chain.report.passed();
      return chain.report;
    });
    if (ctx.decomposition().cycles.size() != 1) {
      ctx.skip("orderings", "colon-upper-bound", si, "more than one designated cycle");
    } else if (!chain_passed) {
      ctx.skip("orderings", "colon-upper-bound", si, "colon chain did not pass");
    } else {
      ctx.run("orderings", "colon-upper-bound", si, [&] {
        const int bound = ctx.hypotheses().nu_h;
        auto r = colon_upper_bound_check(colons, bound, ctx.options());
        r.suite = "orderings";
        r.instance.s = si;
        r.instance.params.emplace_back("bound", std::to_string(bound));
        return r;
      });
    }
  });
}

/// Null when reg(I^(s)) = reg(I^s) is asserted for this input.
std::optional<std::string> equality_gate(Context& ctx) {
  if (is_bipartite(ctx.graph()).bipartite) return std::nullopt;
  if (const auto why = ctx.cycle_gate()) return why;
  const auto& cd = ctx.decomposition();
  if (cd.all_dominant) return std::nullopt;
  if (cd.cycles.size() != 1) return "designated cycles are not all dominant";
  const auto& h = ctx.hypotheses();
  if (!h.h_acyclic) return "H is not a forest";
  if (!h.gap_at_least_3) return "ν(G)−ν(H) < 3";
  return std::nullopt;
}

void regularity_suite(const RunConfig& cfg, Context& ctx) {
  if (is_forest(ctx.graph())) {
    ctx.run("regularity", "forest-reg-equals-induced-matching", std::nullopt,
            [&] { return forest_regularity_check(ctx.graph(), ctx.options(), ctx.limits()); });
  }
  std::optional<std::string> gate;
  try {
    gate = equality_gate(ctx);
  } catch (const BoundExceeded& e) {
    gate = std::string("bound exceeded: ") + e.what();
  }
  for_each_s(cfg, [&](unsigned s) {
    const int si = static_cast<int>(s);
    if (gate) {
      ctx.skip("regularity", "symbolic-vs-ordinary", si, *gate);
    } else {
      ctx.run("regularity", "symbolic-vs-ordinary", si,
              [&] { return regularity_equality_check(ctx.powers(), s, ctx.options()); });
    }
    ctx.run("regularity", "symbolic-lower-bound", si,
            [&] { return lower_bound_check(ctx.powers(), s, ctx.options(), ctx.limits()); });
    ctx.run("regularity", "socle-degree", si, [&] {
      const auto c = socle_regularity(ctx.powers(), s);
      auto r = make_report("regularity", "socle-degree", si);
      r.detail("top degree", std::to_string(c.top_degree));
      r.detail("dim degree 2s-1", std::to_string(c.dim_below));
      r.detail("dim degree 2s", std::to_string(c.dim_at));
      if (!c.ok || c.regularity != static_cast<int>(2 * s - 1)) {
        r.fail("reg(S/(I^(s)+m^2s)) is not 2s-1").witness("top degree", std::to_string(c.top_degree));
      }
      return r;
    });
    if (ctx.cycle_gate()) {
      ctx.skip("regularity", "partial-sum-chain", si, *ctx.cycle_gate());
    } else {
      ctx.run("regularity", "partial-sum-chain", si, [&] {
        return verify_reg_chain(ctx.powers(), ctx.decomposition(), s, ctx.options(), ctx.limits());
      });
    }
  });
}

VerificationReport bipartite_criterion(Context& ctx, const RunConfig& cfg) {
  auto& p = ctx.powers();
  const auto bip = is_bipartite(ctx.graph());
  if (bip.bipartite) {
    auto r = make_report("hypotheses", "bipartite-equality");
    r.instance.params.emplace_back("s range", std::to_string(cfg.s_min) + ".." + std::to_string(cfg.s_max));
    if (ctx.graph().edge_count() == 0) return r.skip("edgeless graph");
    for (unsigned s = cfg.s_min; s <= cfg.s_max; ++s) {
      if (const auto w = symmetric_difference_witness(p.symbolic(s), p.ordinary(s))) {
        r.instance.s = static_cast<int>(s);
        return r.fail("I^(s) != I^s on a bipartite graph").witness("monomial", w->to_string());
      }
    }
    return r;
  }
  auto r = make_report("hypotheses", "odd-cycle-witness");
  CycleCertificate shortest;
  if (ctx.designated() && !ctx.cycle_gate()) {
    shortest = ctx.decomposition().cycles.front();
  } else {
    for (const auto& c : odd_cycles(ctx.graph(), ctx.limits()).odd_cycles) {
      if (shortest.vertices.empty() || c.length() < shortest.length()) shortest = c;
    }
  }
  const unsigned n = static_cast<unsigned>(shortest.length() - 1) / 2;
  r.detail("odd cycle", shortest.to_string());
  for (unsigned s = 1; s <= n + 1; ++s) {
    if (const auto w = symmetric_difference_witness(p.symbolic(s), p.ordinary(s))) {
      r.instance.s = static_cast<int>(s);
      r.witness("monomial in I^(s) outside I^s", w->to_string());
      return r;
    }
  }
  return r.fail("I^(s) = I^s for every s <= n+1").witness("odd cycle", shortest.to_string());
}

void hypotheses_suite(const RunConfig& cfg, Context& ctx) {
  if (ctx.designated()) {
    if (const auto why = ctx.cycle_gate()) {
      ctx.skip("hypotheses", "cycle-hypotheses", std::nullopt, *why);
    } else {
      for (const auto& c : ctx.decomposition().cycles) {
        ctx.run("hypotheses", "cycle-hypotheses", std::nullopt, [&] {
          const auto h = check_hypotheses(ctx.graph(), c, ctx.limits());
          auto r = make_report("hypotheses", "cycle-hypotheses");
          r.instance.params.emplace_back("cycle", c.to_string());
          r.detail("dominant", h.dominant ? "true" : "false");
          r.detail("dominant (closed neighbourhoods)", h.dominant_closed ? "true" : "false");
          r.detail("outside", h.outside.to_string());
          r.detail("H acyclic", h.h_acyclic ? "true" : "false");
          r.detail("nu(G)", std::to_string(h.nu_g));
          r.detail("nu(H)", std::to_string(h.nu_h));
          r.detail("gap", std::to_string(h.gap));
          return r;
        });
      }
    }
  }
  ctx.run("hypotheses", is_bipartite(ctx.graph()).bipartite ? "bipartite-equality" : "odd-cycle-witness",
          std::nullopt, [&] { return bipartite_criterion(ctx, cfg); });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename Pairs>
std::string joined_pairs(const Pairs& pairs) {
  std::string out;
  for (const auto& [k, v] : pairs) {
    if (!out.empty()) out += "; ";
    out += k + "=" + v;
  }
  return out;
}

std::string joined(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& x : items) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

std::string format_timing(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms;
  return out.str();
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["s_min"] = cfg.s_min;
  c["s_max"] = cfg.s_max;
  c["suites"] = cfg.suites;
  c["field"] = cfg.field.name();
  c["max_vertices"] = cfg.max_vertices;
  c["max_generators"] = cfg.max_generators;
  c["max_multidegrees"] = cfg.max_multidegrees;
  c["seed"] = cfg.seed;
  c["random_graphs"] = cfg.random_graphs;
  c["edge_order"] = cfg.edge_order;
  return c;
}

std::string emit_json(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  Json arr = Json::array();
  const Json config = config_json(cfg);
  for (const auto& r : reports) {
    Json j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    Json inst;
    inst["graph"] = r.instance.graph;
    inst["graph_hash"] = r.instance.graph_hash;
    inst["cycles"] = r.instance.cycles;
    inst["s"] = r.instance.s ? Json(*r.instance.s) : Json(nullptr);
    Json params = Json::object();
    for (const auto& [k, v] : r.instance.params) params[k] = v;
    inst["params"] = params;
    j["instance"] = inst;
    j["status"] = to_string(r.status);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.witnesses.empty()) {
      Json w = Json::array();
      for (const auto& x : r.witnesses) w.push_back({{"kind", x.kind}, {"value", x.value}});
      j["witnesses"] = w;
    }
    Json details = Json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    j["details"] = details;
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
    j["config"] = config;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string emit_csv(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  std::ostringstream out;
  out << "suite,check,graph,graph_hash,cycles,s,params,status,reason,witnesses,details,timing_ms,"
         "field,seed,edge_order\n";
  for (const auto& r : reports) {
    std::vector<std::string> witnesses;
    for (const auto& w : r.witnesses) witnesses.push_back(w.kind + "=" + w.value);
    const std::vector<std::string> row = {
        r.suite,
        r.check,
        r.instance.graph,
        r.instance.graph_hash,
        joined(r.instance.cycles, " "),
        r.instance.s ? std::to_string(*r.instance.s) : "",
        joined_pairs(r.instance.params),
        to_string(r.status),
        r.reason,
        joined(witnesses, "; "),
        joined_pairs(r.details),
        r.timing_ms ? format_timing(*r.timing_ms) : "",
        cfg.field.name(),
        std::to_string(cfg.seed),
        cfg.edge_order};
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
  return out.str();
}

std::string emit_text(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  std::ostringstream out;
  out << "field " << cfg.field.name() << ", seed " << cfg.seed << ", s " << cfg.s_min << ".."
      << cfg.s_max << ", edge order " << cfg.edge_order << "\n";
  std::size_t width = 0;
  std::vector<std::string> labels;
  for (const auto& r : reports) {
    std::string label = r.instance.graph + " " + r.suite + "/" + r.check;
    if (r.instance.s) label += " s=" + std::to_string(*r.instance.s);
    for (const auto& [k, v] : r.instance.params) label += " " + k + "=" + v;
    width = std::max(width, label.size());
    labels.push_back(std::move(label));
  }
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    ++counts[static_cast<int>(r.status)];
    out << std::left << std::setw(8) << to_string(r.status) << std::setw(static_cast<int>(width) + 2)
        << labels[i];
    if (!r.reason.empty()) out << r.reason;
    if (r.timing_ms) out << " [" << format_timing(*r.timing_ms) << " ms]";
    out << '\n';
    for (const auto& w : r.witnesses) out << "        witness " << w.kind << ": " << w.value << '\n';
  }
  out << reports.size() << " reports: " << counts[0] << " pass, " << counts[1] << " fail, "
      << counts[2] << " skipped\n";
  return out.str();
}

}  // namespace

void RunConfig::validate() const {
  if (s_min < 1) throw std::invalid_argument("s-min must be at least 1");
  if (s_max < s_min) throw std::invalid_argument("s-max must not be below s-min");
  if (max_vertices <= 0 || max_generators == 0 || max_multidegrees == 0) {
    throw std::invalid_argument("bounds must be positive");
  }
  if (random_graphs < 0) throw std::invalid_argument("random graph count must be nonnegative");
  if (random_max_vertices < 2) throw std::invalid_argument("random graphs need at least 2 vertices");
  if (edge_order != "lex" && edge_order != "peeling") {
    throw std::invalid_argument("edge order must be lex or peeling");
  }
  for (const auto& s : suites) {
    const auto& k = known_suites();
    if (std::find(k.begin(), k.end(), s) == k.end()) throw std::invalid_argument("unknown suite " + s);
  }
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {"hypotheses", "decomposition", "m2s",
                                                 "invariants", "containment",   "banerjee",
                                                 "orderings",  "regularity"};
  return names;
}

std::vector<std::string> parse_suites(const std::string& list) {
  std::vector<bool> chosen(known_suites().size(), false);
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "all") {
      std::fill(chosen.begin(), chosen.end(), true);
      continue;
    }
    const auto& k = known_suites();
    const auto it = std::find(k.begin(), k.end(), item);
    if (it == k.end()) throw std::invalid_argument("unknown suite '" + item + "'");
    chosen[it - k.begin()] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) out.push_back(known_suites()[i]);
  }
  if (out.empty()) throw std::invalid_argument("no suite selected");
  return out;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kText: return "text";
  }
  return "json";
}

Field parse_field(const std::string& name) {
  if (name == "QQ" || name == "rationals") return Field::rationals();
  std::string digits = name;
  if (digits.rfind("ZZ/", 0) == 0) digits = digits.substr(3);
  std::uint32_t p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("unknown field '" + name + "'");
  }
  return Field::prime_field(p);
}

std::vector<GraphFile> seeded_inputs(const RunConfig& cfg) {
  SeededRng rng(cfg.seed);
  std::vector<GraphFile> out;
  for (int i = 0; i < cfg.random_graphs; ++i) {
    GraphFile g;
    g.graph = random_connected_graph(rng, 3, cfg.random_max_vertices);
    g.name = "random-" + std::to_string(cfg.seed) + "-" + std::to_string(i + 1);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<VerificationReport> run_suite(const RunConfig& cfg, const std::vector<GraphFile>& inputs) {
  cfg.validate();
  using Suite = void (*)(const RunConfig&, Context&);
  const std::vector<std::pair<std::string, Suite>> table = {
      {"hypotheses", hypotheses_suite}, {"decomposition", decomposition_suite},
      {"m2s", m2s_suite},               {"invariants", invariants_suite},
      {"containment", containment_suite}, {"banerjee", banerjee_suite},
      {"orderings", orderings_suite},   {"regularity", regularity_suite}};
  std::vector<VerificationReport> reports;
  for (const auto& input : inputs) {
    Context ctx(cfg, input);
    for (const auto& [name, suite] : table) {
      if (!wants(cfg, name)) continue;
      if (input.graph.vertex_count() > cfg.max_vertices) {
        ctx.skip(name, "bounds", std::nullopt,
                 "bound exceeded: " + std::to_string(input.graph.vertex_count()) +
                     " vertices > max-vertices " + std::to_string(cfg.max_vertices));
        continue;
      }
      if (input.graph.edge_count() == 0) {
        ctx.skip(name, "edge-ideal", std::nullopt, "edgeless graph");
        continue;
      }
      suite(cfg, ctx);
    }
    for (auto& r : ctx.take()) reports.push_back(std::move(r));
  }
  return reports;
}

std::string emit_report(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  switch (cfg.format) {
    case OutputFormat::kJson: return emit_json(reports, cfg);
    case OutputFormat::kCsv: return emit_csv(reports, cfg);
    case OutputFormat::kText: return emit_text(reports, cfg);
  }
  return emit_json(reports, cfg);
}

bool any_failed(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); });
}

}  // namespace edgereg
