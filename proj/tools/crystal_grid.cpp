// crystal-grid: command-line front end for the crystal_grid library.
//
// Exit codes: 0 clean, 1 a mathematical violation was found, 2 usage error.
// Every run writes its effective configuration to stderr as a "# config" line.

#include "crystal_grid/crystal_grid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;
using namespace crystal_grid;

constexpr int kClean = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<std::uint64_t> seed_flag;
  std::uint64_t seed = 0;
  std::string seed_source;
  std::uint32_t prime = 32003;
  std::string format = "json";
  std::string output;  // empty: stdout
  std::string grid = "2,2";
  int bound = 8;
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError("seed '" + text + "' is not a non-negative integer");
  }
  if (used != text.size()) throw UsageError("seed '" + text + "' is not a non-negative integer");
  return v;
}

void resolve_seed(RunConfig& cfg) {
  if (cfg.seed_flag) {
    cfg.seed = *cfg.seed_flag;
    cfg.seed_source = "flag";
  } else if (const char* env = std::getenv("CRYSTAL_GRID_SEED"); env && *env) {
    cfg.seed = parse_seed(env);
    cfg.seed_source = "CRYSTAL_GRID_SEED";
  } else {
    std::random_device rd;
    cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    cfg.seed_source = "random";
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw UsageError(what + " '" + text + "' is not a comma-separated list of integers");
    }
    if (used != part.size() || v < 0) throw UsageError(what + " '" + text + "' must list non-negative integers");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

g22::Dims4 parse_dims4(const std::string& text) {
  const auto v = parse_int_list(text, "--dims");
  if (v.size() != 4) throw UsageError("--dims needs four entries, got '" + text + "'");
  return {v[0], v[1], v[2], v[3]};
}

/// Text rendering derived from the JSON report: one "key: value" per line.
std::string render_text(const Json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::string out;
  for (const auto& [k, v] : j.items()) out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + cfg.output + "' for writing");
  f << text;
}

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.format == "dot") throw UsageError("--format dot only applies to the graph command");
  write_output(cfg, cfg.format == "text" ? render_text(j) : j.dump() + "\n");
}

void log_config(const RunConfig& cfg) {
  Json j = {{"command", cfg.command}, {"seed", cfg.seed},     {"seed_source", cfg.seed_source},
            {"prime", cfg.prime},     {"format", cfg.format}, {"output", cfg.output.empty() ? "-" : cfg.output}};
  std::cerr << "# config " << j.dump() << "\n";
}

oracle::SampleConfig sampling(const RunConfig& cfg, int samples) {
  oracle::SampleConfig s;
  s.prime = cfg.prime;
  s.count = samples;
  s.seed = cfg.seed;
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return s;
}

Json component_json(const std::optional<g22::Component2x2>& c) { return c ? Json(c->to_string()) : Json(nullptr); }

Json an_json(const std::optional<an::AnComponent>& c) { return c ? Json(c->dims) : Json(nullptr); }

// ---------------------------------------------------------------- commands

int cmd_an(const RunConfig& cfg, int n, const std::string& word, const std::string& start) {
  if (n < 1) throw UsageError("--n must be positive");
  auto dims = start.empty() ? std::vector<int>(static_cast<std::size_t>(n), 0) : parse_int_list(start, "--start");
  if (static_cast<int>(dims.size()) != n) throw UsageError("--start must have n entries");
  const auto w = OperatorWord::parse(word);
  for (const auto& s : w.steps())
    if (s.color < 1 || s.color > n) throw UsageError("color " + std::to_string(s.color) + " outside 1.." + std::to_string(n));
  const auto t = apply_word(w, an::make_component(dims), [](const an::AnComponent& c, const OpStep& s) { return an::apply(c, s); });
  Json trace = Json::array();
  for (const auto& x : t.trace) trace.push_back(an_json(x));
  emit(cfg, {{"result", an_json(t.result)}, {"trace", trace}});
  return kClean;
}

int cmd_g22_apply(const RunConfig& cfg, const std::string& start, const std::string& word) {
  const auto c = g22::Component2x2::parse(start);
  const auto w = OperatorWord::parse(word);
  for (const auto& s : w.steps())
    if (s.color < 1 || s.color > 4) throw UsageError("color " + std::to_string(s.color) + " outside 1..4");
  const auto t = g22::apply_word(w, c);
  Json trace = Json::array();
  for (const auto& x : t.trace) trace.push_back(component_json(x));
  emit(cfg, {{"start", c.to_string()}, {"word", w.to_string()}, {"result", component_json(t.result)}, {"trace", trace}});
  return kClean;
}

int cmd_components(const RunConfig& cfg, const std::string& dims) {
  const auto d = parse_dims4(dims);
  const auto list = g22::enumerate_components(d);
  Json items = Json::array();
  for (const auto& c : list) items.push_back(c.to_string());
  emit(cfg, {{"dims", d}, {"count", list.size()}, {"components", items}});
  return kClean;
}

int cmd_decomp(const RunConfig& cfg, const std::string& component) {
  const auto c = g22::Component2x2::parse(component);
  const auto m = modules::generic_decomposition(c);
  Json summands = Json::object();
  for (auto k : m.support()) summands["M" + std::to_string(k)] = m.at(k);
  const bool cbs = modules::cbs_check(m);
  emit(cfg, {{"summands", summands}, {"cbs", cbs}});
  return cbs ? kClean : kViolation;
}

int cmd_invariants(const RunConfig& cfg, const std::string& component) {
  const auto c = g22::Component2x2::parse(component);
  Json per = Json::object();
  for (Color i = 1; i <= 4; ++i) {
    Json row = Json::object();
    for (auto kind : g22::kAllInvariants) {
      const auto v = g22::invariant(c, i, kind);
      row[g22::invariant_name(kind)] = v.infinite ? Json("inf") : Json(v.value);
    }
    per[std::to_string(i)] = row;
  }
  emit(cfg, {{"component", c.to_string()}, {"invariants", per}});
  return kClean;
}

template <class C>
int finish_graph(const RunConfig& cfg, const C& crystal, const typename C::element_type& start) {
  if (crystal.degree(start) > cfg.bound) throw UsageError("--bound is below the size of the start element");
  const std::vector<typename C::element_type> seeds{start};
  const auto g = build_crystal_graph(crystal, std::span<const typename C::element_type>(seeds), cfg.bound);
  if (cfg.format == "dot")
    write_output(cfg, export_dot(g));
  else if (cfg.format == "json")
    write_output(cfg, export_json(g));
  else
    write_output(cfg, render_text({{"nodes", g.nodes.size()}, {"edges", g.edges.size()}}));
  return kClean;
}

int cmd_graph(const RunConfig& cfg, const std::string& start, const std::string& family) {
  if (cfg.bound < 0) throw UsageError("--bound must be non-negative");
  if (family != "plain" && family != "star") throw UsageError("--family must be plain or star");
  const auto fam = family == "plain" ? Family::plain : Family::star;
  const auto shape = parse_int_list(cfg.grid, "--grid");
  if (shape.size() == 1) {
    const int n = shape[0];
    if (n < 1) throw UsageError("--grid extent must be positive");
    const an::AnCrystal crystal(n, fam);
    auto s = start.empty() ? crystal.highest() : an::make_component(parse_int_list(start, "--start"));
    if (s.n() != n) throw UsageError("--start must have " + std::to_string(n) + " entries");
    return finish_graph(cfg, crystal, s);
  }
  if (shape == std::vector<int>{2, 2}) {
    const auto s = start.empty() ? g22::u_C : g22::Component2x2::parse(start);
    return finish_graph(cfg, g22::Crystal2x2(fam), s);
  }
  throw UsageError("operators are available for chains (--grid n) and the 2x2 grid only");
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int box, int samples) {
  verify::SuiteConfig sc;
  sc.bound = cfg.bound;
  sc.box = box;
  sc.sampling = sampling(cfg, samples);
  if (sc.bound < 0 || sc.box < 0) throw UsageError("--bound and --box must be non-negative");
  const auto names = verify::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  const auto r = verify::run_suite(suite, sc);
  emit(cfg, r.report);
  return r.clean ? kClean : kViolation;
}

int cmd_oracle(const RunConfig& cfg, bool star, const std::string& component, int i, int samples) {
  const auto c = g22::Component2x2::parse(component);
  if (i < 1 || i > 4) throw UsageError("--i must be a vertex 1..4");
  const auto sc = sampling(cfg, samples);
  const int v = oracle::estimate_component_invariant(c, i, star ? oracle::EpsilonKind::epsilon_star : oracle::EpsilonKind::epsilon, sc);
  emit(cfg, {{"value", v}, {"samples", samples}, {"seed", cfg.seed}});
  return kClean;
}

int cmd_binfty(const RunConfig& cfg, const std::string& a, const std::string& b, int length, const std::string& pattern) {
  const auto pat = parse_int_list(pattern, "--pattern");
  const binfty::PolyhedralModel m(GridQuiver({2, 2}).cartan(), binfty::IotaSequence(pat, length));
  const auto r = binfty::words_distinct(m, OperatorWord::parse(a), OperatorWord::parse(b));
  auto trim = [](std::vector<int> x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
    return x;
  };
  emit(cfg, {{"distinct", r.distinct}, {"xA", trim(r.xA)}, {"xB", trim(r.xB)}});
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal structures on 2x2-grid and A_n representation varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed_flag, "RNG seed (falls back to CRYSTAL_GRID_SEED, then random)");
  app.add_option("--prime", cfg.prime, "prime field for sampling")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}))->capture_default_str();
  app.add_option("--output", cfg.output, "output path (default stdout)");

  int an_n = 0;
  std::string an_word, an_start;
  auto* an_cmd = app.add_subcommand("an", "apply an operator word on the A_n chain");
  an_cmd->add_option("--n", an_n, "number of vertices")->required();
  an_cmd->add_option("--apply", an_word, "operator word, applied right to left")->required();
  an_cmd->add_option("--start", an_start, "start dimension vector (default zero)");

  auto* g22_cmd = app.add_subcommand("g22", "2x2 grid commands");
  g22_cmd->require_subcommand(1);
  std::string g_start, g_word, g_dims, g_component;
  auto* g_apply = g22_cmd->add_subcommand("apply", "apply an operator word to a component");
  g_apply->add_option("--start", g_start, "component d1,d2,d3,d4:r1,r2")->required();
  g_apply->add_option("--word", g_word, "operator word, applied right to left")->required();
  auto* g_comps = g22_cmd->add_subcommand("components", "list the components of a dimension vector");
  g_comps->add_option("--dims", g_dims, "d1,d2,d3,d4")->required();
  auto* g_decomp = g22_cmd->add_subcommand("decomp", "generic decomposition of a component");
  g_decomp->add_option("--component", g_component, "d1,d2,d3,d4:r1,r2")->required();
  auto* g_inv = g22_cmd->add_subcommand("invariants", "all eight invariants of a component");
  g_inv->add_option("--component", g_component, "d1,d2,d3,d4:r1,r2")->required();

  std::string c_dims;
  auto* comps_cmd = app.add_subcommand("components", "list the 2x2 components of a dimension vector");
  comps_cmd->add_option("--dims", c_dims, "d1,d2,d3,d4")->required();

  std::string graph_start, graph_family = "plain";
  auto* graph_cmd = app.add_subcommand("graph", "build and export a crystal graph");
  graph_cmd->add_option("--grid", cfg.grid, "grid shape: n for A_n, or 2,2")->capture_default_str();
  graph_cmd->add_option("--bound", cfg.bound, "total dimension bound")->capture_default_str();
  graph_cmd->add_option("--start", graph_start, "start element (default the zero element)");
  graph_cmd->add_option("--family", graph_family, "plain or star")->capture_default_str();

  std::string suite;
  int box = 4, verify_samples = 50;
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--bound", cfg.bound, "total dimension bound")->capture_default_str();
  verify_cmd->add_option("--box", box, "per-vertex dimension cap for sampling suites")->capture_default_str();
  verify_cmd->add_option("--samples", verify_samples, "samples per component")->capture_default_str();

  std::string o_component;
  int o_i = 1, o_samples = 50;
  auto* oracle_cmd = app.add_subcommand("oracle", "estimate an invariant from sampled points");
  oracle_cmd->require_subcommand(1);
  auto* o_eps = oracle_cmd->add_subcommand("epsilon", "min over samples of dim coker");
  auto* o_eps_star = oracle_cmd->add_subcommand("epsilon-star", "min over samples of dim ker");
  for (auto* sub : {o_eps, o_eps_star}) {
    sub->add_option("--component", o_component, "d1,d2,d3,d4:r1,r2")->required();
    sub->add_option("--i", o_i, "vertex")->required();
    sub->add_option("--samples", o_samples, "number of samples")->capture_default_str();
  }

  std::string word_a, word_b, pattern = "1,2,3,4";
  int length = 40;
  auto* binfty_cmd = app.add_subcommand("binfty", "truncated B(infinity) model");
  binfty_cmd->require_subcommand(1);
  auto* compare = binfty_cmd->add_subcommand("compare", "compare two f-words applied to the highest weight element");
  compare->add_option("--wordA", word_a, "first word")->required();
  compare->add_option("--wordB", word_b, "second word")->required();
  compare->add_option("--length", length, "truncation length")->capture_default_str();
  compare->add_option("--pattern", pattern, "periodic color pattern")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    resolve_seed(cfg);
    for (const auto* sub : app.get_subcommands()) {
      cfg.command = sub->get_name();
      for (const auto* s2 : sub->get_subcommands()) cfg.command += " " + s2->get_name();
    }
    if (verify_cmd->parsed()) cfg.command += " " + suite;
    log_config(cfg);

    if (an_cmd->parsed()) return cmd_an(cfg, an_n, an_word, an_start);
    if (g_apply->parsed()) return cmd_g22_apply(cfg, g_start, g_word);
    if (g_comps->parsed()) return cmd_components(cfg, g_dims);
    if (g_decomp->parsed()) return cmd_decomp(cfg, g_component);
    if (g_inv->parsed()) return cmd_invariants(cfg, g_component);
    if (comps_cmd->parsed()) return cmd_components(cfg, c_dims);
    if (graph_cmd->parsed()) return cmd_graph(cfg, graph_start, graph_family);
    if (verify_cmd->parsed()) return cmd_verify(cfg, suite, box, verify_samples);
    if (o_eps->parsed()) return cmd_oracle(cfg, false, o_component, o_i, o_samples);
    if (o_eps_star->parsed()) return cmd_oracle(cfg, true, o_component, o_i, o_samples);
    if (compare->parsed()) return cmd_binfty(cfg, word_a, word_b, length, pattern);
    std::cerr << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const binfty::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  }
}
