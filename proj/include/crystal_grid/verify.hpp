#pragma once

// Named verification suites behind `crystal-grid verify`. Each returns a JSON
// report and a clean flag; the CLI maps the flag to its exit code.

#include "crystal_grid/binfty.hpp"
#include "crystal_grid/crystal.hpp"
#include "crystal_grid/crystal_2x2.hpp"
#include "crystal_grid/crystal_an.hpp"
#include "crystal_grid/crystal_graph.hpp"
#include "crystal_grid/module_algebra.hpp"
#include "crystal_grid/rep_oracle.hpp"

#include <json.hpp>  // vendored nlohmann::json

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal_grid::verify {

using Json = nlohmann::ordered_json;

struct SuiteConfig {
  int bound = 8;  // total dimension bound for exhaustive suites
  int box = 4;    // per-vertex dimension cap for sampling suites
  oracle::SampleConfig sampling;
};

struct SuiteResult {
  bool clean = false;
  Json report;
};

namespace detail {

constexpr std::size_t kMaxExamples = 5;

inline Json axiom_report_json(const AxiomReport& r) {
  Json by = Json::object();
  Json examples = Json::array();
  for (std::size_t a = 0; a < r.by_axiom.size(); ++a) {
    by[std::to_string(a + 1)] = r.by_axiom[a].size();
    for (const auto& v : r.by_axiom[a])
      if (examples.size() < kMaxExamples)
        examples.push_back({{"axiom", a + 1}, {"element", v.element}, {"color", v.color}, {"detail", v.detail}});
  }
  return {{"elements", r.elements_checked}, {"skipped_beyond_bound", r.skipped_beyond_bound}, {"violations", by},
          {"examples", examples}};
}

inline SuiteResult axioms_2x2(const SuiteConfig& cfg, Family fam) {
  const auto comps = g22::components_up_to(cfg.bound);
  const auto r = check_crystal_axioms(g22::Crystal2x2(fam), std::span<const g22::Component2x2>(comps), cfg.bound);
  Json j = {{"suite", fam == Family::plain ? "axioms2x2" : "star"}, {"family", family_name(fam)}, {"bound", cfg.bound}};
  j.update(axiom_report_json(r));
  j["clean"] = r.clean();
  return {r.clean(), j};
}

inline SuiteResult axioms_an(const SuiteConfig& cfg) {
  Json per_n = Json::array();
  bool clean = true;
  for (int n = 1; n <= 5; ++n)
    for (auto fam : {Family::plain, Family::star}) {
      const auto frag = an::enumerate_up_to(n, cfg.bound);
      const auto r = check_crystal_axioms(an::AnCrystal(n, fam), std::span<const an::AnComponent>(frag), cfg.bound);
      Json e = {{"n", n}, {"family", family_name(fam)}};
      e.update(axiom_report_json(r));
      per_n.push_back(e);
      clean = clean && r.clean();
    }
  return {clean, {{"suite", "axiomsAn"}, {"bound", cfg.bound}, {"runs", per_n}, {"clean", clean}}};
}

inline SuiteResult duality(const SuiteConfig& cfg) {
  std::size_t checked = 0;
  Json failures = Json::array();
  std::size_t failed = 0;
  for (const auto& c : g22::components_up_to(cfg.bound)) {
    if (!(g22::dual(g22::dual(c)) == c)) {
      ++failed;
      continue;
    }
    const auto dc = g22::dual(c);
    for (Color i = 1; i <= 4; ++i) {
      const Color ai = g22::involution(i);
      auto conj = [&](auto op) {
        const auto y = op(dc, ai);
        return y ? std::optional(g22::dual(*y)) : std::nullopt;
      };
      ++checked;
      const bool ok = g22::apply_e_star(c, i) == conj(g22::apply_e) && g22::apply_f_star(c, i) == conj(g22::apply_f) &&
                      g22::epsilon_star(c, i) == g22::epsilon(dc, ai) &&
                      g22::epsilon_star_prime(c, i) == g22::epsilon_prime(dc, ai);
      if (!ok) {
        ++failed;
        if (failures.size() < kMaxExamples) failures.push_back({{"component", c.to_string()}, {"color", i}});
      }
    }
  }
  return {failed == 0, {{"suite", "duality"}, {"bound", cfg.bound}, {"checked", checked}, {"failed", failed},
                        {"examples", failures}, {"clean", failed == 0}}};
}

inline SuiteResult oracle_suite(const SuiteConfig& cfg) {
  std::size_t components = 0, resampled = 0, failed = 0;
  Json failures = Json::array();
  auto mismatches = [](const g22::Component2x2& c, const oracle::ComponentEstimates& est) {
    int bad = 0;
    for (int i = 1; i <= 4; ++i) {
      bad += est.epsilon[static_cast<std::size_t>(i - 1)] != g22::epsilon(c, i);
      bad += est.epsilon_star[static_cast<std::size_t>(i - 1)] != g22::epsilon_star(c, i);
    }
    return bad;
  };
  for (const auto& c : g22::components_in_box(cfg.box)) {
    ++components;
    auto est = oracle::estimate_component(c, cfg.sampling);
    if (mismatches(c, est) != 0) {
      ++resampled;
      auto again = cfg.sampling;
      again.seed = oracle::derive_seed(cfg.sampling.seed, 0x5245534D504C45ULL + components);
      est = oracle::estimate_component(c, again);
      if (const int bad = mismatches(c, est); bad != 0) {
        failed += static_cast<std::size_t>(bad);
        if (failures.size() < kMaxExamples) failures.push_back({{"component", c.to_string()}, {"mismatches", bad}});
      }
    }
  }
  return {failed == 0,
          {{"suite", "oracle"}, {"box", cfg.box}, {"samples", cfg.sampling.count}, {"prime", cfg.sampling.prime},
           {"seed", cfg.sampling.seed}, {"components", components}, {"resampled", resampled}, {"failed", failed},
           {"examples", failures}, {"clean", failed == 0}}};
}

inline SuiteResult decomp_suite(const SuiteConfig& cfg) {
  std::size_t components = 0, resampled = 0, failed = 0;
  Json failures = Json::array();
  auto one = cfg.sampling;
  for (const auto& c : g22::components_in_box(cfg.box)) {
    ++components;
    const auto want = modules::generic_decomposition(c);
    auto got = oracle::certify_decomposition(oracle::sample_component_point(c, one, components));
    if (got != want) {
      ++resampled;
      got = oracle::certify_decomposition(oracle::sample_component_point(c, one, components + (1ULL << 40)));
    }
    const bool ok = got == want && want.dims() == c.dims() && want.ranks() == c.ranks() && modules::cbs_check(want);
    if (!ok) {
      ++failed;
      if (failures.size() < kMaxExamples)
        failures.push_back({{"component", c.to_string()}, {"generic", want.to_string()}, {"certified", got.to_string()}});
    }
  }
  return {failed == 0, {{"suite", "decomp"}, {"box", cfg.box}, {"prime", cfg.sampling.prime}, {"seed", cfg.sampling.seed},
                        {"components", components}, {"resampled", resampled}, {"failed", failed}, {"examples", failures},
                        {"clean", failed == 0}}};
}

inline SuiteResult cbs_suite(const SuiteConfig& cfg) {
  Json resolutions = Json::array();
  for (int k = 1; k <= 11; ++k) resolutions.push_back(modules::resolution(k).to_string());  // throws if not exact
  std::size_t components = 0, failed = 0;
  Json failures = Json::array();
  for (const auto& c : g22::components_in_box(cfg.box)) {
    ++components;
    const auto m = modules::generic_decomposition(c);
    if (!modules::cbs_check(m)) {
      ++failed;
      if (failures.size() < kMaxExamples) failures.push_back({{"component", c.to_string()}, {"decomposition", m.to_string()}});
    }
  }
  return {failed == 0, {{"suite", "cbs"}, {"box", cfg.box}, {"resolutions", resolutions}, {"components", components},
                        {"failed", failed}, {"examples", failures}, {"clean", failed == 0}}};
}

inline SuiteResult counterexample_suite(const SuiteConfig&) {
  const auto [a, b] = g22::counterexample_words();
  const auto xa = g22::apply_word(a, g22::u_C).result, xb = g22::apply_word(b, g22::u_C).result;
  const bool bc_equal = xa && xb && *xa == *xb;
  const auto cartan = GridQuiver({2, 2}).cartan();
  bool distinct = true;
  for (int length : {40, 80})
    for (const auto& pattern : {std::vector<Color>{1, 2, 3, 4}, std::vector<Color>{4, 3, 2, 1}}) {
      const binfty::PolyhedralModel m(cartan, binfty::IotaSequence(pattern, length));
      distinct = distinct && binfty::words_distinct(m, a, b).distinct;
    }
  return {bc_equal && distinct, {{"bc_equal", bc_equal}, {"binfty_distinct", distinct}}};
}

inline SuiteResult connectivity_suite(const SuiteConfig& cfg) {
  std::size_t failed_words = 0;
  Json failures = Json::array();
  const auto comps = g22::components_up_to(cfg.bound);
  for (const auto& c : comps) {
    const auto t = g22::apply_word(g22::connectivity_word(c), c);
    if (!t.result || !(*t.result == g22::u_C)) {
      ++failed_words;
      if (failures.size() < kMaxExamples) failures.push_back(c.to_string());
    }
  }
  const std::vector<g22::Component2x2> seed{g22::u_C};
  const auto g = build_crystal_graph(g22::Crystal2x2(Family::plain), std::span<const g22::Component2x2>(seed), cfg.bound);
  std::vector<std::string> expected;
  for (const auto& c : comps) expected.push_back(c.to_string());
  const auto conn = is_connected_within(g, g22::u_C.to_string(), expected);
  const bool clean = failed_words == 0 && conn.connected;
  return {clean, {{"suite", "connectivity"}, {"bound", cfg.bound}, {"components", comps.size()},
                  {"word_failures", failed_words}, {"examples", failures}, {"graph_nodes", g.nodes.size()},
                  {"graph_edges", g.edges.size()}, {"graph_connected", conn.connected}, {"clean", clean}}};
}

inline SuiteResult seminormal_suite(const SuiteConfig& cfg) {
  const auto w = g22::Component2x2::parse("1,1,1,2:1,1");
  const int eps = g22::epsilon(w, 1), eps_prime = g22::epsilon_prime(w, 1);
  std::size_t violations = 0;
  for (const auto& c : g22::components_up_to(cfg.bound))
    for (Color i = 1; i <= 4; ++i) violations += g22::epsilon_prime(c, i) > g22::epsilon(c, i);
  const bool clean = eps == 1 && eps_prime == 0 && violations == 0;
  return {clean, {{"suite", "seminormal"}, {"witness", w.to_string()}, {"i", 1}, {"epsilon", eps},
                  {"epsilon_prime", eps_prime}, {"bound", cfg.bound}, {"epsilon_prime_above_epsilon", violations},
                  {"clean", clean}}};
}

}  // namespace detail

inline const std::map<std::string, std::function<SuiteResult(const SuiteConfig&)>>& suites() {
  static const std::map<std::string, std::function<SuiteResult(const SuiteConfig&)>> all{
      {"axioms2x2", [](const SuiteConfig& c) { return detail::axioms_2x2(c, Family::plain); }},
      {"star", [](const SuiteConfig& c) { return detail::axioms_2x2(c, Family::star); }},
      {"axiomsAn", detail::axioms_an},
      {"duality", detail::duality},
      {"oracle", detail::oracle_suite},
      {"decomp", detail::decomp_suite},
      {"cbs", detail::cbs_suite},
      {"counterexample", detail::counterexample_suite},
      {"connectivity", detail::connectivity_suite},
      {"seminormal", detail::seminormal_suite},
  };
  return all;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

/// Throws std::invalid_argument for an unknown suite name.
inline SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  cfg.sampling.validate();
  return it->second(cfg);
}

}  // namespace crystal_grid::verify
