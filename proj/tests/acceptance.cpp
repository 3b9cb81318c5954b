// Acceptance run: one PASS/FAIL line per criterion, followed by indented detail.
// Exit status is 0 only if every criterion passes.
//
// Tolerances: every check is exact except 9 and 10, which sample points over
// F_p (p = 32003, 50 samples per component) and allow one resample per
// component with a derived seed. The seed comes from CRYSTAL_GRID_SEED when
// set, otherwise a fixed default, and is printed in the header.

#include "crystal_grid/crystal_grid.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace crystal_grid;

namespace {

constexpr int kBound = 8;
constexpr int kEnumBound = 10;
constexpr int kBox = 4;
constexpr int kSamples = 50;
constexpr std::uint32_t kPrime = 32003;
constexpr std::uint64_t kDefaultSeed = 20240601;

struct Line {
  int id;
  bool pass;
  std::string title;
  std::vector<std::string> detail;
};

std::vector<Line> results;

void report(int id, bool pass, std::string title, std::vector<std::string> detail = {}) {
  std::cout << (pass ? "PASS " : "FAIL ") << id << "  " << title << "\n";
  for (const auto& d : detail) std::cout << "       " << d << "\n";
  std::cout.flush();
  results.push_back({id, pass, std::move(title), std::move(detail)});
}

template <class... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::vector<g22::Dims4> dims_up_to(int bound) {
  std::vector<g22::Dims4> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (int c = 0; a + b + c <= bound; ++c)
        for (int d = 0; a + b + c + d <= bound; ++d) out.push_back({a, b, c, d});
  return out;
}

// 1 -------------------------------------------------------------------------
void criterion_enumeration() {
  std::size_t vectors = 0, comps = 0, bad_formula = 0, bad_brute = 0;
  for (const auto& d : dims_up_to(kEnumBound)) {
    ++vectors;
    const int s = d[1] + d[2];
    const int expected = d[0] + d[3] >= s ? std::min(d[0], s) - std::max(0, s - d[3]) + 1 : 1;
    const auto listed = g22::enumerate_components(d);
    comps += listed.size();
    bad_formula += static_cast<int>(listed.size()) != expected;
    // Independent count: rank pairs satisfying the component conditions.
    int brute = 0;
    for (int r1 = 0; r1 <= d[0] + s; ++r1)
      for (int r2 = 0; r2 <= d[3] + s; ++r2) {
        const bool ok = d[0] + d[3] >= s ? (r1 + r2 == s && r1 <= d[0] && r2 <= d[3]) : (r1 == d[0] && r2 == d[3]);
        brute += ok;
      }
    bad_brute += brute != expected;
  }
  report(1, bad_formula == 0 && bad_brute == 0, "component enumeration, sum d <= 10 (exact)",
         {cat(vectors, " dimension vectors, ", comps, " components"),
          cat("count != closed form: ", bad_formula, ", brute-force rank count != closed form: ", bad_brute)});
}

// 2, 3 ----------------------------------------------------------------------
std::string axiom_counts(const AxiomReport& r) {
  std::string out;
  for (std::size_t a = 0; a < 5; ++a) out += cat(a ? " " : "", "(", a + 1, ")=", r.by_axiom[a].size());
  return out;
}

void criterion_axioms_2x2() {
  const auto comps = g22::components_up_to(kBound);
  bool pass = true;
  std::vector<std::string> detail{cat(comps.size(), " components with sum d <= ", kBound)};
  for (auto fam : {Family::plain, Family::star}) {
    const auto r = check_crystal_axioms(g22::Crystal2x2(fam), std::span<const g22::Component2x2>(comps), kBound);
    pass = pass && r.clean();
    detail.push_back(cat(family_name(fam), ": violations ", axiom_counts(r)));
  }
  report(2, pass, "crystal axioms on the 2x2 grid, both families (exact)", detail);
}

void criterion_axioms_an() {
  bool pass = true;
  std::vector<std::string> detail;
  for (int n = 1; n <= 5; ++n) {
    const auto frag = an::enumerate_up_to(n, kBound);
    for (auto fam : {Family::plain, Family::star}) {
      const auto r = check_crystal_axioms(an::AnCrystal(n, fam), std::span<const an::AnComponent>(frag), kBound);
      pass = pass && r.clean();
      detail.push_back(cat("n=", n, " ", family_name(fam), ": ", frag.size(), " components, violations ", axiom_counts(r)));
    }
  }
  report(3, pass, "crystal axioms on A_n, n <= 5, sum <= 8, both families (exact)", detail);
}

// 4 -------------------------------------------------------------------------
template <class C>
std::size_t inverse_failures(const C& crystal, const std::vector<typename C::element_type>& elems, int colors) {
  std::size_t bad = 0;
  for (const auto& x : elems)
    for (Color i = 1; i <= colors; ++i) {
      if (const auto y = crystal.f(x, i); y && crystal.e(*y, i) != std::optional(x)) ++bad;
      if (const auto y = crystal.e(x, i); y && crystal.f(*y, i) != std::optional(x)) ++bad;
    }
  return bad;
}

void criterion_inverses() {
  std::size_t bad = 0, checked = 0;
  const auto comps = g22::components_up_to(kBound);
  for (auto fam : {Family::plain, Family::star}) {
    bad += inverse_failures(g22::Crystal2x2(fam), comps, 4);
    checked += comps.size() * 4;
    for (int n = 1; n <= 5; ++n) {
      const auto frag = an::enumerate_up_to(n, kBound);
      bad += inverse_failures(an::AnCrystal(n, fam), frag, n);
      checked += frag.size() * static_cast<std::size_t>(n);
    }
  }
  report(4, bad == 0, "e_i and f_i are mutually inverse, same bounds (exact)",
         {cat(checked, " (element, color) pairs over both families, failures: ", bad)});
}

// 5 -------------------------------------------------------------------------
void criterion_counterexample() {
  const auto [a, b] = g22::counterexample_words();
  const auto want = g22::Component2x2::parse("2,0,2,2:0,2");
  const auto xa = g22::apply_word(a, g22::u_C).result, xb = g22::apply_word(b, g22::u_C).result;
  const bool bc = xa && xb && *xa == want && *xb == want;
  std::vector<std::string> detail{cat("wA = ", a.to_string(), ", wB = ", b.to_string()),
                                  cat("B_C: wA(u_C) = ", xa ? xa->to_string() : "0", ", wB(u_C) = ", xb ? xb->to_string() : "0")};
  bool distinct = true;
  const auto cartan = GridQuiver({2, 2}).cartan();
  for (const auto& pattern : {std::vector<Color>{1, 2, 3, 4}, std::vector<Color>{4, 3, 2, 1}})
    for (int length : {40, 80}) {
      const binfty::PolyhedralModel m(cartan, binfty::IotaSequence(pattern, length));
      const auto r = binfty::words_distinct(m, a, b);
      distinct = distinct && r.distinct;
      detail.push_back(cat("B(inf) pattern ", pattern[0], pattern[1], pattern[2], pattern[3], " L=", length, ": ",
                           r.distinct ? "distinct" : "EQUAL"));
    }
  report(5, bc && distinct, "words agree in B_C and differ in B(inf) (exact)", detail);
}

// 6 -------------------------------------------------------------------------
void criterion_seminormal() {
  const auto w = g22::Component2x2::parse("1,1,1,2:1,1");
  const int eps = g22::epsilon(w, 1);
  const int eps_prime_formula = g22::epsilon_prime(w, 1);
  const auto eps_prime_iter = g22::count_applications(w, 1, OpKind::e, 64);
  std::size_t above = 0, checked = 0;
  for (const auto& c : g22::components_up_to(kBound))
    for (Color i = 1; i <= 4; ++i, ++checked) above += g22::epsilon_prime(c, i) > g22::epsilon(c, i);
  const bool pass = eps == 1 && eps_prime_formula == 0 && eps_prime_iter == g22::ExtendedInt::of(0) && above == 0;
  report(6, pass, "upper seminormality fails at 1,1,1,2:1,1 (exact)",
         {cat("eps_1 = ", eps, ", eps'_1 = ", eps_prime_formula, " (by iteration ", eps_prime_iter.to_string(), ")"),
          cat("eps'_i > eps_i on ", above, " of ", checked, " (component, color) pairs")});
}

// 7 -------------------------------------------------------------------------
void criterion_connectivity() {
  const auto comps = g22::components_up_to(kBound);
  std::size_t bad = 0;
  for (const auto& c : comps) {
    // Built here from the exponents rather than taken from the library.
    OperatorWord w;
    w.then_first(OpKind::e, 4, c.r2())
        .then_first(OpKind::e, 3, c.d(3))
        .then_first(OpKind::e, 2, c.d(2))
        .then_first(OpKind::e, 1, c.d(1))
        .then_first(OpKind::e, 4, c.d(4) - c.r2());
    const auto t = g22::apply_word(w, c);
    if (!t.result || !(*t.result == g22::u_C)) ++bad;
  }
  const std::vector<g22::Component2x2> seed{g22::u_C};
  const auto g = build_crystal_graph(g22::Crystal2x2(Family::plain), std::span<const g22::Component2x2>(seed), kBound);
  std::vector<std::string> expected;
  for (const auto& c : comps) expected.push_back(c.to_string());
  const auto conn = is_connected_within(g, g22::u_C.to_string(), expected);
  report(7, bad == 0 && conn.connected && g.nodes.size() == comps.size(), "B_C is connected, sum d <= 8 (exact)",
         {cat("connectivity word failures: ", bad, " of ", comps.size()),
          cat("graph from u_C: ", g.nodes.size(), " nodes, ", g.edges.size(), " edges, unreached ", conn.unreached.size())});
}

// 8 -------------------------------------------------------------------------
void criterion_invariants() {
  constexpr int kCap = 24;
  const auto comps = g22::components_up_to(kBound);
  std::size_t eps_bad = 0, phi_bad = 0, phi_tab_bad = 0, phi_star_tab_bad = 0, dual_bad = 0, checked = 0;
  std::string first_tab;
  for (const auto& c : comps) {
    const auto dc = g22::dual(c);
    for (Color i = 1; i <= 4; ++i) {
      ++checked;
      const auto ep = g22::count_applications(c, i, OpKind::e, kCap);
      const auto eps_ = g22::count_applications(c, i, OpKind::e_star, kCap);
      const auto fp = g22::count_applications(c, i, OpKind::f, kCap);
      const auto fps = g22::count_applications(c, i, OpKind::f_star, kCap);
      eps_bad += !(ep == g22::ExtendedInt::of(g22::epsilon_prime(c, i)));
      eps_bad += !(eps_ == g22::ExtendedInt::of(g22::epsilon_star_prime(c, i)));
      phi_bad += !(fp == g22::phi_prime(c, i));
      phi_bad += !(fps == g22::phi_star_prime(c, i));
      if (!(fp == g22::tabulated_phi_prime(c, i))) {
        ++phi_tab_bad;
        if (first_tab.empty())
          first_tab = cat(c.to_string(), " i=", i, ": iteration ", fp.to_string(), ", table ",
                          g22::tabulated_phi_prime(c, i).to_string());
      }
      phi_star_tab_bad += !(fps == g22::tabulated_phi_star_prime(c, i));
      const Color ai = g22::involution(i);
      auto conj = [&](const std::optional<g22::Component2x2>& y) { return y ? std::optional(g22::dual(*y)) : std::nullopt; };
      dual_bad += g22::apply_e_star(c, i) != conj(g22::apply_e(dc, ai));
      dual_bad += g22::apply_f_star(c, i) != conj(g22::apply_f(dc, ai));
    }
  }
  const bool tab_ok = phi_tab_bad == 0 && phi_star_tab_bad == 0;
  std::vector<std::string> detail{
      cat(checked, " (component, color) pairs, phi' capped at ", kCap, " applications"),
      cat("eps', eps*' closed forms vs iteration: ", eps_bad, " mismatches"),
      cat("phi', phi*' as tabulated vs iteration: ", phi_tab_bad, " and ", phi_star_tab_bad, " mismatches",
          tab_ok ? "" : "  <-- tabulated value is infinite but the chain stops once the opposite rank saturates"),
      cat("phi', phi*' with the saturation bound vs iteration: ", phi_bad, " mismatches"),
      cat("e*_i = dual e_a(i) dual and f*_i = dual f_a(i) dual: ", dual_bad, " mismatches")};
  if (!first_tab.empty()) detail.push_back("first tabulated mismatch: " + first_tab);
  report(8, eps_bad == 0 && tab_ok && phi_bad == 0 && dual_bad == 0,
         "primed invariants match iteration, duality conjugation (exact)", detail);
}

// 9, 10 ---------------------------------------------------------------------
oracle::SampleConfig sampling(std::uint64_t seed) {
  oracle::SampleConfig cfg;
  cfg.prime = kPrime;
  cfg.count = kSamples;
  cfg.seed = seed;
  return cfg;
}

void criterion_oracle(std::uint64_t seed) {
  const auto comps = g22::components_in_box(kBox);
  std::size_t resampled = 0, failed = 0, values = 0;
  std::string first;
  auto mismatches = [](const g22::Component2x2& c, const oracle::ComponentEstimates& est) {
    int bad = 0;
    for (int i = 1; i <= 4; ++i) {
      bad += est.epsilon[static_cast<std::size_t>(i - 1)] != g22::epsilon(c, i);
      bad += est.epsilon_star[static_cast<std::size_t>(i - 1)] != g22::epsilon_star(c, i);
    }
    return bad;
  };
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& c = comps[k];
    values += 8;
    auto est = oracle::estimate_component(c, sampling(oracle::derive_seed(seed, k)));
    if (mismatches(c, est) == 0) continue;
    ++resampled;
    est = oracle::estimate_component(c, sampling(oracle::derive_seed(seed, k + (1ULL << 32))));
    if (const int bad = mismatches(c, est); bad != 0) {
      failed += static_cast<std::size_t>(bad);
      if (first.empty()) first = c.to_string();
    }
  }
  std::vector<std::string> detail{cat(comps.size(), " components with all d_i <= ", kBox, ", ", values, " values"),
                                  cat("resampled ", resampled, ", failures after resample ", failed)};
  if (!first.empty()) detail.push_back("first failing component: " + first);
  report(9, failed == 0, "sampled eps/eps* minima match closed forms (p=32003, 50 samples, 1 resample)", detail);
}

void criterion_decomposition(std::uint64_t seed) {
  const auto comps = g22::components_in_box(kBox);
  std::size_t resampled = 0, bad_cert = 0, bad_shape = 0, bad_cbs = 0;
  std::string first;
  const auto cfg = sampling(seed);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& c = comps[k];
    const auto want = modules::generic_decomposition(c);
    auto got = oracle::certify_decomposition(oracle::sample_component_point(c, cfg, (1ULL << 48) + k));
    if (got != want) {
      ++resampled;
      got = oracle::certify_decomposition(oracle::sample_component_point(c, cfg, (1ULL << 49) + k));
    }
    if (got != want) {
      ++bad_cert;
      if (first.empty()) first = c.to_string() + " generic " + want.to_string() + " certified " + got.to_string();
    }
    bad_shape += !(want.dims() == c.dims() && want.ranks() == c.ranks());
    bad_cbs += !modules::cbs_check(want);
  }
  std::vector<std::string> detail{cat(comps.size(), " components, resampled ", resampled),
                                  cat("certified != generic: ", bad_cert, ", dims/ranks mismatch: ", bad_shape,
                                      ", Ext^1 between distinct summands: ", bad_cbs)};
  if (!first.empty()) detail.push_back("first: " + first);
  report(10, bad_cert == 0 && bad_shape == 0 && bad_cbs == 0,
         "generic decomposition certified on sampled points (p=32003, 1 resample)", detail);
}

// 11 ------------------------------------------------------------------------
bool check_resolution(const modules::ProjectiveResolution& res, std::string& why) {
  const RationalField Q;
  const auto len = res.length();
  for (std::size_t j = 1; j <= len; ++j) {
    const auto& src = res.term(j);
    const auto& tgt = res.term(j - 1);
    const auto& d = res.differential(j);
    for (const auto& a : src.quiver().arrows()) {
      const auto s = static_cast<std::size_t>(a.source - 1), t = static_cast<std::size_t>(a.target - 1);
      if (multiply(Q, tgt.map(a.source, a.target), d[s]) != multiply(Q, d[t], src.map(a.source, a.target))) {
        why = cat("d", j, " is not a module map");
        return false;
      }
    }
  }
  const auto& target = modules::indecomposable_dims(res.module());
  for (int v = 1; v <= 4; ++v) {
    const auto vi = static_cast<std::size_t>(v - 1);
    std::vector<std::size_t> rk(len + 2, 0);  // rk[j] = rank of d_j at v, zero outside 1..len
    for (std::size_t j = 1; j <= len; ++j) rk[j] = rank(Q, res.differential(j)[vi]);
    for (std::size_t j = 1; j + 1 <= len; ++j)
      if (!is_zero_matrix(Q, multiply(Q, res.differential(j)[vi], res.differential(j + 1)[vi]))) {
        why = cat("d", j, " d", j + 1, " != 0 at vertex ", v);
        return false;
      }
    for (std::size_t j = 1; j <= len; ++j) {
      const auto dim = static_cast<std::size_t>(res.term(j).dim(v));
      if (dim - rk[j] != rk[j + 1]) {
        why = cat("homology at P", j, ", vertex ", v);
        return false;
      }
    }
    const auto coker = static_cast<std::size_t>(res.term(0).dim(v)) - rk[1];
    if (coker != static_cast<std::size_t>(target[vi])) {
      why = cat("cokernel dimension at vertex ", v);
      return false;
    }
  }
  return true;
}

void criterion_resolutions() {
  std::vector<std::string> detail;
  bool pass = true;
  for (int k : {1, 2, 3, 5, 6, 9, 10}) {
    std::string why;
    const auto& res = modules::resolution(k);
    const bool ok = check_resolution(res, why);
    pass = pass && ok;
    detail.push_back(cat(res.to_string(), ok ? "  exact" : "  NOT EXACT: " + why));
  }
  detail.push_back("Ext^1(M_i, M_j), rows i, columns j:");
  for (int i = 1; i <= 11; ++i) {
    std::string row = cat(i < 10 ? " M" : "M", i, ":");
    for (int j = 1; j <= 11; ++j) row += cat(" ", modules::ext1_dim(i, j));
    detail.push_back(row);
  }
  // Summand types that appear together in one case of the generic decomposition table.
  const std::vector<std::set<int>> cases{
      {1, 4, 7, 8, 11}, {1, 4, 6, 8, 11}, {1, 4, 5, 6, 11}, {1, 4, 5, 7, 11}, {2, 3, 9, 11}, {3, 6, 9, 11},
      {5, 6, 9, 11},    {3, 6, 8, 11},    {2, 3, 10, 11},   {3, 8, 10, 11},   {7, 8, 10, 11}, {2, 5, 9, 11},
      {2, 5, 7, 11},    {2, 7, 10, 11}};
  std::set<std::pair<int, int>> pairs;
  for (const auto& s : cases)
    for (int a : s)
      for (int b : s)
        if (a != b) pairs.insert({a, b});
  std::size_t nonzero = 0;
  for (const auto& [a, b] : pairs) nonzero += modules::ext1_dim(a, b) != 0;
  detail.push_back(cat(pairs.size(), " ordered co-occurring pairs, nonzero Ext^1 on ", nonzero));
  report(11, pass && nonzero == 0, "resolutions exact, Ext^1 vanishes on co-occurring summands (exact)", detail);
}

}  // namespace

int main() {
  std::uint64_t seed = kDefaultSeed;
  if (const char* env = std::getenv("CRYSTAL_GRID_SEED"); env && *env) seed = std::stoull(env);
  std::cout << "# acceptance seed=" << seed << " prime=" << kPrime << " samples=" << kSamples << " bound=" << kBound
            << " box=" << kBox << "\n";
  const auto t0 = std::chrono::steady_clock::now();

  criterion_enumeration();
  criterion_axioms_2x2();
  criterion_axioms_an();
  criterion_inverses();
  criterion_counterexample();
  criterion_seminormal();
  criterion_connectivity();
  criterion_invariants();
  criterion_oracle(seed);
  criterion_decomposition(seed);
  criterion_resolutions();

  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass;
  std::cout << "# " << passed << "/" << results.size() << " criteria passed in " << secs << " s\n";
  return passed == results.size() ? 0 : 1;
}
