#include "crystal_grid/crystal.hpp"
#include "crystal_grid/crystal_2x2.hpp"
#include "crystal_grid/crystal_an.hpp"
#include "crystal_grid/crystal_graph.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace crystal_grid;

namespace {

CartanMatrix g22_cartan() { return GridQuiver({2, 2}).cartan(); }

// The 2x2 crystal with eps_1 shifted by one and phi left alone.
struct ShiftedEpsilon {
  using element_type = g22::Component2x2;
  g22::Crystal2x2 base{Family::plain};
  const CartanMatrix& cartan() const { return base.cartan(); }
  RootLatticeWeight weight(const element_type& c) const { return base.weight(c); }
  std::int64_t epsilon(const element_type& c, Color i) const { return base.epsilon(c, i) + (i == 1 ? 1 : 0); }
  std::int64_t phi(const element_type& c, Color i) const { return base.phi(c, i); }
  std::optional<element_type> e(const element_type& c, Color i) const { return base.e(c, i); }
  std::optional<element_type> f(const element_type& c, Color i) const { return base.f(c, i); }
  int degree(const element_type& c) const { return base.degree(c); }
  std::vector<int> dims(const element_type& c) const { return base.dims(c); }
  std::string label(const element_type& c) const { return base.label(c); }
};

// Raises with e_1 from the wrong element: the fourth axiom breaks.
struct SkewedRaise {
  using element_type = an::AnComponent;
  an::AnCrystal base{2, Family::plain};
  const CartanMatrix& cartan() const { return base.cartan(); }
  RootLatticeWeight weight(const element_type& c) const { return base.weight(c); }
  std::int64_t epsilon(const element_type& c, Color i) const { return base.epsilon(c, i); }
  std::int64_t phi(const element_type& c, Color i) const { return base.phi(c, i); }
  std::optional<element_type> e(const element_type& c, Color i) const {
    auto out = base.e(c, i);
    if (out && i == 1 && c.dims == std::vector<int>{2, 2}) out->dims = {0, 2};
    return out;
  }
  std::optional<element_type> f(const element_type& c, Color i) const { return base.f(c, i); }
  int degree(const element_type& c) const { return base.degree(c); }
  std::vector<int> dims(const element_type& c) const { return base.dims(c); }
  std::string label(const element_type& c) const { return base.label(c); }
};

}  // namespace

TEST(CartanMatrix, FromQuivers) {
  EXPECT_EQ(cartan_from_quiver({2, {{0, 1}}}).rows(), (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(cartan_from_quiver({1, {}}).rows(), (std::vector<std::vector<int>>{{2}}));
  const auto a = g22_cartan();
  EXPECT_EQ(a.rows(), (std::vector<std::vector<int>>{{2, -1, -1, 0}, {-1, 2, 0, -1}, {-1, 0, 2, -1}, {0, -1, -1, 2}}));
  EXPECT_TRUE(a.is_symmetric());
  // A double arrow counts twice.
  EXPECT_EQ(cartan_from_quiver({2, {{0, 1}, {0, 1}}}).entry(1, 2), -2);
  EXPECT_THROW(cartan_from_quiver({2, {{1, 1}}}), std::invalid_argument);
}

TEST(CartanMatrix, RejectsNonGeneralized) {
  EXPECT_THROW(CartanMatrix(std::vector<std::vector<int>>{{1}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, -1}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, -1}}), std::invalid_argument);
  EXPECT_NO_THROW(CartanMatrix({{2, -1}, {-3, 2}}));
}

TEST(Pairing, Examples) {
  const auto a = g22_cartan();
  EXPECT_EQ(pairing(a, 1, RootLatticeWeight::from_dims({1, 0, 0, 0})), -2);
  EXPECT_EQ(pairing(a, 1, RootLatticeWeight::from_dims({1, 1, 1, 2})), 0);
  EXPECT_EQ(pairing(cartan_from_quiver({2, {{0, 1}}}), 1, RootLatticeWeight::from_dims({0, 1})), 1);
  EXPECT_THROW(pairing(a, 5, RootLatticeWeight::from_dims({0, 0, 0, 0})), std::out_of_range);
}

TEST(Pairing, IsLinearInTheWeight) {
  // Property: <h_i, u + v> = <h_i, u> + <h_i, v> on a grid of small weights.
  const auto a = g22_cartan();
  for (int s = 0; s < 81; ++s) {
    const std::vector<int> du{s % 3, s / 3 % 3, s / 9 % 3, s / 27 % 3};
    const std::vector<int> dv{(s + 1) % 3, (s + 2) % 3, s / 27 % 3, s % 3};
    const auto u = RootLatticeWeight::from_dims(du), v = RootLatticeWeight::from_dims(dv);
    EXPECT_TRUE(u.in_negative_cone());
    for (Color i = 1; i <= 4; ++i) EXPECT_EQ(pairing(a, i, u + v), pairing(a, i, u) + pairing(a, i, v));
  }
}

TEST(Axioms, CleanOnTwoByTwoAndAn) {
  const auto comps = g22::components_up_to(6);
  for (auto fam : {Family::plain, Family::star}) {
    const auto rep = check_crystal_axioms(g22::Crystal2x2(fam), std::span<const g22::Component2x2>(comps), 6);
    EXPECT_TRUE(rep.clean()) << family_name(fam) << " " << rep.total();
    EXPECT_EQ(rep.elements_checked, comps.size());
  }
  const auto an3 = an::enumerate_up_to(3, 6);
  EXPECT_TRUE(check_crystal_axioms(an::AnCrystal(3, Family::plain), std::span<const an::AnComponent>(an3), 6).clean());
}

TEST(Axioms, ShiftedEpsilonIsCaught) {
  // A uniform shift of eps leaves the differences in axioms (2) and (3) intact,
  // so only axiom (1) can see it.
  const auto comps = g22::components_up_to(4);
  const auto rep = check_crystal_axioms(ShiftedEpsilon{}, std::span<const g22::Component2x2>(comps), 4);
  EXPECT_EQ(rep.by_axiom[0].size(), comps.size());
  for (const auto& v : rep.by_axiom[0]) EXPECT_EQ(v.color, 1);
  EXPECT_TRUE(rep.by_axiom[1].empty());
  EXPECT_TRUE(rep.by_axiom[2].empty());
}

TEST(Axioms, BrokenInverseIsCaught) {
  const auto frag = an::enumerate_up_to(2, 5);
  const auto rep = check_crystal_axioms(SkewedRaise{}, std::span<const an::AnComponent>(frag), 5);
  EXPECT_FALSE(rep.by_axiom[3].empty());
  EXPECT_FALSE(rep.by_axiom[1].empty());
}

TEST(Morphism, IdentityAndDuality) {
  const auto comps = g22::components_up_to(6);
  const std::span<const g22::Component2x2> frag(comps);
  const g22::Crystal2x2 plain(Family::plain), star(Family::star);
  const auto id = check_strict_morphism(plain, plain, frag, [](const g22::Component2x2& c) { return std::optional(c); }, 6);
  EXPECT_TRUE(id.clean());
  EXPECT_TRUE(id.strict());

  // dual: (B, star) -> (B, plain) with colors renamed by the involution.
  const RelabeledCrystal relabeled(plain, {4, 3, 2, 1});
  const auto d = check_strict_morphism(star, relabeled, frag,
                                       [](const g22::Component2x2& c) { return std::optional(g22::dual(c)); }, 6);
  EXPECT_TRUE(d.clean());
  EXPECT_TRUE(d.strict());

  const auto collapse = check_strict_morphism(plain, plain, frag, [](const g22::Component2x2&) { return std::optional(g22::u_C); }, 6);
  EXPECT_FALSE(collapse.by_clause[0].empty());
}

TEST(Morphism, RelabelingRejectsNonPermutations) {
  const g22::Crystal2x2 plain(Family::plain);
  EXPECT_THROW(RelabeledCrystal(plain, {1, 1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(RelabeledCrystal(plain, {1, 2, 3}), std::invalid_argument);
}

TEST(Graph, SmallBounds) {
  const g22::Crystal2x2 plain(Family::plain);
  const std::vector<g22::Component2x2> seed{g22::u_C};
  const auto g0 = build_crystal_graph(plain, std::span<const g22::Component2x2>(seed), 0);
  EXPECT_EQ(g0.nodes.size(), 1u);
  EXPECT_TRUE(g0.edges.empty());
  EXPECT_TRUE(is_connected_within(g0, "0,0,0,0:0,0").connected);

  const auto g2 = build_crystal_graph(plain, std::span<const g22::Component2x2>(seed), 2);
  auto has = [&](const CrystalGraph& g, const std::string& a, int c, const std::string& b) {
    for (const auto& e : g.edges)
      if (e.src == a && e.color == c && e.dst == b) return true;
    return false;
  };
  EXPECT_TRUE(has(g2, "0,0,0,0:0,0", 4, "0,0,0,1:0,0"));
  EXPECT_TRUE(has(g2, "0,0,0,1:0,0", 4, "0,0,0,2:0,0"));

  const std::vector<g22::Component2x2> s2{g22::Component2x2::parse("1,1,1,1:1,1")};
  const auto g5 = build_crystal_graph(plain, std::span<const g22::Component2x2>(s2), 5);
  EXPECT_TRUE(has(g5, "1,1,1,1:1,1", 1, "2,1,1,1:1,1"));
}

TEST(Graph, NodeCountMatchesEnumerationAndEdgesRespectWeights) {
  const g22::Crystal2x2 plain(Family::plain);
  const std::vector<g22::Component2x2> seed{g22::u_C};
  const auto g = build_crystal_graph(plain, std::span<const g22::Component2x2>(seed), 4);
  EXPECT_EQ(g.nodes.size(), g22::components_up_to(4).size());
  std::map<std::string, std::vector<std::int64_t>> wt;
  for (const auto& n : g.nodes) wt[n.id] = n.wt;
  const auto a = plain.cartan();
  for (const auto& e : g.edges) {
    auto w = wt.at(e.src);
    w[static_cast<std::size_t>(e.color - 1)] -= 1;
    EXPECT_EQ(w, wt.at(e.dst)) << e.src << " -" << e.color << "-> " << e.dst;
    // eps_i rises by one along every i-edge.
    const auto src = g22::Component2x2::parse(e.src), dst = g22::Component2x2::parse(e.dst);
    EXPECT_EQ(plain.epsilon(dst, e.color), plain.epsilon(src, e.color) + 1);
  }
  const auto conn = is_connected_within(g, "0,0,0,0:0,0");
  EXPECT_TRUE(conn.connected);
  EXPECT_EQ(conn.witnesses.size(), g.nodes.size());
  // Witness words are e-words that carry each node back to u_C.
  for (const auto& [id, w] : conn.witnesses) {
    EXPECT_TRUE(w.only(OpKind::e)) << id;
    const auto r = g22::apply_word(w, g22::Component2x2::parse(id));
    ASSERT_TRUE(r.result.has_value()) << id;
    EXPECT_EQ(*r.result, g22::u_C) << id;
  }
}

TEST(Graph, AnIsConnected) {
  const an::AnCrystal a4(4, Family::plain);
  const std::vector<an::AnComponent> seed{a4.highest()};
  const auto g = build_crystal_graph(a4, std::span<const an::AnComponent>(seed), 6);
  EXPECT_EQ(g.nodes.size(), an::enumerate_up_to(4, 6).size());
  EXPECT_TRUE(is_connected_within(g, "0,0,0,0").connected);
}

TEST(Graph, ReportsMissingNodes) {
  const g22::Crystal2x2 plain(Family::plain);
  const std::vector<g22::Component2x2> seed{g22::u_C};
  const auto g = build_crystal_graph(plain, std::span<const g22::Component2x2>(seed), 1);
  const auto r = is_connected_within(g, "0,0,0,0:0,0", {"0,0,0,0:0,0", "9,9,9,9:0,0"});
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.unreached, std::vector<std::string>{"9,9,9,9:0,0"});
}

TEST(Export, DotFormat) {
  EXPECT_EQ(export_dot(CrystalGraph{}), "digraph crystal {\n}\n");
  const g22::Crystal2x2 plain(Family::plain);
  const std::vector<g22::Component2x2> seed{g22::u_C};
  const auto g = build_crystal_graph(plain, std::span<const g22::Component2x2>(seed), 1);
  const auto dot = export_dot(g);
  EXPECT_NE(dot.find("\"0,0,0,0:0,0\" -> \"0,0,0,1:0,0\" [label=\"4\"];"), std::string::npos);
  EXPECT_EQ(dot, export_dot(build_crystal_graph(plain, std::span<const g22::Component2x2>(seed), 1)));
}

TEST(Export, JsonRoundTrip) {
  const g22::Crystal2x2 plain(Family::plain);
  const std::vector<g22::Component2x2> seed{g22::u_C};
  const auto g = build_crystal_graph(plain, std::span<const g22::Component2x2>(seed), 3);
  const auto text = export_json(g);
  EXPECT_EQ(text.rfind("{\"nodes\":[{\"id\":\"0,0,0,0:0,0\",\"dims\":[0,0,0,0],\"ranks\":[0,0],\"wt\":[0,0,0,0]}", 0), 0u);
  const auto back = import_json(text);
  EXPECT_EQ(export_json(back), text);
  EXPECT_EQ(back.nodes.size(), g.nodes.size());
  EXPECT_EQ(back.edges.size(), g.edges.size());

  const an::AnCrystal a2(2, Family::plain);
  const std::vector<an::AnComponent> s{a2.highest()};
  const auto ga = build_crystal_graph(a2, std::span<const an::AnComponent>(s), 2);
  EXPECT_NE(export_json(ga).find("\"ranks\":null"), std::string::npos);
  EXPECT_EQ(export_json(import_json(export_json(ga))), export_json(ga));
}
