#include "crystal_grid/crystal_2x2.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace crystal_grid;
using g22::Component2x2;

namespace {

Component2x2 C(const char* text) { return Component2x2::parse(text); }

// Validity written out from the rank conditions, separately from the library.
bool valid_pair(const g22::Dims4& d, int r1, int r2) {
  const int outer = d[0] + d[3], inner = d[1] + d[2];
  if (outer >= inner) return r1 + r2 == inner && r1 >= 0 && r2 >= 0 && r1 <= d[0] && r2 <= d[3];
  return r1 == d[0] && r2 == d[3];
}

std::vector<g22::Dims4> dims_up_to(int bound) {
  std::vector<g22::Dims4> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (int c = 0; a + b + c <= bound; ++c)
        for (int d = 0; a + b + c + d <= bound; ++d) out.push_back({a, b, c, d});
  return out;
}

constexpr int kCap = 24;

}  // namespace

TEST(Components, EnumerationExamples) {
  const auto e = g22::enumerate_components({2, 1, 1, 2});
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], C("2,1,1,2:0,2"));
  EXPECT_EQ(e[1], C("2,1,1,2:1,1"));
  EXPECT_EQ(e[2], C("2,1,1,2:2,0"));
  EXPECT_EQ(g22::enumerate_components({0, 0, 0, 0}), std::vector<Component2x2>{g22::u_C});
  EXPECT_EQ(g22::enumerate_components({1, 2, 2, 1}), std::vector<Component2x2>{C("1,2,2,1:1,1")});
  EXPECT_EQ(g22::enumerate_components({3, 1, 1, 0}), std::vector<Component2x2>{C("3,1,1,0:2,0")});
}

TEST(Components, ValidationAndParsing) {
  EXPECT_THROW(C("1,2,2,1:0,0"), std::invalid_argument);
  EXPECT_THROW(C("2,1,1,2:1,0"), std::invalid_argument);
  EXPECT_THROW(C("2,1,1,2"), std::invalid_argument);
  EXPECT_THROW(C("2,1,x,2:1,1"), std::invalid_argument);
  EXPECT_THROW(C("-1,0,0,0:0,0"), std::invalid_argument);
  EXPECT_EQ(C("2,1,1,2:1,1").to_string(), "2,1,1,2:1,1");
  EXPECT_FALSE(Component2x2::make({1, 1, 0, 0}, {0, 1}).has_value());
}

TEST(ComponentsProperty, CountMatchesBruteForceAndClosedForm) {
  for (const auto& d : dims_up_to(10)) {
    std::size_t brute = 0;
    for (int r1 = 0; r1 <= 10; ++r1)
      for (int r2 = 0; r2 <= 10; ++r2) brute += valid_pair(d, r1, r2);
    const int s = d[1] + d[2];
    const std::size_t closed =
        d[0] + d[3] >= s ? static_cast<std::size_t>(std::min(d[0], s) - std::max(0, s - d[3]) + 1) : 1;
    const auto listed = g22::enumerate_components(d);
    ASSERT_EQ(listed.size(), brute);
    ASSERT_EQ(listed.size(), closed);
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end(), [](auto& a, auto& b) { return a.r1() < b.r1(); }));
  }
}

TEST(Operators, RaisingExamples) {
  EXPECT_EQ(g22::apply_e(C("2,1,1,2:1,1"), 1), C("1,1,1,2:1,1"));
  EXPECT_EQ(g22::apply_e(C("1,1,1,2:1,1"), 1), std::nullopt);
  EXPECT_EQ(g22::apply_e(C("1,2,1,2:1,2"), 2), C("1,1,1,2:1,1"));
  EXPECT_EQ(g22::apply_e(C("0,0,0,2:0,0"), 4), C("0,0,0,1:0,0"));
}

TEST(Operators, LoweringExamples) {
  EXPECT_EQ(g22::apply_f(g22::u_C, 4), C("0,0,0,1:0,0"));
  EXPECT_EQ(g22::apply_f(C("0,1,0,0:0,0"), 4), std::nullopt);
  EXPECT_EQ(g22::apply_f(C("1,1,1,2:1,1"), 1), C("2,1,1,2:1,1"));
  EXPECT_EQ(g22::apply_f(C("1,1,0,0:1,0"), 3), std::nullopt);
}

TEST(Operators, StarExamples) {
  EXPECT_EQ(g22::apply_f_star(C("1,1,1,1:1,1"), 1), C("2,1,1,1:1,1"));
  EXPECT_EQ(g22::apply_f_star(C("0,1,1,0:0,0"), 1), std::nullopt);
  EXPECT_EQ(g22::apply_e_star(C("0,0,0,1:0,0"), 4), g22::u_C);
}

TEST(Operators, BlockedRankRaiseGivesZero) {
  // d1 + d4 > d2 + d3 and r2 = d4: no component of the raised dims has r2 + 1.
  EXPECT_EQ(g22::apply_f(C("1,0,0,0:0,0"), 2), std::nullopt);
  EXPECT_EQ(g22::apply_e(C("1,1,0,0:1,0"), 2), std::nullopt);
  EXPECT_EQ(g22::apply_f_star(C("0,0,0,1:0,0"), 3), std::nullopt);
}

TEST(Invariants, Examples) {
  EXPECT_EQ(g22::epsilon(C("1,1,1,2:1,1"), 1), 1);
  EXPECT_EQ(g22::epsilon_prime(C("1,1,1,2:1,1"), 1), 0);
  EXPECT_EQ(g22::phi_prime(C("0,1,1,0:0,0"), 4), g22::ExtendedInt::of(0));
  EXPECT_EQ(g22::epsilon_star(C("3,1,1,2:1,1"), 4), 2);
  EXPECT_EQ(g22::invariant(C("1,1,1,2:1,1"), 1, g22::Invariant::phi_prime), g22::ExtendedInt::inf());
  EXPECT_EQ(g22::ExtendedInt::inf().to_string(), "inf");
}

TEST(Duality, Examples) {
  EXPECT_EQ(g22::dual(C("2,1,1,2:1,1")), C("2,1,1,2:1,1"));
  EXPECT_EQ(g22::dual(C("3,1,1,0:2,0")), C("0,1,1,3:0,2"));
  EXPECT_EQ(g22::dual(g22::dual(C("1,2,0,4:1,1"))), C("1,2,0,4:1,1"));
}

TEST(Words, ConnectivityAndCounterexample) {
  const auto w = g22::connectivity_word(C("1,1,1,2:1,1"));
  // e4^{r2} e3^{d3} e2^{d2} e1^{d1} e4^{d4-r2} has length d1 + d2 + d3 + d4.
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(g22::apply_word(w, C("1,1,1,2:1,1")).result, g22::u_C);
  EXPECT_TRUE(g22::connectivity_word(g22::u_C).empty());
  const auto w2 = g22::connectivity_word(C("2,1,1,2:2,0"));
  EXPECT_EQ(w2.to_string(), OperatorWord::parse("e3 e2 e1^2 e4^2").to_string());
  EXPECT_EQ(g22::apply_word(w2, C("2,1,1,2:2,0")).result, g22::u_C);

  const auto [a, b] = g22::counterexample_words();
  EXPECT_EQ(g22::apply_word(a, g22::u_C).result, C("2,0,2,2:0,2"));
  EXPECT_EQ(g22::apply_word(b, g22::u_C).result, C("2,0,2,2:0,2"));
}

TEST(TwoByTwoProperty, AxiomsBothFamilies) {
  const auto comps = g22::components_up_to(7);
  for (auto fam : {Family::plain, Family::star}) {
    const auto r = check_crystal_axioms(g22::Crystal2x2(fam), std::span<const Component2x2>(comps), 7);
    EXPECT_TRUE(r.clean()) << family_name(fam) << " " << r.total();
  }
}

TEST(TwoByTwoProperty, OperatorsNeverProduceInvalidPairs) {
  // table_output throws on an invalid pair; sweep all operators.
  for (const auto& c : g22::components_up_to(9))
    for (Color i = 1; i <= 4; ++i)
      for (auto k : {OpKind::e, OpKind::f, OpKind::e_star, OpKind::f_star}) EXPECT_NO_THROW(g22::apply(c, {k, i}));
}

TEST(TwoByTwoProperty, DualityConjugation) {
  for (const auto& c : g22::components_up_to(8))
    for (Color i = 1; i <= 4; ++i) {
      const Color ai = g22::involution(i);
      auto through = [&](auto op) {
        const auto y = op(g22::dual(c), ai);
        return y ? std::optional(g22::dual(*y)) : std::nullopt;
      };
      EXPECT_EQ(g22::apply_e_star(c, i), through(g22::apply_e)) << c.to_string() << " " << i;
      EXPECT_EQ(g22::apply_f_star(c, i), through(g22::apply_f)) << c.to_string() << " " << i;
      EXPECT_EQ(g22::epsilon_star(c, i), g22::epsilon(g22::dual(c), ai));
      EXPECT_EQ(g22::epsilon_star_prime(c, i), g22::epsilon_prime(g22::dual(c), ai));
    }
}

TEST(TwoByTwoProperty, PrimedInvariantsCountIterations) {
  for (const auto& c : g22::components_up_to(8))
    for (Color i = 1; i <= 4; ++i) {
      EXPECT_EQ(g22::count_applications(c, i, OpKind::e, kCap), g22::ExtendedInt::of(g22::epsilon_prime(c, i)));
      EXPECT_EQ(g22::count_applications(c, i, OpKind::e_star, kCap), g22::ExtendedInt::of(g22::epsilon_star_prime(c, i)));
      EXPECT_EQ(g22::count_applications(c, i, OpKind::f, kCap), g22::phi_prime(c, i)) << c.to_string() << " " << i;
      EXPECT_EQ(g22::count_applications(c, i, OpKind::f_star, kCap), g22::phi_star_prime(c, i));
      EXPECT_LE(g22::epsilon_prime(c, i), g22::epsilon(c, i));
      EXPECT_LE(g22::epsilon_star_prime(c, i), g22::epsilon_star(c, i));
    }
}

TEST(TwoByTwoProperty, TabulatedPhiPrimeDisagreesOnlyWhereTheRankChainStops) {
  // The tabulated infinity fails exactly when d1 + d4 > d2 + d3 and r1 < d1
  // (resp. r2 < d4 for the star version) with the operator applicable.
  for (const auto& c : g22::components_up_to(8))
    for (Color i = 2; i <= 3; ++i) {
      const bool blocked = c.outer() > c.inner() && c.r1() < c.d(1) && c.d(i) >= c.r1();
      EXPECT_EQ(g22::tabulated_phi_prime(c, i) != g22::phi_prime(c, i), blocked) << c.to_string();
      const bool blocked_star = c.outer() > c.inner() && c.r2() < c.d(4) && c.d(i) >= c.r2();
      EXPECT_EQ(g22::tabulated_phi_star_prime(c, i) != g22::phi_star_prime(c, i), blocked_star) << c.to_string();
    }
}

TEST(TwoByTwoProperty, ConnectivityWordReachesTheBase) {
  for (const auto& c : g22::components_up_to(8)) {
    const auto w = g22::connectivity_word(c);
    const auto t = g22::apply_word(w, c);
    ASSERT_TRUE(t.result.has_value()) << c.to_string();
    EXPECT_EQ(*t.result, g22::u_C);
    EXPECT_EQ(static_cast<int>(w.size()), c.total());
  }
}
