#pragma once

// The crystal on irreducible components of the 2x2 commutative grid.
//
// Vertex numbering: 1 = (1,1), 2 = (2,1), 3 = (1,2), 4 = (2,2); arrows
// 1->2, 1->3, 2->4, 3->4. A component (d; r1, r2) is the closure of the locus
// where the stacked map out of vertex 1 has rank r1 and the stacked map into
// vertex 4 has rank r2. With s = d2 + d3:
//   d1 + d4 >= s:  r1 + r2 = s, r1 <= d1, r2 <= d4
//   d1 + d4 <  s:  (r1, r2) = (d1, d4)

#include "crystal_grid/cartan.hpp"
#include "crystal_grid/crystal.hpp"
#include "crystal_grid/grid_quiver.hpp"
#include "crystal_grid/operator_word.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal_grid::g22 {

using Dims4 = std::array<int, 4>;
using Ranks2 = std::array<int, 2>;

class Component2x2 {
 public:
  /// u_C, the component of the zero dimension vector.
  Component2x2() = default;

  Component2x2(Dims4 dims, Ranks2 ranks) : dims_(dims), ranks_(ranks) {
    if (!is_valid(dims, ranks)) {
      throw std::invalid_argument("not a component of the 2x2 grid: " + format(dims, ranks));
    }
  }

  static bool is_valid(const Dims4& d, const Ranks2& r) {
    for (int x : d)
      if (x < 0) return false;
    if (r[0] < 0 || r[1] < 0) return false;
    const int s = d[1] + d[2];
    if (d[0] + d[3] >= s) return r[0] + r[1] == s && r[0] <= d[0] && r[1] <= d[3];
    return r[0] == d[0] && r[1] == d[3];
  }

  static std::optional<Component2x2> make(const Dims4& d, const Ranks2& r) {
    if (!is_valid(d, r)) return std::nullopt;
    return Component2x2(d, r);
  }

  /// Parses "d1,d2,d3,d4:r1,r2".
  static Component2x2 parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("component '" + text + "' lacks ':'");
    const auto d = parse_ints(text.substr(0, colon), 4, text);
    const auto r = parse_ints(text.substr(colon + 1), 2, text);
    return Component2x2({d[0], d[1], d[2], d[3]}, {r[0], r[1]});
  }

  const Dims4& dims() const { return dims_; }
  const Ranks2& ranks() const { return ranks_; }
  /// d_i for 1-based vertex i.
  int d(int i) const { return dims_.at(static_cast<std::size_t>(i - 1)); }
  int r1() const { return ranks_[0]; }
  int r2() const { return ranks_[1]; }
  int total() const { return dims_[0] + dims_[1] + dims_[2] + dims_[3]; }
  /// d1 + d4 and d2 + d3, the two sides of the case split.
  int outer() const { return dims_[0] + dims_[3]; }
  int inner() const { return dims_[1] + dims_[2]; }

  std::string to_string() const { return format(dims_, ranks_); }

  friend bool operator==(const Component2x2&, const Component2x2&) = default;
  /// Total dimension first, then dims, then ranks.
  friend std::strong_ordering operator<=>(const Component2x2& a, const Component2x2& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    if (auto c = a.dims_ <=> b.dims_; c != 0) return c;
    return a.ranks_ <=> b.ranks_;
  }

 private:
  static std::string format(const Dims4& d, const Ranks2& r) {
    std::ostringstream os;
    os << d[0] << ',' << d[1] << ',' << d[2] << ',' << d[3] << ':' << r[0] << ',' << r[1];
    return os.str();
  }

  static std::vector<int> parse_ints(const std::string& part, std::size_t want, const std::string& whole) {
    std::vector<int> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad integer in component '" + whole + "'");
      }
      if (used != item.size()) throw std::invalid_argument("bad integer in component '" + whole + "'");
      out.push_back(v);
    }
    if (out.size() != want) throw std::invalid_argument("component '" + whole + "' has the wrong arity");
    return out;
  }

  Dims4 dims_{0, 0, 0, 0};
  Ranks2 ranks_{0, 0};
};

inline const Component2x2 u_C{};

/// All components with dimension vector d, ordered by r1 ascending.
inline std::vector<Component2x2> enumerate_components(const Dims4& d) {
  for (int x : d)
    if (x < 0) throw std::invalid_argument("enumerate_components: negative dimension");
  std::vector<Component2x2> out;
  const int s = d[1] + d[2];
  if (d[0] + d[3] < s) {
    out.emplace_back(d, Ranks2{d[0], d[3]});
    return out;
  }
  for (int r1 = std::max(0, s - d[3]); r1 <= std::min(d[0], s); ++r1) out.emplace_back(d, Ranks2{r1, s - r1});
  return out;
}

/// Every component with total dimension at most `bound`, in component order.
inline std::vector<Component2x2> components_up_to(int bound) {
  std::vector<Component2x2> out;
  for (int d1 = 0; d1 <= bound; ++d1)
    for (int d2 = 0; d1 + d2 <= bound; ++d2)
      for (int d3 = 0; d1 + d2 + d3 <= bound; ++d3)
        for (int d4 = 0; d1 + d2 + d3 + d4 <= bound; ++d4)
          for (const auto& c : enumerate_components({d1, d2, d3, d4})) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every component with all d_i <= cap.
inline std::vector<Component2x2> components_in_box(int cap) {
  std::vector<Component2x2> out;
  for (int d1 = 0; d1 <= cap; ++d1)
    for (int d2 = 0; d2 <= cap; ++d2)
      for (int d3 = 0; d3 <= cap; ++d3)
        for (int d4 = 0; d4 <= cap; ++d4)
          for (const auto& c : enumerate_components({d1, d2, d3, d4})) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void check_color(Color i) {
  if (i < 1 || i > 4) throw std::out_of_range("color " + std::to_string(i) + " outside 1..4");
}

/// Builds the case-table output; an invalid pair here means the table was misread.
inline Component2x2 table_output(const Component2x2& c, Color i, int delta, Ranks2 r) {
  Dims4 d = c.dims();
  d[static_cast<std::size_t>(i - 1)] += delta;
  auto out = Component2x2::make(d, r);
  if (!out) {
    throw std::logic_error("operator table produced an invalid component from " + c.to_string());
  }
  return *out;
}

}  // namespace detail

/// Raising operator e_i (lowers d_i).
inline std::optional<Component2x2> apply_e(const Component2x2& c, Color i) {
  detail::check_color(i);
  const int L = c.outer(), s = c.inner(), r1 = c.r1(), r2 = c.r2();
  switch (i) {
    case 1:
      if (L <= s) {
        // Here r1 = d1, so d1 = 0 leaves nothing to remove.
        if (c.d(1) == 0) return std::nullopt;
        return detail::table_output(c, 1, -1, {r1 - 1, r2});
      }
      if (c.d(1) > r1) return detail::table_output(c, 1, -1, {r1, r2});
      return std::nullopt;
    case 2:
    case 3:
      if (c.d(i) <= r1) return std::nullopt;
      if (L < s) return detail::table_output(c, i, -1, {r1, r2});
      return detail::table_output(c, i, -1, {r1, r2 - 1});
    default:
      if (c.d(4) > r2) return detail::table_output(c, 4, -1, {r1, r2});
      return std::nullopt;
  }
}

/// Lowering operator f_i (raises d_i).
///
/// For colors 2 and 3 with d1 + d4 > d2 + d3 the raised rank r2 + 1 must stay
/// within d4; when r2 = d4 no component has the required ranks and the result
/// is 0, the only value compatible with e_i on the target dimension vector.
inline std::optional<Component2x2> apply_f(const Component2x2& c, Color i) {
  detail::check_color(i);
  const int L = c.outer(), s = c.inner(), r1 = c.r1(), r2 = c.r2();
  switch (i) {
    case 1:
      if (L < s) return detail::table_output(c, 1, +1, {r1 + 1, r2});
      return detail::table_output(c, 1, +1, {r1, r2});
    case 2:
    case 3:
      if (c.d(i) < r1) return std::nullopt;
      if (L <= s) return detail::table_output(c, i, +1, {r1, r2});
      if (r2 == c.d(4)) return std::nullopt;
      return detail::table_output(c, i, +1, {r1, r2 + 1});
    default:
      if (L >= s) return detail::table_output(c, 4, +1, {r1, r2});
      return std::nullopt;
  }
}

inline std::optional<Component2x2> apply_e_star(const Component2x2& c, Color i) {
  detail::check_color(i);
  const int L = c.outer(), s = c.inner(), r1 = c.r1(), r2 = c.r2();
  switch (i) {
    case 1:
      if (c.d(1) > r1) return detail::table_output(c, 1, -1, {r1, r2});
      return std::nullopt;
    case 2:
    case 3:
      if (c.d(i) <= r2) return std::nullopt;
      if (L < s) return detail::table_output(c, i, -1, {r1, r2});
      return detail::table_output(c, i, -1, {r1 - 1, r2});
    default:
      if (L <= s) {
        if (c.d(4) == 0) return std::nullopt;
        return detail::table_output(c, 4, -1, {r1, r2 - 1});
      }
      if (c.d(4) > r2) return detail::table_output(c, 4, -1, {r1, r2});
      return std::nullopt;
  }
}

/// Star lowering operator; colors 2 and 3 return 0 when r1 = d1 blocks the
/// raised rank, mirroring apply_f under duality.
inline std::optional<Component2x2> apply_f_star(const Component2x2& c, Color i) {
  detail::check_color(i);
  const int L = c.outer(), s = c.inner(), r1 = c.r1(), r2 = c.r2();
  switch (i) {
    case 1:
      if (L >= s) return detail::table_output(c, 1, +1, {r1, r2});
      return std::nullopt;
    case 2:
    case 3:
      if (c.d(i) < r2) return std::nullopt;
      if (L <= s) return detail::table_output(c, i, +1, {r1, r2});
      if (r1 == c.d(1)) return std::nullopt;
      return detail::table_output(c, i, +1, {r1 + 1, r2});
    default:
      if (L < s) return detail::table_output(c, 4, +1, {r1, r2 + 1});
      return detail::table_output(c, 4, +1, {r1, r2});
  }
}

inline std::optional<Component2x2> apply(const Component2x2& c, const OpStep& step) {
  switch (step.kind) {
    case OpKind::e: return apply_e(c, step.color);
    case OpKind::f: return apply_f(c, step.color);
    case OpKind::e_star: return apply_e_star(c, step.color);
    case OpKind::f_star: return apply_f_star(c, step.color);
  }
  return std::nullopt;
}

inline WordTrace<Component2x2> apply_word(const OperatorWord& word, const Component2x2& start) {
  return crystal_grid::apply_word(word, start, [](const Component2x2& c, const OpStep& s) { return apply(c, s); });
}

/// ((d4,d3,d2,d1); (r2,r1)): transpose followed by relabeling through a.
inline Component2x2 dual(const Component2x2& c) {
  const auto& d = c.dims();
  return Component2x2({d[3], d[2], d[1], d[0]}, {c.r2(), c.r1()});
}

/// a(1) = 4, a(2) = 3.
inline Color involution(Color i) {
  detail::check_color(i);
  return 5 - i;
}

/// A natural number or infinity.
struct ExtendedInt {
  std::int64_t value = 0;
  bool infinite = false;

  static ExtendedInt inf() { return {0, true}; }
  static ExtendedInt of(std::int64_t v) { return {v, false}; }

  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

enum class Invariant {
  epsilon,
  phi,
  epsilon_prime,
  phi_prime,
  epsilon_star,
  phi_star,
  epsilon_star_prime,
  phi_star_prime,
};

inline const char* invariant_name(Invariant k) {
  switch (k) {
    case Invariant::epsilon: return "epsilon";
    case Invariant::phi: return "phi";
    case Invariant::epsilon_prime: return "epsilon'";
    case Invariant::phi_prime: return "phi'";
    case Invariant::epsilon_star: return "epsilon*";
    case Invariant::phi_star: return "phi*";
    case Invariant::epsilon_star_prime: return "epsilon*'";
    case Invariant::phi_star_prime: return "phi*'";
  }
  return "?";
}

inline constexpr std::array<Invariant, 8> kAllInvariants{
    Invariant::epsilon,      Invariant::phi,      Invariant::epsilon_prime,      Invariant::phi_prime,
    Invariant::epsilon_star, Invariant::phi_star, Invariant::epsilon_star_prime, Invariant::phi_star_prime};

/// <h_i, wt(c)> with wt = -sum d_j alpha_j.
inline int weight_pairing(const Component2x2& c, Color i) {
  detail::check_color(i);
  switch (i) {
    case 1: return -2 * c.d(1) + c.d(2) + c.d(3);
    case 2: return -2 * c.d(2) + c.d(1) + c.d(4);
    case 3: return -2 * c.d(3) + c.d(1) + c.d(4);
    default: return -2 * c.d(4) + c.d(2) + c.d(3);
  }
}

inline int epsilon(const Component2x2& c, Color i) {
  detail::check_color(i);
  if (i == 1) return c.d(1);
  if (i == 4) return c.d(4) - c.r2();
  return std::max(0, c.d(i) - c.r1());
}

inline int epsilon_star(const Component2x2& c, Color i) {
  detail::check_color(i);
  if (i == 1) return c.d(1) - c.r1();
  if (i == 4) return c.d(4);
  return std::max(0, c.d(i) - c.r2());
}

inline int phi(const Component2x2& c, Color i) { return epsilon(c, i) + weight_pairing(c, i); }
inline int phi_star(const Component2x2& c, Color i) { return epsilon_star(c, i) + weight_pairing(c, i); }

/// max{k : e_i^k c != 0}.
inline int epsilon_prime(const Component2x2& c, Color i) {
  detail::check_color(i);
  switch (i) {
    case 1: return c.d(4) == c.r2() ? c.d(1) : c.d(1) - c.r1();
    case 4: return c.d(4) - c.r2();
    default: return std::max(0, c.d(i) - c.r1());
  }
}

/// max{k : e*_i^k c != 0}.
inline int epsilon_star_prime(const Component2x2& c, Color i) {
  detail::check_color(i);
  switch (i) {
    case 1: return c.d(1) - c.r1();
    case 4: return c.d(1) > c.r1() ? c.d(4) - c.r2() : c.d(4);
    default: return std::max(0, c.d(i) - c.r2());
  }
}

/// sup{k : f_i^k c != 0}. For colors 2 and 3 in the region d1 + d4 > d2 + d3
/// with r1 < d1, each step raises r2, and the chain stops once r2 reaches d4.
inline ExtendedInt phi_prime(const Component2x2& c, Color i) {
  detail::check_color(i);
  switch (i) {
    case 1: return ExtendedInt::inf();
    case 4: return c.outer() >= c.inner() ? ExtendedInt::inf() : ExtendedInt::of(0);
    default:
      if (c.d(i) < c.r1()) return ExtendedInt::of(0);
      if (c.outer() > c.inner() && c.r1() < c.d(1)) return ExtendedInt::of(c.d(4) - c.r2());
      return ExtendedInt::inf();
  }
}

/// sup{k : f*_i^k c != 0}; the mirror image of phi_prime under dual.
inline ExtendedInt phi_star_prime(const Component2x2& c, Color i) {
  detail::check_color(i);
  return phi_prime(dual(c), involution(i));
}

/// The eight invariants. Plain and star epsilon/phi are integers; the primed
/// phi kinds can be infinite.
inline ExtendedInt invariant(const Component2x2& c, Color i, Invariant kind) {
  switch (kind) {
    case Invariant::epsilon: return ExtendedInt::of(epsilon(c, i));
    case Invariant::phi: return ExtendedInt::of(phi(c, i));
    case Invariant::epsilon_prime: return ExtendedInt::of(epsilon_prime(c, i));
    case Invariant::phi_prime: return phi_prime(c, i);
    case Invariant::epsilon_star: return ExtendedInt::of(epsilon_star(c, i));
    case Invariant::phi_star: return ExtendedInt::of(phi_star(c, i));
    case Invariant::epsilon_star_prime: return ExtendedInt::of(epsilon_star_prime(c, i));
    case Invariant::phi_star_prime: return phi_star_prime(c, i);
  }
  return {};
}

/// The tabulated closed forms for phi' and phi*', which claim infinity for
/// colors 2 and 3 whenever the operator applies once. They disagree with
/// iteration when d1 + d4 > d2 + d3 and the chain runs into r2 = d4 (resp.
/// r1 = d1); kept so the disagreement can be measured.
inline ExtendedInt tabulated_phi_prime(const Component2x2& c, Color i) {
  detail::check_color(i);
  switch (i) {
    case 1: return ExtendedInt::inf();
    case 4: return c.outer() >= c.inner() ? ExtendedInt::inf() : ExtendedInt::of(0);
    default: return c.d(i) >= c.r1() ? ExtendedInt::inf() : ExtendedInt::of(0);
  }
}

inline ExtendedInt tabulated_phi_star_prime(const Component2x2& c, Color i) {
  detail::check_color(i);
  switch (i) {
    case 1: return c.outer() >= c.inner() ? ExtendedInt::inf() : ExtendedInt::of(0);
    case 4: return ExtendedInt::inf();
    default: return c.d(i) >= c.r2() ? ExtendedInt::inf() : ExtendedInt::of(0);
  }
}

/// Number of times `kind`_i applies in a row starting from c; infinite once
/// `cap` applications succeed.
inline ExtendedInt count_applications(const Component2x2& c, Color i, OpKind kind, int cap) {
  std::optional<Component2x2> cur = c;
  for (int k = 0; k < cap; ++k) {
    cur = apply(*cur, {kind, i});
    if (!cur) return ExtendedInt::of(k);
  }
  return ExtendedInt::inf();
}

/// e_4^{r2} e_3^{d3} e_2^{d2} e_1^{d1} e_4^{d4 - r2}, which walks c down to u_C.
inline OperatorWord connectivity_word(const Component2x2& c) {
  OperatorWord w;
  w.then_first(OpKind::e, 4, c.r2())
      .then_first(OpKind::e, 3, c.d(3))
      .then_first(OpKind::e, 2, c.d(2))
      .then_first(OpKind::e, 1, c.d(1))
      .then_first(OpKind::e, 4, c.d(4) - c.r2());
  return w;
}

struct WordPair {
  OperatorWord a;
  OperatorWord b;
};

/// f3 f1^2 f3 f4^2 and f1^2 f3^2 f4^2: equal on u_C here, distinct in B(infinity).
inline WordPair counterexample_words() {
  return {OperatorWord::parse("f3 f1^2 f3 f4^2"), OperatorWord::parse("f1^2 f3^2 f4^2")};
}

/// Plain or star crystal structure on the 2x2 components.
class Crystal2x2 {
 public:
  using element_type = Component2x2;

  explicit Crystal2x2(Family family) : family_(family), cartan_(GridQuiver({2, 2}).cartan()) {}

  Family family() const { return family_; }
  const CartanMatrix& cartan() const { return cartan_; }

  RootLatticeWeight weight(const Component2x2& c) const {
    return RootLatticeWeight::from_dims({c.d(1), c.d(2), c.d(3), c.d(4)});
  }
  std::int64_t epsilon(const Component2x2& c, Color i) const {
    return family_ == Family::plain ? g22::epsilon(c, i) : g22::epsilon_star(c, i);
  }
  std::int64_t phi(const Component2x2& c, Color i) const {
    return family_ == Family::plain ? g22::phi(c, i) : g22::phi_star(c, i);
  }
  std::optional<Component2x2> e(const Component2x2& c, Color i) const {
    return family_ == Family::plain ? apply_e(c, i) : apply_e_star(c, i);
  }
  std::optional<Component2x2> f(const Component2x2& c, Color i) const {
    return family_ == Family::plain ? apply_f(c, i) : apply_f_star(c, i);
  }
  int degree(const Component2x2& c) const { return c.total(); }
  std::vector<int> dims(const Component2x2& c) const { return {c.d(1), c.d(2), c.d(3), c.d(4)}; }
  std::array<int, 2> ranks(const Component2x2& c) const { return c.ranks(); }
  std::string label(const Component2x2& c) const { return c.to_string(); }

 private:
  Family family_;
  CartanMatrix cartan_;
};

}  // namespace crystal_grid::g22
