#pragma once

// The crystal on components for the equioriented A_n chain. Each E_C(nu) is a
// vector space, so a component is just its dimension vector.

#include "crystal_grid/cartan.hpp"
#include "crystal_grid/crystal.hpp"
#include "crystal_grid/grid_quiver.hpp"
#include "crystal_grid/operator_word.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal_grid::an {

struct AnComponent {
  std::vector<int> dims;

  int n() const { return static_cast<int>(dims.size()); }
  int total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

  /// nu_i with nu_0 = nu_{n+1} = 0.
  int at(int i) const { return (i < 1 || i > n()) ? 0 : dims[static_cast<std::size_t>(i - 1)]; }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < dims.size(); ++k) out += (k ? "," : "") + std::to_string(dims[k]);
    return out;
  }

  friend bool operator==(const AnComponent&, const AnComponent&) = default;
  friend auto operator<=>(const AnComponent&, const AnComponent&) = default;
};

inline AnComponent make_component(std::vector<int> dims) {
  for (int d : dims)
    if (d < 0) throw std::invalid_argument("A_n component: negative dimension");
  return AnComponent{std::move(dims)};
}

namespace detail {
inline void check_color(const AnComponent& c, Color i) {
  if (i < 1 || i > c.n()) {
    throw std::out_of_range("color " + std::to_string(i) + " outside 1.." + std::to_string(c.n()));
  }
}
inline AnComponent bumped(AnComponent c, Color i, int delta) {
  c.dims[static_cast<std::size_t>(i - 1)] += delta;
  return c;
}
}  // namespace detail

inline std::optional<AnComponent> apply_e(const AnComponent& c, Color i) {
  detail::check_color(c, i);
  if (c.at(i - 1) < c.at(i)) return detail::bumped(c, i, -1);
  return std::nullopt;
}

inline std::optional<AnComponent> apply_f(const AnComponent& c, Color i) {
  detail::check_color(c, i);
  if (c.at(i - 1) <= c.at(i)) return detail::bumped(c, i, +1);
  return std::nullopt;
}

inline std::optional<AnComponent> apply_e_star(const AnComponent& c, Color i) {
  detail::check_color(c, i);
  if (c.at(i) > c.at(i + 1)) return detail::bumped(c, i, -1);
  return std::nullopt;
}

inline std::optional<AnComponent> apply_f_star(const AnComponent& c, Color i) {
  detail::check_color(c, i);
  if (c.at(i) >= c.at(i + 1)) return detail::bumped(c, i, +1);
  return std::nullopt;
}

inline std::optional<AnComponent> apply(const AnComponent& c, const OpStep& step) {
  switch (step.kind) {
    case OpKind::e: return apply_e(c, step.color);
    case OpKind::f: return apply_f(c, step.color);
    case OpKind::e_star: return apply_e_star(c, step.color);
    case OpKind::f_star: return apply_f_star(c, step.color);
  }
  return std::nullopt;
}

/// Cokernel dimension of the generic incoming map: max(0, nu_i - nu_{i-1}).
inline int epsilon(const AnComponent& c, Color i) {
  detail::check_color(c, i);
  return std::max(0, c.at(i) - c.at(i - 1));
}

/// Kernel dimension of the generic outgoing map: max(0, nu_i - nu_{i+1}).
inline int epsilon_star(const AnComponent& c, Color i) {
  detail::check_color(c, i);
  return std::max(0, c.at(i) - c.at(i + 1));
}

/// <h_i, wt> for wt = -sum nu_j alpha_j on the chain.
inline int weight_pairing(const AnComponent& c, Color i) {
  return -(2 * c.at(i) - c.at(i - 1) - c.at(i + 1));
}

inline int phi(const AnComponent& c, Color i) { return epsilon(c, i) + weight_pairing(c, i); }
inline int phi_star(const AnComponent& c, Color i) { return epsilon_star(c, i) + weight_pairing(c, i); }

inline AnComponent dual(const AnComponent& c) {
  AnComponent out = c;
  std::reverse(out.dims.begin(), out.dims.end());
  return out;
}

/// All dimension vectors of length n with entries summing to exactly `total`.
inline std::vector<AnComponent> enumerate(int n, int total) {
  std::vector<AnComponent> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back({cur});
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (n == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, total);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<AnComponent> enumerate_up_to(int n, int bound) {
  std::vector<AnComponent> out;
  for (int t = 0; t <= bound; ++t) {
    auto level = enumerate(n, t);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// The plain or star crystal structure on the A_n components.
class AnCrystal {
 public:
  using element_type = AnComponent;

  AnCrystal(int n, Family family) : n_(n), family_(family), cartan_(GridQuiver({n}).cartan()) {}

  int n() const { return n_; }
  Family family() const { return family_; }
  const CartanMatrix& cartan() const { return cartan_; }

  RootLatticeWeight weight(const AnComponent& c) const { return RootLatticeWeight::from_dims(c.dims); }
  std::int64_t epsilon(const AnComponent& c, Color i) const {
    return family_ == Family::plain ? an::epsilon(c, i) : an::epsilon_star(c, i);
  }
  std::int64_t phi(const AnComponent& c, Color i) const {
    return family_ == Family::plain ? an::phi(c, i) : an::phi_star(c, i);
  }
  std::optional<AnComponent> e(const AnComponent& c, Color i) const {
    return family_ == Family::plain ? apply_e(c, i) : apply_e_star(c, i);
  }
  std::optional<AnComponent> f(const AnComponent& c, Color i) const {
    return family_ == Family::plain ? apply_f(c, i) : apply_f_star(c, i);
  }
  int degree(const AnComponent& c) const { return c.total(); }
  std::vector<int> dims(const AnComponent& c) const { return c.dims; }
  std::string label(const AnComponent& c) const { return c.to_string(); }

  AnComponent highest() const { return AnComponent{std::vector<int>(static_cast<std::size_t>(n_), 0)}; }

 private:
  int n_;
  Family family_;
  CartanMatrix cartan_;
};

}  // namespace crystal_grid::an
