#pragma once

// The abstract crystal contract and finite-fragment checkers for the crystal
// axioms and for morphisms. std::nullopt plays the role of the element 0.

#include "crystal_grid/cartan.hpp"

#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace crystal_grid {

/// Stand-in for -infinity in epsilon/phi values. None of the crystals here
/// produce it, but axiom (5) is still checked against it.
inline constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();

/// Plain structure (wt, eps, phi, e, f) or the star structure.
enum class Family { plain, star };

inline const char* family_name(Family f) { return f == Family::plain ? "plain" : "star"; }

template <class C>
concept Crystal = requires(const C& c, const typename C::element_type& b, Color i) {
  typename C::element_type;
  requires std::equality_comparable<typename C::element_type>;
  { c.cartan() } -> std::convertible_to<const CartanMatrix&>;
  { c.weight(b) } -> std::convertible_to<RootLatticeWeight>;
  { c.epsilon(b, i) } -> std::convertible_to<std::int64_t>;
  { c.phi(b, i) } -> std::convertible_to<std::int64_t>;
  { c.e(b, i) } -> std::convertible_to<std::optional<typename C::element_type>>;
  { c.f(b, i) } -> std::convertible_to<std::optional<typename C::element_type>>;
  { c.degree(b) } -> std::convertible_to<int>;
  { c.dims(b) } -> std::convertible_to<std::vector<int>>;
  { c.label(b) } -> std::convertible_to<std::string>;
};

/// Crystals whose elements carry a rank pair (the 2x2 grid).
template <class C>
concept RankedCrystal = Crystal<C> && requires(const C& c, const typename C::element_type& b) {
  { c.ranks(b) } -> std::convertible_to<std::array<int, 2>>;
};

struct Violation {
  std::string element;
  Color color = 0;
  std::string detail;
};

struct AxiomReport {
  std::array<std::vector<Violation>, 5> by_axiom;  // axioms (1)..(5)
  std::size_t elements_checked = 0;
  std::size_t skipped_beyond_bound = 0;

  bool clean() const {
    for (const auto& v : by_axiom)
      if (!v.empty()) return false;
    return true;
  }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& v : by_axiom) n += v.size();
    return n;
  }
};

/// Checks axioms (1)-(5) on a fragment. Elements whose f-image has degree above
/// `bound` are skipped for the clauses that need that image.
template <Crystal C>
AxiomReport check_crystal_axioms(const C& crystal, std::span<const typename C::element_type> fragment,
                                 int bound) {
  AxiomReport report;
  const auto& cartan = crystal.cartan();
  const auto n = static_cast<Color>(cartan.size());
  auto note = [&](int axiom, const auto& b, Color i, std::string detail) {
    report.by_axiom[static_cast<std::size_t>(axiom - 1)].push_back(
        {crystal.label(b), i, std::move(detail)});
  };
  for (const auto& b : fragment) {
    ++report.elements_checked;
    const auto wt = crystal.weight(b);
    for (Color i = 1; i <= n; ++i) {
      const auto alpha = RootLatticeWeight::simple_root(cartan.size(), i);
      const std::int64_t eps = crystal.epsilon(b, i);
      const std::int64_t phi = crystal.phi(b, i);
      const auto eb = crystal.e(b, i);
      const auto fb = crystal.f(b, i);

      if (phi == kMinusInfinity || eps == kMinusInfinity) {
        if (!(phi == kMinusInfinity && eps == kMinusInfinity)) {
          note(1, b, i, "only one of eps, phi is -infinity");
        }
        if (eb || fb) note(5, b, i, "phi = -infinity but an operator is nonzero");
        continue;
      }
      if (phi != eps + pairing(cartan, i, wt)) {
        std::ostringstream os;
        os << "phi=" << phi << " eps=" << eps << " <h_i,wt>=" << pairing(cartan, i, wt);
        note(1, b, i, os.str());
      }

      if (eb) {
        if (crystal.weight(*eb) != wt + alpha) note(2, b, i, "wt(e b) != wt(b) + alpha_i");
        if (crystal.epsilon(*eb, i) != eps - 1) note(2, b, i, "eps(e b) != eps(b) - 1");
        if (crystal.phi(*eb, i) != phi + 1) note(2, b, i, "phi(e b) != phi(b) + 1");
        const auto back = crystal.f(*eb, i);
        if (!back || !(*back == b)) note(4, b, i, "f(e b) != b");
      }

      if (fb) {
        if (crystal.degree(*fb) > bound) {
          ++report.skipped_beyond_bound;
        } else {
          if (crystal.weight(*fb) != wt - alpha) note(3, b, i, "wt(f b) != wt(b) - alpha_i");
          if (crystal.epsilon(*fb, i) != eps + 1) note(3, b, i, "eps(f b) != eps(b) + 1");
          if (crystal.phi(*fb, i) != phi - 1) note(3, b, i, "phi(f b) != phi(b) - 1");
          const auto back = crystal.e(*fb, i);
          if (!back || !(*back == b)) note(4, b, i, "e(f b) != b");
        }
      }
    }
  }
  return report;
}

struct MorphismReport {
  std::array<std::vector<Violation>, 3> by_clause;  // clauses (1)..(3)
  std::vector<Violation> strictness;                // rho commutes with e, f including 0
  std::size_t elements_checked = 0;

  bool clean() const {
    for (const auto& v : by_clause)
      if (!v.empty()) return false;
    return true;
  }
  bool strict() const { return clean() && strictness.empty(); }
};

/// Verifies the three morphism clauses for `map` on a finite domain fragment,
/// plus strict commutation. Operator images above `bound` are skipped.
template <Crystal D, Crystal K>
MorphismReport check_strict_morphism(
    const D& domain, const K& codomain, std::span<const typename D::element_type> fragment,
    const std::function<std::optional<typename K::element_type>(const typename D::element_type&)>&
        map,
    int bound = std::numeric_limits<int>::max()) {
  MorphismReport report;
  const auto n = static_cast<Color>(domain.cartan().size());
  if (codomain.cartan().size() != domain.cartan().size()) {
    report.by_clause[0].push_back({"", 0, "index sets differ in size"});
    return report;
  }
  auto note = [&](std::vector<Violation>& sink, const auto& b, Color i, std::string detail) {
    sink.push_back({domain.label(b), i, std::move(detail)});
  };
  for (const auto& b : fragment) {
    ++report.elements_checked;
    const auto rb = map(b);
    if (rb) {
      if (domain.weight(b) != codomain.weight(*rb)) note(report.by_clause[0], b, 0, "weight differs");
    }
    for (Color i = 1; i <= n; ++i) {
      if (rb) {
        if (domain.epsilon(b, i) != codomain.epsilon(*rb, i))
          note(report.by_clause[0], b, i, "epsilon differs");
        if (domain.phi(b, i) != codomain.phi(*rb, i)) note(report.by_clause[0], b, i, "phi differs");
      }
      const auto eb = domain.e(b, i);
      const auto reb = eb ? map(*eb) : std::nullopt;
      const auto erb = rb ? codomain.e(*rb, i) : std::nullopt;
      if (rb && reb && erb != reb) note(report.by_clause[1], b, i, "e(rho b) != rho(e b)");
      if (erb != reb) note(report.strictness, b, i, "e(rho b) != rho(e b) counting 0");

      const auto fb = domain.f(b, i);
      if (fb && domain.degree(*fb) > bound) continue;
      const auto rfb = fb ? map(*fb) : std::nullopt;
      const auto frb = rb ? codomain.f(*rb, i) : std::nullopt;
      if (rb && rfb && frb != rfb) note(report.by_clause[2], b, i, "f(rho b) != rho(f b)");
      if (frb != rfb) note(report.strictness, b, i, "f(rho b) != rho(f b) counting 0");
    }
  }
  return report;
}

/// Presents a crystal with its colors renamed: color i of the view is color
/// sigma(i) of the underlying crystal. Dimension vectors are permuted to match.
template <Crystal C>
class RelabeledCrystal {
 public:
  using element_type = typename C::element_type;

  /// sigma is 1-based: sigma[i-1] is the underlying color for view color i.
  RelabeledCrystal(const C& base, std::vector<Color> sigma) : base_(base), sigma_(std::move(sigma)) {
    const auto& a = base_.cartan();
    if (sigma_.size() != a.size()) throw std::invalid_argument("RelabeledCrystal: wrong permutation size");
    std::vector<bool> seen(a.size(), false);
    for (Color s : sigma_) {
      a.check_color(s);
      if (seen[static_cast<std::size_t>(s - 1)]) throw std::invalid_argument("RelabeledCrystal: not a permutation");
      seen[static_cast<std::size_t>(s - 1)] = true;
    }
    std::vector<std::vector<int>> rows(a.size(), std::vector<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) rows[i][j] = a.entry(sigma_[i], sigma_[j]);
    cartan_ = CartanMatrix(std::move(rows));
  }

  const CartanMatrix& cartan() const { return cartan_; }
  RootLatticeWeight weight(const element_type& b) const { return RootLatticeWeight::from_dims(dims(b)); }
  std::int64_t epsilon(const element_type& b, Color i) const { return base_.epsilon(b, sigma(i)); }
  std::int64_t phi(const element_type& b, Color i) const { return base_.phi(b, sigma(i)); }
  std::optional<element_type> e(const element_type& b, Color i) const { return base_.e(b, sigma(i)); }
  std::optional<element_type> f(const element_type& b, Color i) const { return base_.f(b, sigma(i)); }
  int degree(const element_type& b) const { return base_.degree(b); }
  std::vector<int> dims(const element_type& b) const {
    const auto d = base_.dims(b);
    std::vector<int> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[static_cast<std::size_t>(sigma_[i] - 1)];
    return out;
  }
  std::string label(const element_type& b) const { return base_.label(b); }

 private:
  Color sigma(Color i) const {
    cartan_.check_color(i);
    return sigma_[static_cast<std::size_t>(i - 1)];
  }

  const C& base_;
  std::vector<Color> sigma_;
  CartanMatrix cartan_;
};

}  // namespace crystal_grid
