#pragma once

// A truncated polyhedral model of B(infinity): the ambient crystal on finitely
// supported sequences x = (x_1, ..., x_L) attached to a periodic color
// sequence iota. Words of f_i applied to the zero sequence stay inside the
// image of B(infinity), so comparing their images decides equality there.

#include "crystal_grid/cartan.hpp"
#include "crystal_grid/crystal.hpp"
#include "crystal_grid/operator_word.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crystal_grid::binfty {

/// Raised when an operator would touch the guard band (the last period).
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IotaSequence {
 public:
  IotaSequence(std::vector<Color> pattern, int length) : pattern_(std::move(pattern)), length_(length) {
    if (pattern_.empty()) throw std::invalid_argument("IotaSequence: empty pattern");
    if (length_ < 2 * period()) {
      throw std::invalid_argument("IotaSequence: length must cover at least two periods");
    }
  }

  /// 1,2,...,n repeated.
  static IotaSequence cyclic(int n, int length) {
    std::vector<Color> p;
    for (Color i = 1; i <= n; ++i) p.push_back(i);
    return IotaSequence(std::move(p), length);
  }

  int length() const { return length_; }
  int period() const { return static_cast<int>(pattern_.size()); }
  const std::vector<Color>& pattern() const { return pattern_; }
  /// iota_k for 1-based k.
  Color at(int k) const { return pattern_[static_cast<std::size_t>((k - 1) % period())]; }
  /// First position of the guard band.
  int guard_start() const { return length_ - period() + 1; }

 private:
  std::vector<Color> pattern_;
  int length_;
};

struct ZInfElement {
  std::vector<int> x;  // x[k-1] is x_k
  friend bool operator==(const ZInfElement&, const ZInfElement&) = default;
};

enum class TieBreak {
  f_min_e_max,  // f acts at the smallest maximizing index, e at the largest
  f_max_e_min,
};

class PolyhedralModel {
 public:
  using element_type = ZInfElement;

  PolyhedralModel(CartanMatrix cartan, IotaSequence iota, TieBreak tie = TieBreak::f_min_e_max)
      : cartan_(std::move(cartan)), iota_(std::move(iota)), tie_(tie) {
    std::vector<bool> seen(cartan_.size(), false);
    for (Color c : iota_.pattern()) {
      cartan_.check_color(c);
      seen[static_cast<std::size_t>(c - 1)] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw std::invalid_argument("IotaSequence pattern misses color " + std::to_string(i + 1));
  }

  const CartanMatrix& cartan() const { return cartan_; }
  const IotaSequence& iota() const { return iota_; }
  TieBreak tie_break() const { return tie_; }

  ZInfElement zero() const { return ZInfElement{std::vector<int>(static_cast<std::size_t>(iota_.length()), 0)}; }

  /// sigma_k(x) = x_k + sum_{j > k} <h_{iota_k}, alpha_{iota_j}> x_j.
  std::int64_t sigma(const ZInfElement& x, int k) const {
    check(x);
    if (k < 1 || k > iota_.length()) throw std::out_of_range("sigma: position out of range");
    std::int64_t s = x.x[static_cast<std::size_t>(k - 1)];
    const Color ck = iota_.at(k);
    for (int j = k + 1; j <= iota_.length(); ++j) {
      const int xj = x.x[static_cast<std::size_t>(j - 1)];
      if (xj != 0) s += static_cast<std::int64_t>(cartan_.entry(ck, iota_.at(j))) * xj;
    }
    return s;
  }

  std::int64_t epsilon(const ZInfElement& x, Color i) const { return maximizers(x, i).first; }

  std::int64_t phi(const ZInfElement& x, Color i) const { return epsilon(x, i) + pairing(cartan_, i, weight(x)); }

  std::optional<ZInfElement> f(const ZInfElement& x, Color i) const {
    const auto [eps, at] = maximizers(x, i);
    (void)eps;
    const int k = tie_ == TieBreak::f_min_e_max ? at.front() : at.back();
    if (k >= iota_.guard_start()) {
      throw TruncationError("f_" + std::to_string(i) + " reaches position " + std::to_string(k) +
                            " in the guard band; use a longer truncation");
    }
    ZInfElement out = x;
    ++out.x[static_cast<std::size_t>(k - 1)];
    return out;
  }

  std::optional<ZInfElement> e(const ZInfElement& x, Color i) const {
    const auto [eps, at] = maximizers(x, i);
    if (eps <= 0) return std::nullopt;
    const int k = tie_ == TieBreak::f_min_e_max ? at.back() : at.front();
    ZInfElement out = x;
    // A nonzero maximum of sigma is only attained where x_k > 0 under the
    // correct tie-break; the other convention can land on a zero entry.
    if (out.x[static_cast<std::size_t>(k - 1)] == 0) return std::nullopt;
    --out.x[static_cast<std::size_t>(k - 1)];
    return out;
  }

  RootLatticeWeight weight(const ZInfElement& x) const { return RootLatticeWeight::from_dims(dims(x)); }

  /// Color content: entry i is the sum of x_k over positions of color i.
  std::vector<int> dims(const ZInfElement& x) const {
    check(x);
    std::vector<int> d(cartan_.size(), 0);
    for (int k = 1; k <= iota_.length(); ++k) d[static_cast<std::size_t>(iota_.at(k) - 1)] += x.x[static_cast<std::size_t>(k - 1)];
    return d;
  }

  int degree(const ZInfElement& x) const {
    int t = 0;
    for (int v : x.x) t += v;
    return t;
  }

  /// Entries up to the last nonzero one, comma separated; "0" for the zero element.
  std::string label(const ZInfElement& x) const {
    std::size_t last = 0;
    for (std::size_t k = 0; k < x.x.size(); ++k)
      if (x.x[k] != 0) last = k + 1;
    if (last == 0) return "0";
    std::string out;
    for (std::size_t k = 0; k < last; ++k) out += (k ? "," : "") + std::to_string(x.x[k]);
    return out;
  }

  std::optional<ZInfElement> apply(const ZInfElement& x, const OpStep& step) const {
    switch (step.kind) {
      case OpKind::e: return e(x, step.color);
      case OpKind::f: return f(x, step.color);
      default: throw std::invalid_argument("the polyhedral model has no star operators");
    }
  }

  /// Applies a word right to left starting from x.
  std::optional<ZInfElement> apply_word(const OperatorWord& w, const ZInfElement& x) const {
    return crystal_grid::apply_word(w, x, [this](const ZInfElement& y, const OpStep& s) { return apply(y, s); }).result;
  }

 private:
  void check(const ZInfElement& x) const {
    if (x.x.size() != static_cast<std::size_t>(iota_.length())) {
      throw std::invalid_argument("element length does not match the truncation");
    }
    for (int v : x.x)
      if (v < 0) throw std::invalid_argument("element has a negative entry");
  }

  /// max sigma over positions of color i, with the maximizing positions ascending.
  std::pair<std::int64_t, std::vector<int>> maximizers(const ZInfElement& x, Color i) const {
    cartan_.check_color(i);
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::vector<int> at;
    for (int k = 1; k <= iota_.length(); ++k) {
      if (iota_.at(k) != i) continue;
      const auto s = sigma(x, k);
      if (s > best) {
        best = s;
        at.assign(1, k);
      } else if (s == best) {
        at.push_back(k);
      }
    }
    return {best, at};
  }

  CartanMatrix cartan_;
  IotaSequence iota_;
  TieBreak tie_;
};

struct Comparison {
  bool distinct = false;
  std::vector<int> xA;
  std::vector<int> xB;
};

/// Applies two f-words to the zero element and compares the results.
inline Comparison words_distinct(const PolyhedralModel& model, const OperatorWord& a, const OperatorWord& b) {
  if (!a.only(OpKind::f) || !b.only(OpKind::f)) throw std::invalid_argument("words_distinct: words must use only f");
  const auto longest = static_cast<int>(std::max(a.size(), b.size()));
  if (model.iota().length() < model.iota().period() * (longest + 1)) {
    throw TruncationError("truncation length " + std::to_string(model.iota().length()) + " is too short for words of length " +
                          std::to_string(longest));
  }
  const auto xa = model.apply_word(a, model.zero());
  const auto xb = model.apply_word(b, model.zero());
  if (!xa || !xb) throw std::logic_error("an f-word vanished in the ambient crystal");
  return {!(*xa == *xb), xa->x, xb->x};
}

}  // namespace crystal_grid::binfty
