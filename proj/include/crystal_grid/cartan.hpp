#pragma once

// Generalized Cartan matrices, root-lattice weights, and the Cartan matrix of a
// quiver. Colors (vertex identifiers) are 1-based throughout the public API.

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crystal_grid {

using Color = int;

/// A finite quiver given by its vertex count and 0-based arrow endpoints.
struct QuiverDescription {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
};

class CartanMatrix {
 public:
  CartanMatrix() = default;

  /// Validates the three generalized-Cartan clauses; throws std::invalid_argument.
  explicit CartanMatrix(std::vector<std::vector<int>> entries) : a_(std::move(entries)) {
    const std::size_t n = a_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a_[i].size() != n) throw std::invalid_argument("CartanMatrix: matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (a_[i][i] != 2) {
        throw std::invalid_argument("CartanMatrix: diagonal entry " + std::to_string(i + 1) +
                                    " is not 2");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a_[i][j] > 0) throw std::invalid_argument("CartanMatrix: positive off-diagonal entry");
        if ((a_[i][j] == 0) != (a_[j][i] == 0)) {
          throw std::invalid_argument("CartanMatrix: zero pattern is not symmetric");
        }
      }
    }
  }

  std::size_t size() const { return a_.size(); }

  /// A_ij for 1-based colors.
  int entry(Color i, Color j) const {
    check_color(i);
    check_color(j);
    return a_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (a_[i][j] != a_[j][i]) return false;
    return true;
  }

  void check_color(Color i) const {
    if (i < 1 || static_cast<std::size_t>(i) > size()) {
      throw std::out_of_range("color " + std::to_string(i) + " outside 1.." +
                              std::to_string(size()));
    }
  }

  const std::vector<std::vector<int>>& rows() const { return a_; }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < size(); ++i) {
      os << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < size(); ++j) os << (j ? "," : "") << a_[i][j];
      os << ']';
    }
    os << ']';
    return os.str();
  }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::vector<std::vector<int>> a_;
};

/// Element sum_i c_i alpha_i of the root lattice.
struct RootLatticeWeight {
  std::vector<std::int64_t> coeffs;

  /// The weight -sum d_i alpha_i carried by a dimension vector d.
  static RootLatticeWeight from_dims(const std::vector<int>& dims) {
    RootLatticeWeight w;
    w.coeffs.reserve(dims.size());
    for (int d : dims) w.coeffs.push_back(-static_cast<std::int64_t>(d));
    return w;
  }

  static RootLatticeWeight simple_root(std::size_t rank, Color i) {
    RootLatticeWeight w{std::vector<std::int64_t>(rank, 0)};
    w.coeffs.at(static_cast<std::size_t>(i - 1)) = 1;
    return w;
  }

  bool in_negative_cone() const {
    for (auto c : coeffs)
      if (c > 0) return false;
    return true;
  }

  friend RootLatticeWeight operator+(RootLatticeWeight a, const RootLatticeWeight& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) a.coeffs[k] += b.coeffs[k];
    return a;
  }
  friend RootLatticeWeight operator-(RootLatticeWeight a, const RootLatticeWeight& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) a.coeffs[k] -= b.coeffs[k];
    return a;
  }
  friend bool operator==(const RootLatticeWeight&, const RootLatticeWeight&) = default;
};

/// <h_i, w> = sum_j A_ij c_j.
inline std::int64_t pairing(const CartanMatrix& cartan, Color i, const RootLatticeWeight& w) {
  cartan.check_color(i);
  if (w.coeffs.size() != cartan.size()) {
    throw std::invalid_argument("pairing: weight has " + std::to_string(w.coeffs.size()) +
                                " coefficients, Cartan matrix has rank " +
                                std::to_string(cartan.size()));
  }
  std::int64_t total = 0;
  for (std::size_t j = 0; j < cartan.size(); ++j)
    total += static_cast<std::int64_t>(cartan.entry(i, static_cast<Color>(j + 1))) * w.coeffs[j];
  return total;
}

/// A_ii = 2, A_ij = -(arrows between i and j in either direction).
inline CartanMatrix cartan_from_quiver(const QuiverDescription& quiver) {
  const std::size_t n = quiver.vertex_count;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  for (const auto& [s, t] : quiver.arrows) {
    if (s >= n || t >= n) throw std::invalid_argument("cartan_from_quiver: arrow endpoint out of range");
    if (s == t) {
      throw std::invalid_argument("cartan_from_quiver: loop at vertex " + std::to_string(s + 1));
    }
    --a[s][t];
    --a[t][s];
  }
  return CartanMatrix(std::move(a));
}

}  // namespace crystal_grid
