#pragma once

// The equioriented commutative grid G_m on [1,m_1] x ... x [1,m_d].
//
// Vertices have 1-based linear indices with the first coordinate varying
// fastest, so on the 2x2 grid (1,1),(2,1),(1,2),(2,2) are 1,2,3,4 and the
// arrows are 1->2, 1->3, 2->4, 3->4.

#include "crystal_grid/cartan.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal_grid {

using Coord = std::vector<int>;

/// Two parallel length-2 paths source -> via_a -> target and source -> via_b -> target.
struct RelationSquare {
  int source = 0;
  int via_a = 0;
  int via_b = 0;
  int target = 0;
};

struct Arrow {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// j1 <_lex j2 in out_1 (or in_1), k = k(j1, j2).
struct NeighborPair {
  int j1 = 0;
  int j2 = 0;
  int k = 0;
};

struct NeighborhoodData {
  std::vector<int> out1;  // sorted by <_lex
  std::vector<int> out2;  // sorted by <_lex
  std::vector<NeighborPair> out_pairs;
  std::vector<int> in1;
  std::vector<int> in2;
  std::vector<NeighborPair> in_pairs;

  /// k(j1, j2) for the out-neighborhood, or 0 when undefined.
  int out_k(int j1, int j2) const { return find(out_pairs, j1, j2); }
  int in_k(int j1, int j2) const { return find(in_pairs, j1, j2); }

 private:
  static int find(const std::vector<NeighborPair>& pairs, int j1, int j2) {
    for (const auto& p : pairs)
      if (p.j1 == j1 && p.j2 == j2) return p.k;
    return 0;
  }
};

class GridQuiver {
 public:
  explicit GridQuiver(std::vector<int> shape) : shape_(std::move(shape)) {
    if (shape_.empty()) throw std::invalid_argument("GridQuiver: shape must have at least one extent");
    std::size_t count = 1;
    for (int m : shape_) {
      if (m < 1) throw std::invalid_argument("GridQuiver: extent " + std::to_string(m) + " is not positive");
      count *= static_cast<std::size_t>(m);
    }
    vertex_count_ = static_cast<int>(count);
    for (int v = 1; v <= vertex_count_; ++v) {
      const auto c = coord(v);
      for (std::size_t l = 0; l < shape_.size(); ++l) {
        if (c[l] == shape_[l]) continue;
        auto t = c;
        ++t[l];
        arrows_.push_back({v, index(t)});
      }
      for (std::size_t l = 0; l < shape_.size(); ++l)
        for (std::size_t l2 = l + 1; l2 < shape_.size(); ++l2) {
          if (c[l] == shape_[l] || c[l2] == shape_[l2]) continue;
          auto a = c, b = c, t = c;
          ++a[l];
          ++b[l2];
          ++t[l];
          ++t[l2];
          squares_.push_back({v, index(a), index(b), index(t)});
        }
    }
  }

  /// Parses "2,2" style shapes.
  static GridQuiver parse(const std::string& text) {
    std::vector<int> shape;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(part, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad grid extent '" + part + "'");
      }
      if (used != part.size()) throw std::invalid_argument("bad grid extent '" + part + "'");
      shape.push_back(v);
    }
    return GridQuiver(std::move(shape));
  }

  const std::vector<int>& shape() const { return shape_; }
  std::size_t dimension() const { return shape_.size(); }
  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<RelationSquare>& relations() const { return squares_; }

  bool has_vertex(int v) const { return v >= 1 && v <= vertex_count_; }

  Coord coord(int v) const {
    check_vertex(v);
    Coord c(shape_.size());
    int rest = v - 1;
    for (std::size_t l = 0; l < shape_.size(); ++l) {
      c[l] = rest % shape_[l] + 1;
      rest /= shape_[l];
    }
    return c;
  }

  int index(const Coord& c) const {
    if (c.size() != shape_.size()) throw std::invalid_argument("coordinate has wrong length");
    int v = 0, stride = 1;
    for (std::size_t l = 0; l < shape_.size(); ++l) {
      if (c[l] < 1 || c[l] > shape_[l]) throw std::out_of_range("coordinate outside the grid");
      v += (c[l] - 1) * stride;
      stride *= shape_[l];
    }
    return v + 1;
  }

  /// Position of the arrow (s, t) in arrows(), or -1.
  int arrow_index(int s, int t) const {
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].source == s && arrows_[k].target == t) return static_cast<int>(k);
    return -1;
  }
  bool has_arrow(int s, int t) const { return arrow_index(s, t) >= 0; }

  /// Lexicographic order on coordinate tuples, first coordinate compared first.
  bool lex_less(int a, int b) const { return coord(a) < coord(b); }

  /// a(i) = (m_1 - i_1 + 1, ..., m_d - i_d + 1).
  int involution(int v) const {
    auto c = coord(v);
    for (std::size_t l = 0; l < shape_.size(); ++l) c[l] = shape_[l] - c[l] + 1;
    return index(c);
  }

  QuiverDescription description() const {
    QuiverDescription q;
    q.vertex_count = static_cast<std::size_t>(vertex_count_);
    for (const auto& a : arrows_)
      q.arrows.emplace_back(static_cast<std::size_t>(a.source - 1), static_cast<std::size_t>(a.target - 1));
    return q;
  }

  CartanMatrix cartan() const { return cartan_from_quiver(description()); }

  NeighborhoodData neighborhoods(int v) const {
    check_vertex(v);
    NeighborhoodData n;
    auto lex_sort = [this](std::vector<int>& xs) {
      std::sort(xs.begin(), xs.end(), [this](int a, int b) { return lex_less(a, b); });
    };
    for (const auto& a : arrows_) {
      if (a.source == v) n.out1.push_back(a.target);
      if (a.target == v) n.in1.push_back(a.source);
    }
    lex_sort(n.out1);
    lex_sort(n.in1);
    for (std::size_t x = 0; x < n.out1.size(); ++x)
      for (std::size_t y = x + 1; y < n.out1.size(); ++y)
        for (const auto& a : arrows_) {
          if (a.source != n.out1[x] || !has_arrow(n.out1[y], a.target)) continue;
          n.out_pairs.push_back({n.out1[x], n.out1[y], a.target});
          n.out2.push_back(a.target);
        }
    for (std::size_t x = 0; x < n.in1.size(); ++x)
      for (std::size_t y = x + 1; y < n.in1.size(); ++y)
        for (const auto& a : arrows_) {
          if (a.target != n.in1[x] || !has_arrow(a.source, n.in1[y])) continue;
          n.in_pairs.push_back({n.in1[x], n.in1[y], a.source});
          n.in2.push_back(a.source);
        }
    lex_sort(n.out2);
    lex_sort(n.in2);
    return n;
  }

  void check_vertex(int v) const {
    if (!has_vertex(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(vertex_count_));
    }
  }

 private:
  std::vector<int> shape_;
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<RelationSquare> squares_;
};

}  // namespace crystal_grid
