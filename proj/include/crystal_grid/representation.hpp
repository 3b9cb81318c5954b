#pragma once

// Representations of a grid quiver over an exact field: a space k^{d_v} at each
// vertex and a matrix on each arrow, with every unit square commuting.

#include "crystal_grid/field.hpp"
#include "crystal_grid/grid_quiver.hpp"
#include "crystal_grid/matrix.hpp"

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal_grid {

template <Field F>
class Representation {
 public:
  using Mat = FieldMatrix<F>;

  /// maps[k] belongs to quiver.arrows()[k] and has shape d_target x d_source.
  Representation(F field, GridQuiver quiver, std::vector<int> dims, std::vector<Mat> maps)
      : field_(std::move(field)), quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != static_cast<std::size_t>(quiver_.vertex_count())) {
      throw std::invalid_argument("Representation: expected " + std::to_string(quiver_.vertex_count()) +
                                  " dimensions, got " + std::to_string(dims_.size()));
    }
    for (int d : dims_)
      if (d < 0) throw std::invalid_argument("Representation: negative dimension");
    const auto& arrows = quiver_.arrows();
    if (maps_.size() != arrows.size()) throw std::invalid_argument("Representation: one matrix per arrow required");
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const auto& m = maps_[k];
      if (m.rows() != static_cast<std::size_t>(dim(arrows[k].target)) ||
          m.cols() != static_cast<std::size_t>(dim(arrows[k].source))) {
        throw std::invalid_argument("Representation: matrix on arrow " + std::to_string(arrows[k].source) + "->" +
                                    std::to_string(arrows[k].target) + " has the wrong shape");
      }
    }
    for (const auto& sq : quiver_.relations()) {
      const auto lhs = multiply(field_, map(sq.via_a, sq.target), map(sq.source, sq.via_a));
      const auto rhs = multiply(field_, map(sq.via_b, sq.target), map(sq.source, sq.via_b));
      if (lhs != rhs) {
        throw std::invalid_argument("Representation: square at vertex " + std::to_string(sq.source) +
                                    " does not commute");
      }
    }
  }

  static Representation zero(F field, GridQuiver quiver, std::vector<int> dims) {
    std::vector<Mat> maps;
    for (const auto& a : quiver.arrows()) {
      maps.push_back(zero_matrix(field, static_cast<std::size_t>(dims.at(static_cast<std::size_t>(a.target - 1))),
                                 static_cast<std::size_t>(dims.at(static_cast<std::size_t>(a.source - 1)))));
    }
    return Representation(std::move(field), std::move(quiver), std::move(dims), std::move(maps));
  }

  const F& field() const { return field_; }
  const GridQuiver& quiver() const { return quiver_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const {
    quiver_.check_vertex(v);
    return dims_[static_cast<std::size_t>(v - 1)];
  }
  int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }
  const std::vector<Mat>& maps() const { return maps_; }

  /// The matrix on arrow s -> t.
  const Mat& map(int s, int t) const {
    const int k = quiver_.arrow_index(s, t);
    if (k < 0) throw std::out_of_range("no arrow " + std::to_string(s) + "->" + std::to_string(t));
    return maps_[static_cast<std::size_t>(k)];
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.quiver_.shape() == b.quiver_.shape() && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  F field_;
  GridQuiver quiver_;
  std::vector<int> dims_;
  std::vector<Mat> maps_;
};

template <Field F>
Representation<F> direct_sum(const Representation<F>& a, const Representation<F>& b) {
  if (a.quiver().shape() != b.quiver().shape()) throw std::invalid_argument("direct_sum: different quivers");
  const auto& field = a.field();
  std::vector<int> dims(a.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dims()[v] + b.dims()[v];
  std::vector<FieldMatrix<F>> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) {
    const auto& x = a.maps()[k];
    const auto& y = b.maps()[k];
    auto m = zero_matrix(field, x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
    maps.push_back(std::move(m));
  }
  return Representation<F>(field, a.quiver(), std::move(dims), std::move(maps));
}

/// Vector-space dual with vertices relabeled through the involution a, which
/// turns a representation of G_m^op back into one of G_m.
template <Field F>
Representation<F> transpose_dual(const Representation<F>& rep) {
  const auto& q = rep.quiver();
  std::vector<int> dims(rep.dims().size());
  for (int v = 1; v <= q.vertex_count(); ++v) dims[static_cast<std::size_t>(v - 1)] = rep.dim(q.involution(v));
  std::vector<FieldMatrix<F>> maps;
  for (const auto& a : q.arrows()) maps.push_back(transpose(rep.map(q.involution(a.target), q.involution(a.source))));
  return Representation<F>(rep.field(), q, std::move(dims), std::move(maps));
}

}  // namespace crystal_grid
