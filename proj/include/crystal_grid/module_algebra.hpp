#pragma once

// Module theory of the 2x2 commutative grid: the eleven interval
// indecomposables M1..M11, generic decompositions of components, Hom and Ext
// dimensions, and rank-profile certificates for decompositions.

#include "crystal_grid/crystal_2x2.hpp"
#include "crystal_grid/field.hpp"
#include "crystal_grid/grid_quiver.hpp"
#include "crystal_grid/matrix.hpp"
#include "crystal_grid/representation.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal_grid::modules {

using IndecomposableId = int;  // 1..11

inline constexpr std::array<g22::Dims4, 11> kIndecomposableDims{{
    {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
    {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1},
    {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 1, 1, 1},
}};

inline void check_id(IndecomposableId k) {
  if (k < 1 || k > 11) throw std::out_of_range("indecomposable M" + std::to_string(k) + " does not exist");
}

inline const g22::Dims4& indecomposable_dims(IndecomposableId k) {
  check_id(k);
  return kIndecomposableDims[static_cast<std::size_t>(k - 1)];
}

/// M4, M7, M8, M11 are the projective covers of the simples at 4, 2, 3, 1.
inline bool is_projective(IndecomposableId k) {
  check_id(k);
  return k == 4 || k == 7 || k == 8 || k == 11;
}

inline GridQuiver grid_2x2() { return GridQuiver({2, 2}); }

/// Multiplicities (m_1, ..., m_11) of M1..M11 in a direct sum.
struct Multiset11 {
  std::array<int, 11> m{};

  static Multiset11 of(std::initializer_list<std::pair<IndecomposableId, int>> items) {
    Multiset11 out;
    for (const auto& [k, n] : items) out.at(k) += n;
    return out;
  }

  int& at(IndecomposableId k) {
    check_id(k);
    return m[static_cast<std::size_t>(k - 1)];
  }
  int at(IndecomposableId k) const {
    check_id(k);
    return m[static_cast<std::size_t>(k - 1)];
  }

  bool empty() const {
    for (int x : m)
      if (x != 0) return false;
    return true;
  }

  std::vector<IndecomposableId> support() const {
    std::vector<IndecomposableId> out;
    for (int k = 1; k <= 11; ++k)
      if (at(k) != 0) out.push_back(k);
    return out;
  }

  g22::Dims4 dims() const {
    g22::Dims4 d{0, 0, 0, 0};
    for (int k = 1; k <= 11; ++k)
      for (std::size_t v = 0; v < 4; ++v) d[v] += at(k) * indecomposable_dims(k)[v];
    return d;
  }

  /// Ranks of the stacked map out of vertex 1 and into vertex 4. Each
  /// summand containing the interval [1,2] or [1,3] contributes to r1; each
  /// containing [2,4] or [3,4] contributes to r2.
  g22::Ranks2 ranks() const {
    const int r1 = at(5) + at(6) + at(9) + at(11);
    const int r2 = at(7) + at(8) + at(10) + at(11);
    return {r1, r2};
  }

  /// "{M1:1, M4:1, M11:1}" style, empty set as "{}".
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int k = 1; k <= 11; ++k) {
      if (at(k) == 0) continue;
      os << (first ? "" : ", ") << 'M' << k << ':' << at(k);
      first = false;
    }
    os << '}';
    return os.str();
  }

  friend bool operator==(const Multiset11&, const Multiset11&) = default;
};

/// M(d) with 0/1 spaces, identity maps between 1-dimensional ends, zero otherwise.
template <Field F>
Representation<F> indecomposable(IndecomposableId k, const F& field) {
  const auto& d = indecomposable_dims(k);
  const auto q = grid_2x2();
  std::vector<FieldMatrix<F>> maps;
  for (const auto& a : q.arrows()) {
    const int ds = d[static_cast<std::size_t>(a.source - 1)];
    const int dt = d[static_cast<std::size_t>(a.target - 1)];
    auto m = zero_matrix(field, static_cast<std::size_t>(dt), static_cast<std::size_t>(ds));
    if (ds == 1 && dt == 1) m(0, 0) = field.one();
    maps.push_back(std::move(m));
  }
  return Representation<F>(field, q, std::vector<int>(d.begin(), d.end()), std::move(maps));
}

/// Direct sum of the multiset's summands in order M1, M2, ..., M11.
template <Field F>
Representation<F> realize(const Multiset11& ms, const F& field) {
  auto rep = Representation<F>::zero(field, grid_2x2(), {0, 0, 0, 0});
  for (int k = 1; k <= 11; ++k)
    for (int n = 0; n < ms.at(k); ++n) rep = direct_sum(rep, indecomposable(k, field));
  return rep;
}

// ---------------------------------------------------------------------------
// Generic decompositions

namespace detail {

struct CaseHit {
  int label;
  Multiset11 decomposition;
};

inline Multiset11 with(std::initializer_list<std::pair<IndecomposableId, int>> items) {
  Multiset11 out;
  for (const auto& [k, n] : items) {
    if (n < 0) throw std::logic_error("decomposition table produced a negative multiplicity");
    out.at(k) += n;
  }
  return out;
}

/// Every case of the table whose condition holds. Labels 1..12 belong to the
/// family d1 + d4 >= d2 + d3, 21..28 to d1 + d4 < d2 + d3 with d2 <= d3, and
/// 31..38 to d1 + d4 < d2 + d3 with d3 <= d2.
inline std::vector<CaseHit> decomposition_cases(const g22::Component2x2& c) {
  const int n1 = c.d(1), n2 = c.d(2), n3 = c.d(3), n4 = c.d(4), r1 = c.r1(), r2 = c.r2();
  const int s = n2 + n3;
  std::vector<CaseHit> hits;
  auto hit = [&](int label, std::initializer_list<std::pair<IndecomposableId, int>> items) {
    hits.push_back({label, with(items)});
  };
  auto le = [](int a, int b, int x) { return a <= b && b <= x; };
  auto le4 = [](int a, int b, int x, int y) { return a <= b && b <= x && x <= y; };

  if (n1 + n4 >= s) {
    // Four shapes recur across the twelve cases; each needs only its own case's
    // inequalities to be nonnegative, so build lazily.
    auto A = [&](int label) { hit(label, {{1, n1 - r1}, {4, n4 - r2}, {7, n2 - r1}, {8, n3 - r1}, {11, r1}}); };
    auto B = [&](int label) { hit(label, {{1, n1 - r1}, {4, n4 - r2}, {6, r1 - n2}, {8, n3 - r1}, {11, n2}}); };
    auto C = [&](int label) { hit(label, {{1, n1 - r1}, {4, n4 - r2}, {6, r1 - n2}, {5, r1 - n3}, {11, r2}}); };
    auto D = [&](int label) { hit(label, {{1, n1 - r1}, {4, n4 - r2}, {5, r1 - n3}, {7, n2 - r1}, {11, n3}}); };
    if (le(n1, n2, n3)) A(1);
    if (le(n2, n1, n3) && r1 <= n2) A(2);
    if (le(n2, n1, n3) && n2 <= r1) B(3);
    if (le(n2, n3, n1) && r1 <= n2) A(4);
    if (le(n2, n3, n1) && le(n2, r1, n3)) B(5);
    if (le(n2, n3, n1) && n3 <= r1) C(6);
    if (le(n1, n3, n2)) A(7);
    if (le(n3, n1, n2) && r1 <= n3) A(8);
    if (le(n3, n1, n2) && n3 <= r1) D(9);
    if (le(n3, n2, n1) && r1 <= n3) A(10);
    if (le(n3, n2, n1) && le(n3, r1, n2)) D(11);
    if (le(n3, n2, n1) && n2 <= r1) C(12);
    return hits;
  }
  if (n2 <= n3) {
    if (le4(n4, n1, n2, n3)) hit(21, {{2, n2 - n1}, {3, n3 - n1}, {9, n1 - n4}, {11, n4}});
    if (le4(n4, n2, n1, n3)) hit(22, {{3, n3 - n1}, {6, n1 - n2}, {9, n2 - n4}, {11, n4}});
    if (le4(n4, n2, n3, n1)) hit(23, {{5, n1 - n3}, {6, n1 - n2}, {9, s - n1 - n4}, {11, n4}});
    if (le4(n2, n4, n1, n3)) hit(24, {{3, s - n1 - n4}, {6, n1 - n2}, {8, n4 - n2}, {11, n2}});
    if (le4(n1, n4, n2, n3)) hit(25, {{2, n2 - n4}, {3, n3 - n4}, {10, n4 - n1}, {11, n1}});
    if (le4(n1, n2, n4, n3)) hit(26, {{3, n3 - n4}, {8, n4 - n2}, {10, n2 - n1}, {11, n1}});
    if (le4(n1, n2, n3, n4)) hit(27, {{7, n4 - n3}, {8, n4 - n2}, {10, s - n1 - n4}, {11, n1}});
    if (le4(n2, n1, n4, n3)) hit(28, {{3, s - n1 - n4}, {6, n1 - n2}, {8, n4 - n2}, {11, n2}});
  }
  if (n3 <= n2) {
    if (le4(n4, n1, n3, n2)) hit(31, {{2, n2 - n1}, {3, n3 - n1}, {9, n1 - n4}, {11, n4}});
    if (le4(n4, n3, n1, n2)) hit(32, {{2, n2 - n1}, {5, n1 - n3}, {9, n3 - n4}, {11, n4}});
    if (le4(n4, n3, n2, n1)) hit(33, {{5, n1 - n3}, {6, n1 - n2}, {9, s - n1 - n4}, {11, n4}});
    if (le4(n3, n4, n1, n2)) hit(34, {{2, s - n1 - n4}, {5, n1 - n3}, {7, n4 - n3}, {11, n3}});
    if (le4(n1, n4, n3, n2)) hit(35, {{2, n2 - n4}, {3, n3 - n4}, {10, n4 - n1}, {11, n1}});
    if (le4(n1, n3, n4, n2)) hit(36, {{2, n2 - n4}, {7, n4 - n3}, {10, n3 - n1}, {11, n1}});
    if (le4(n1, n3, n2, n4)) hit(37, {{7, n4 - n3}, {8, n4 - n2}, {10, s - n1 - n4}, {11, n1}});
    if (le4(n3, n1, n4, n2)) hit(38, {{2, s - n1 - n4}, {5, n1 - n3}, {7, n4 - n3}, {11, n3}});
  }
  return hits;
}

}  // namespace detail

/// The general representation on component c, read from the case table.
/// Throws std::logic_error if no case applies or two applicable cases disagree.
inline Multiset11 generic_decomposition(const g22::Component2x2& c) {
  const auto hits = detail::decomposition_cases(c);
  if (hits.empty()) throw std::logic_error("no decomposition case covers " + c.to_string());
  for (const auto& h : hits) {
    if (!(h.decomposition == hits.front().decomposition)) {
      throw std::logic_error("decomposition cases " + std::to_string(hits.front().label) + " and " +
                             std::to_string(h.label) + " disagree on " + c.to_string());
    }
  }
  return hits.front().decomposition;
}

/// Labels of every case whose condition holds for c.
inline std::vector<int> decomposition_case_labels(const g22::Component2x2& c) {
  std::vector<int> out;
  for (const auto& h : detail::decomposition_cases(c)) out.push_back(h.label);
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces

/// A module map, one matrix per vertex (shape N_v x M_v).
template <Field F>
using VertexMaps = std::vector<FieldMatrix<F>>;

namespace detail {

/// Linear system whose kernel is Hom(M, N), unknowns ordered vertex by vertex,
/// each phi_v column-major within its block.
template <Field F>
FieldMatrix<F> intertwiner_system(const Representation<F>& M, const Representation<F>& N,
                                  std::vector<std::size_t>& offsets) {
  if (M.quiver().shape() != N.quiver().shape()) throw std::invalid_argument("hom: representations of different quivers");
  const auto& field = M.field();
  const auto& q = M.quiver();
  offsets.assign(static_cast<std::size_t>(q.vertex_count()) + 1, 0);
  for (int v = 1; v <= q.vertex_count(); ++v)
    offsets[static_cast<std::size_t>(v)] =
        offsets[static_cast<std::size_t>(v - 1)] + static_cast<std::size_t>(N.dim(v) * M.dim(v));
  const std::size_t unknowns = offsets.back();
  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += static_cast<std::size_t>(N.dim(a.target) * M.dim(a.source));
  auto sys = zero_matrix(field, equations, unknowns);
  // phi_v(i, j) lives at offsets[v-1] + j * N_v + i.
  auto var = [&](int v, std::size_t i, std::size_t j) {
    return offsets[static_cast<std::size_t>(v - 1)] + j * static_cast<std::size_t>(N.dim(v)) + i;
  };
  std::size_t row = 0;
  for (const auto& a : q.arrows()) {
    const auto& Ma = M.map(a.source, a.target);  // M_t x M_s
    const auto& Na = N.map(a.source, a.target);  // N_t x N_s
    const auto Nt = static_cast<std::size_t>(N.dim(a.target));
    const auto Ms = static_cast<std::size_t>(M.dim(a.source));
    const auto Ns = static_cast<std::size_t>(N.dim(a.source));
    const auto Mt = static_cast<std::size_t>(M.dim(a.target));
    // (N_a phi_s - phi_t M_a)(i, j) = 0 for i < N_t, j < M_s.
    for (std::size_t i = 0; i < Nt; ++i)
      for (std::size_t j = 0; j < Ms; ++j, ++row) {
        for (std::size_t l = 0; l < Ns; ++l) {
          auto& cell = sys(row, var(a.source, l, j));
          cell = field.add(cell, Na(i, l));
        }
        for (std::size_t l = 0; l < Mt; ++l) {
          auto& cell = sys(row, var(a.target, i, l));
          cell = field.sub(cell, Ma(l, j));
        }
      }
  }
  return sys;
}

}  // namespace detail

template <Field F>
std::size_t hom_dim(const Representation<F>& M, const Representation<F>& N) {
  std::vector<std::size_t> offsets;
  const auto sys = detail::intertwiner_system(M, N, offsets);
  return offsets.back() - rank(M.field(), sys);
}

inline std::size_t hom_dim(const Multiset11& M, const Multiset11& N) {
  const RationalField Q;
  return hom_dim(realize(M, Q), realize(N, Q));
}

/// A basis of Hom(M, N), each element scaled so its first nonzero entry is 1.
template <Field F>
std::vector<VertexMaps<F>> hom_basis(const Representation<F>& M, const Representation<F>& N) {
  const auto& field = M.field();
  std::vector<std::size_t> offsets;
  const auto sys = detail::intertwiner_system(M, N, offsets);
  const auto ker = kernel_basis(field, sys);
  std::vector<VertexMaps<F>> out;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    std::optional<typename F::value_type> scale;
    for (std::size_t r = 0; r < ker.rows() && !scale; ++r)
      if (!field.is_zero(ker(r, k))) scale = field.inv(ker(r, k));
    VertexMaps<F> phi;
    for (int v = 1; v <= M.quiver().vertex_count(); ++v) {
      const auto nv = static_cast<std::size_t>(N.dim(v));
      const auto mv = static_cast<std::size_t>(M.dim(v));
      auto m = zero_matrix(field, nv, mv);
      for (std::size_t j = 0; j < mv; ++j)
        for (std::size_t i = 0; i < nv; ++i)
          m(i, j) = field.mul(*scale, ker(offsets[static_cast<std::size_t>(v - 1)] + j * nv + i, k));
      phi.push_back(std::move(m));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

template <Field F>
VertexMaps<F> compose(const F& field, const VertexMaps<F>& outer, const VertexMaps<F>& inner) {
  VertexMaps<F> out;
  for (std::size_t v = 0; v < outer.size(); ++v) out.push_back(multiply(field, outer[v], inner[v]));
  return out;
}

// ---------------------------------------------------------------------------
// Rank profiles

/// d1..d4; rank f12, f13, f24, f34; rank [f12; f13]; rank [f24, -f34]; rank f24 f12.
using RankProfile = std::array<int, 11>;

template <Field F>
RankProfile rank_profile(const Representation<F>& rep) {
  if (rep.quiver().shape() != std::vector<int>{2, 2}) throw std::invalid_argument("rank_profile: needs the 2x2 grid");
  const auto& field = rep.field();
  const auto& f12 = rep.map(1, 2);
  const auto& f13 = rep.map(1, 3);
  const auto& f24 = rep.map(2, 4);
  const auto& f34 = rep.map(3, 4);
  auto rk = [&](const FieldMatrix<F>& m) { return static_cast<int>(rank(field, m)); };
  return {rep.dim(1),
          rep.dim(2),
          rep.dim(3),
          rep.dim(4),
          rk(f12),
          rk(f13),
          rk(f24),
          rk(f34),
          rk(vconcat(field, f12, f13)),
          rk(hconcat(field, f24, negate(field, f34))),
          rk(multiply(field, f24, f12))};
}

namespace detail {

/// Inverse of the 11x11 matrix whose k-th column is the profile of M_k.
inline const FieldMatrix<RationalField>& profile_inverse() {
  static const FieldMatrix<RationalField> inv = [] {
    const RationalField Q;
    auto cols = zero_matrix(Q, 11, 11);
    for (int k = 1; k <= 11; ++k) {
      const auto p = rank_profile(indecomposable(k, Q));
      for (std::size_t r = 0; r < 11; ++r) cols(r, static_cast<std::size_t>(k - 1)) = p[r];
    }
    auto out = inverse(Q, cols);
    if (!out) throw std::logic_error("indecomposable rank profiles are linearly dependent");
    return *out;
  }();
  return inv;
}

}  // namespace detail

/// Solves for the multiplicities whose profiles sum to p. Throws
/// std::domain_error if the solution is not a nonnegative integer vector.
inline Multiset11 multiplicities_from_profile(const RankProfile& p) {
  const auto& inv = detail::profile_inverse();
  Multiset11 out;
  for (std::size_t k = 0; k < 11; ++k) {
    boost::multiprecision::cpp_rational x = 0;
    for (std::size_t r = 0; r < 11; ++r) x += inv(k, r) * p[r];
    if (denominator(x) != 1 || x < 0) {
      std::ostringstream os;
      os << "rank profile is not a sum of indecomposable profiles (coefficient of M" << (k + 1) << " is " << x << ")";
      throw std::domain_error(os.str());
    }
    out.m[k] = static_cast<int>(numerator(x));
  }
  return out;
}

template <Field F>
Multiset11 certify(const Representation<F>& rep) {
  return multiplicities_from_profile(rank_profile(rep));
}

// ---------------------------------------------------------------------------
// Projective resolutions and Ext

/// 0 -> P2 -> P1 -> P0 -> M -> 0 with each P a direct sum of projective
/// indecomposables. The differentials are built from normalized Hom basis
/// vectors with signs chosen so that the complex is exact; construction
/// throws std::logic_error if no sign choice works.
class ProjectiveResolution {
 public:
  using Q = RationalField;
  using Rep = Representation<Q>;

  explicit ProjectiveResolution(IndecomposableId k) : module_(k) {
    check_id(k);
    switch (k) {
      case 1: terms_ = {{11}, {7, 8}, {4}}; break;
      case 2: terms_ = {{7}, {4}}; break;
      case 3: terms_ = {{8}, {4}}; break;
      case 5: terms_ = {{11}, {8}}; break;
      case 6: terms_ = {{11}, {7}}; break;
      case 9: terms_ = {{11}, {4}}; break;
      case 10: terms_ = {{7, 8}, {4}}; break;
      default: terms_ = {{k}}; break;  // projective
    }
    build();
  }

  IndecomposableId module() const { return module_; }
  /// Summands of P_0, P_1, ...
  const std::vector<std::vector<IndecomposableId>>& terms() const { return terms_; }
  std::size_t length() const { return terms_.size() - 1; }
  const Rep& term(std::size_t j) const { return reps_.at(j); }
  /// d_j : P_j -> P_{j-1}, for j = 1..length().
  const VertexMaps<Q>& differential(std::size_t j) const { return diffs_.at(j - 1); }
  /// Signs applied to the Hom basis blocks of d_j, row-major over (target, source) summands.
  const std::vector<int>& signs(std::size_t j) const { return signs_.at(j - 1); }

  std::string to_string() const {
    std::ostringstream os;
    os << "0";
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      os << " -> ";
      for (std::size_t s = 0; s < it->size(); ++s) os << (s ? "+" : "") << 'M' << (*it)[s];
    }
    os << " -> M" << module_ << " -> 0";
    return os.str();
  }

 private:
  struct Block {
    std::size_t tgt;  // summand index in P_{j-1}
    std::size_t src;  // summand index in P_j
    VertexMaps<Q> map;
  };

  void build() {
    const Q field;
    for (const auto& summands : terms_) {
      auto rep = Rep::zero(field, grid_2x2(), {0, 0, 0, 0});
      for (auto s : summands) rep = direct_sum(rep, indecomposable(s, field));
      reps_.push_back(std::move(rep));
    }
    std::vector<std::vector<Block>> blocks;
    for (std::size_t j = 1; j < terms_.size(); ++j) {
      std::vector<Block> bj;
      for (std::size_t t = 0; t < terms_[j - 1].size(); ++t)
        for (std::size_t s = 0; s < terms_[j].size(); ++s) {
          const auto basis =
              hom_basis(indecomposable(terms_[j][s], field), indecomposable(terms_[j - 1][t], field));
          if (basis.size() > 1) throw std::logic_error("resolution: Hom space of dimension > 1");
          if (basis.size() == 1) bj.push_back({t, s, basis.front()});
        }
      blocks.push_back(std::move(bj));
    }
    std::size_t total_blocks = 0;
    for (const auto& b : blocks) total_blocks += b.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total_blocks); ++mask) {
      std::vector<std::vector<int>> signs;
      std::size_t bit = 0;
      for (const auto& bj : blocks) {
        std::vector<int> sj;
        for (std::size_t b = 0; b < bj.size(); ++b, ++bit) sj.push_back((mask >> bit) & 1 ? -1 : 1);
        signs.push_back(std::move(sj));
      }
      std::vector<VertexMaps<Q>> diffs;
      for (std::size_t j = 1; j < terms_.size(); ++j) diffs.push_back(assemble(j, blocks[j - 1], signs[j - 1]));
      if (exact(diffs)) {
        diffs_ = std::move(diffs);
        signs_ = std::move(signs);
        return;
      }
    }
    throw std::logic_error("no sign choice makes the resolution of M" + std::to_string(module_) + " exact");
  }

  /// Block matrix of d_j at each vertex.
  VertexMaps<Q> assemble(std::size_t j, const std::vector<Block>& blocks, const std::vector<int>& signs) const {
    const Q field;
    const auto& src = reps_[j];
    const auto& tgt = reps_[j - 1];
    VertexMaps<Q> out;
    for (int v = 1; v <= 4; ++v) {
      auto m = zero_matrix(field, static_cast<std::size_t>(tgt.dim(v)), static_cast<std::size_t>(src.dim(v)));
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto row0 = offset(terms_[j - 1], blocks[b].tgt, v);
        const auto col0 = offset(terms_[j], blocks[b].src, v);
        const auto& blk = blocks[b].map[static_cast<std::size_t>(v - 1)];
        for (std::size_t r = 0; r < blk.rows(); ++r)
          for (std::size_t c = 0; c < blk.cols(); ++c)
            m(row0 + r, col0 + c) = field.mul(blk(r, c), field.from_int(signs[b]));
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  static std::size_t offset(const std::vector<IndecomposableId>& summands, std::size_t index, int v) {
    std::size_t off = 0;
    for (std::size_t s = 0; s < index; ++s) off += static_cast<std::size_t>(indecomposable_dims(summands[s])[static_cast<std::size_t>(v - 1)]);
    return off;
  }

  /// Module-map check, d_{j} d_{j+1} = 0, exactness at each P_j (j >= 1),
  /// and coker d_1 isomorphic to M via its rank profile.
  bool exact(const std::vector<VertexMaps<Q>>& diffs) const {
    const Q field;
    for (std::size_t j = 0; j < diffs.size(); ++j) {
      if (!is_module_map(reps_[j + 1], reps_[j], diffs[j])) return false;
    }
    for (std::size_t j = 0; j + 1 < diffs.size(); ++j)
      for (std::size_t v = 0; v < 4; ++v)
        if (!is_zero_matrix(field, multiply(field, diffs[j][v], diffs[j + 1][v]))) return false;
    for (std::size_t j = 1; j < reps_.size(); ++j) {
      for (std::size_t v = 0; v < 4; ++v) {
        const auto dim = reps_[j].dims()[v];
        const auto out_rank = static_cast<int>(rank(field, diffs[j - 1][v]));
        const auto in_rank = j < diffs.size() ? static_cast<int>(rank(field, diffs[j][v])) : 0;
        if (dim - out_rank != in_rank) return false;  // ker d_j = im d_{j+1}
      }
    }
    if (diffs.empty()) return true;
    const auto coker = cokernel(reps_[0], diffs[0]);
    return certify(coker) == Multiset11::of({{module_, 1}});
  }

  static bool is_module_map(const Rep& src, const Rep& tgt, const VertexMaps<Q>& phi) {
    const Q field;
    for (const auto& a : src.quiver().arrows()) {
      const auto lhs = multiply(field, tgt.map(a.source, a.target), phi[static_cast<std::size_t>(a.source - 1)]);
      const auto rhs = multiply(field, phi[static_cast<std::size_t>(a.target - 1)], src.map(a.source, a.target));
      if (lhs != rhs) return false;
    }
    return true;
  }

  /// Quotient representation tgt / im(phi).
  static Rep cokernel(const Rep& tgt, const VertexMaps<Q>& phi) {
    const Q field;
    std::vector<FieldMatrix<Q>> quot(4), sect(4);
    std::vector<int> dims(4);
    for (std::size_t v = 0; v < 4; ++v) {
      // Rows of q annihilate im(phi_v); q has full row rank.
      auto q = transpose(kernel_basis(field, transpose(phi[v])));
      if (q.rows() == 0) q = zero_matrix(field, 0, static_cast<std::size_t>(tgt.dims()[v]));
      const auto pivots = row_reduce(field, q);
      auto s = zero_matrix(field, q.cols(), q.rows());
      for (std::size_t r = 0; r < pivots.size(); ++r) s(pivots[r], r) = field.one();
      dims[v] = static_cast<int>(q.rows());
      quot[v] = std::move(q);
      sect[v] = std::move(s);
    }
    std::vector<FieldMatrix<Q>> maps;
    for (const auto& a : tgt.quiver().arrows()) {
      const auto s = static_cast<std::size_t>(a.source - 1);
      const auto t = static_cast<std::size_t>(a.target - 1);
      maps.push_back(multiply(field, quot[t], multiply(field, tgt.map(a.source, a.target), sect[s])));
    }
    return Rep(field, tgt.quiver(), std::move(dims), std::move(maps));
  }

  IndecomposableId module_;
  std::vector<std::vector<IndecomposableId>> terms_;
  std::vector<Rep> reps_;
  std::vector<VertexMaps<Q>> diffs_;
  std::vector<std::vector<int>> signs_;
};

inline const ProjectiveResolution& resolution(IndecomposableId k) {
  check_id(k);
  static const std::vector<ProjectiveResolution> all = [] {
    std::vector<ProjectiveResolution> v;
    for (int j = 1; j <= 11; ++j) v.emplace_back(j);
    return v;
  }();
  return all[static_cast<std::size_t>(k - 1)];
}

/// Cohomology of 0 -> Hom(P0,N) -> Hom(P1,N) -> Hom(P2,N) -> 0.
struct ExtDims {
  std::size_t hom = 0;   // H^0
  std::size_t ext1 = 0;  // H^1
  std::size_t ext2 = 0;  // H^2
  std::array<std::size_t, 3> hom_terms{};  // dim Hom(P_j, N), zero past the length
};

inline ExtDims ext_dims(IndecomposableId M, const Representation<RationalField>& N) {
  const RationalField Q;
  const auto& res = resolution(M);
  ExtDims out;
  std::array<std::vector<VertexMaps<RationalField>>, 3> bases;
  for (std::size_t j = 0; j <= res.length(); ++j) {
    bases[j] = hom_basis(res.term(j), N);
    out.hom_terms[j] = bases[j].size();
  }
  // rank of psi -> psi o d_j on Hom(P_{j-1}, N), via the span of the images.
  auto pullback_rank = [&](std::size_t j) -> std::size_t {
    if (j > res.length() || bases[j - 1].empty()) return 0;
    const auto& d = res.differential(j);
    std::size_t ambient = 0;
    for (int v = 1; v <= 4; ++v) ambient += static_cast<std::size_t>(N.dim(v) * res.term(j).dim(v));
    auto images = zero_matrix(Q, ambient, bases[j - 1].size());
    for (std::size_t b = 0; b < bases[j - 1].size(); ++b) {
      const auto img = compose(Q, bases[j - 1][b], d);
      std::size_t row = 0;
      for (const auto& m : img)
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) images(row++, b) = m(r, c);
    }
    return rank(Q, images);
  };
  const std::size_t r1 = pullback_rank(1);
  const std::size_t r2 = pullback_rank(2);
  out.hom = out.hom_terms[0] - r1;
  out.ext1 = out.hom_terms[1] - r2 - r1;
  out.ext2 = out.hom_terms[2] - r2;
  return out;
}

inline ExtDims ext_dims(IndecomposableId M, const Multiset11& N) { return ext_dims(M, realize(N, RationalField{})); }

inline std::size_t ext1_dim(IndecomposableId M, IndecomposableId N) {
  static const std::array<std::array<std::size_t, 11>, 11> table = [] {
    std::array<std::array<std::size_t, 11>, 11> t{};
    for (int a = 1; a <= 11; ++a)
      for (int b = 1; b <= 11; ++b)
        t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
            ext_dims(a, indecomposable(b, RationalField{})).ext1;
    return t;
  }();
  check_id(M);
  check_id(N);
  return table[static_cast<std::size_t>(M - 1)][static_cast<std::size_t>(N - 1)];
}

inline std::size_t ext1_dim(IndecomposableId M, const Multiset11& N) {
  std::size_t total = 0;
  for (int k = 1; k <= 11; ++k) total += static_cast<std::size_t>(N.at(k)) * ext1_dim(M, k);
  return total;
}

/// True iff Ext^1(M_i, M_j) = 0 for every ordered pair of distinct summand types.
inline bool cbs_check(const Multiset11& decomposition) {
  const auto support = decomposition.support();
  for (auto a : support)
    for (auto b : support)
      if (a != b && ext1_dim(a, b) != 0) return false;
  return true;
}

}  // namespace crystal_grid::modules
