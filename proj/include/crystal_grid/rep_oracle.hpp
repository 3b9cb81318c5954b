#pragma once

// Brute-force oracle over genuine points of the representation varieties.
// 2x2 points come from a rank normal form conjugated by random invertible
// matrices; A_n points are uniformly random. All arithmetic is mod p.

#include "crystal_grid/crystal_2x2.hpp"
#include "crystal_grid/crystal_an.hpp"
#include "crystal_grid/field.hpp"
#include "crystal_grid/grid_quiver.hpp"
#include "crystal_grid/matrix.hpp"
#include "crystal_grid/module_algebra.hpp"
#include "crystal_grid/representation.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal_grid::oracle {

using PRep = Representation<PrimeField>;
using PMat = FieldMatrix<PrimeField>;

/// SplitMix64; used to derive independent per-sample seeds from one run seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Seed for stream `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 outer(seed);
  SplitMix64 inner(outer.next() ^ (index * 0xD1B54A32D192ED03ULL));
  return inner.next();
}

struct SampleConfig {
  std::uint32_t prime = 32003;
  int count = 50;
  std::uint64_t seed = 0;

  void validate() const {
    if (prime < 101) throw std::invalid_argument("SampleConfig: prime must be at least 101");
    if (!is_prime(prime)) throw std::invalid_argument("SampleConfig: " + std::to_string(prime) + " is not prime");
    if (count < 1) throw std::invalid_argument("SampleConfig: sample count must be positive");
  }
};

namespace detail {

inline PMat random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
  auto m = zero_matrix(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Uniform element of GL_n(F_p) by rejection, with its inverse.
inline std::pair<PMat, PMat> random_invertible(const PrimeField& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto g = random_matrix(field, n, n, rng);
    if (auto inv = inverse(field, g)) return {std::move(g), std::move(*inv)};
  }
}

}  // namespace detail

/// A point of the component c: the normal form alpha1 = [I_r1 0; 0 0] into
/// W = k^{d2+d3}, alpha2 sending the next r2 coordinates of W onto k^{r2},
/// conjugated by random elements of GL_{d1} x GL_{d2+d3} x GL_{d4}. Then
/// alpha1 = [f12; f13] and alpha2 = [f24, -f34]. The rank pair is (r1, r2)
/// exactly.
inline PRep sample_component_point(const g22::Component2x2& c, const SampleConfig& cfg, std::uint64_t sample_index = 0) {
  cfg.validate();
  const PrimeField field(cfg.prime);
  std::mt19937_64 rng(derive_seed(cfg.seed, sample_index));
  const auto d1 = static_cast<std::size_t>(c.d(1)), d2 = static_cast<std::size_t>(c.d(2)),
             d3 = static_cast<std::size_t>(c.d(3)), d4 = static_cast<std::size_t>(c.d(4));
  const std::size_t s = d2 + d3;
  const auto r1 = static_cast<std::size_t>(c.r1()), r2 = static_cast<std::size_t>(c.r2());
  if (r1 + r2 > s || r1 > d1 || r2 > d4) throw std::logic_error("sample_component_point: impossible ranks");

  auto a1 = zero_matrix(field, s, d1);
  for (std::size_t k = 0; k < r1; ++k) a1(k, k) = field.one();
  auto a2 = zero_matrix(field, d4, s);
  for (std::size_t k = 0; k < r2; ++k) a2(k, r1 + k) = field.one();

  const auto h1 = detail::random_invertible(field, d1, rng).second;
  const auto [g2, g2_inv] = detail::random_invertible(field, s, rng);
  const auto g3 = detail::random_invertible(field, d4, rng).first;
  a1 = multiply(field, g2, multiply(field, a1, h1));
  a2 = multiply(field, g3, multiply(field, a2, g2_inv));

  const auto f12 = submatrix(a1, 0, d2, 0, d1);
  const auto f13 = submatrix(a1, d2, d3, 0, d1);
  const auto f24 = submatrix(a2, 0, d4, 0, d2);
  const auto f34 = negate(field, submatrix(a2, 0, d4, d2, d3));
  // Arrow order of the 2x2 grid: 1->2, 1->3, 2->4, 3->4.
  return PRep(field, GridQuiver({2, 2}), {c.d(1), c.d(2), c.d(3), c.d(4)}, {f12, f13, f24, f34});
}

/// Uniformly random matrices on the arrows of the A_n chain.
inline PRep sample_an_point(const std::vector<int>& dims, const SampleConfig& cfg, std::uint64_t sample_index = 0) {
  cfg.validate();
  const PrimeField field(cfg.prime);
  std::mt19937_64 rng(derive_seed(cfg.seed, sample_index));
  GridQuiver q({static_cast<int>(dims.size())});
  std::vector<PMat> maps;
  for (const auto& a : q.arrows())
    maps.push_back(detail::random_matrix(field, static_cast<std::size_t>(dims.at(static_cast<std::size_t>(a.target - 1))),
                                         static_cast<std::size_t>(dims.at(static_cast<std::size_t>(a.source - 1))), rng));
  return PRep(field, std::move(q), dims, std::move(maps));
}

/// dim coker of the incoming arrows stacked side by side.
template <Field F>
int epsilon_of_rep(const Representation<F>& rep, int i) {
  const auto& q = rep.quiver();
  q.check_vertex(i);
  const auto& field = rep.field();
  auto stacked = zero_matrix(field, static_cast<std::size_t>(rep.dim(i)), 0);
  for (const auto& a : q.arrows())
    if (a.target == i) stacked = hconcat(field, stacked, rep.map(a.source, a.target));
  return rep.dim(i) - static_cast<int>(rank(field, stacked));
}

/// dim ker of the outgoing arrows stacked on top of each other.
template <Field F>
int epsilon_star_of_rep(const Representation<F>& rep, int i) {
  const auto& q = rep.quiver();
  q.check_vertex(i);
  const auto& field = rep.field();
  auto stacked = zero_matrix(field, 0, static_cast<std::size_t>(rep.dim(i)));
  for (const auto& a : q.arrows())
    if (a.source == i) stacked = vconcat(field, stacked, rep.map(a.source, a.target));
  return rep.dim(i) - static_cast<int>(rank(field, stacked));
}

/// The block matrix F_i(f) from out_1(i) to out_2(i), or its starred version
/// from in_1(i) to in_2(i) built from transposes. Blocks are +f for the
/// lex-smaller member of a pair and -f for the larger.
template <Field F>
FieldMatrix<F> f_matrix(const Representation<F>& rep, int i, bool starred) {
  const auto& q = rep.quiver();
  const auto& field = rep.field();
  const auto nb = q.neighborhoods(i);
  const auto& dom = starred ? nb.in1 : nb.out1;
  const auto& cod = starred ? nb.in2 : nb.out2;
  const auto& pairs = starred ? nb.in_pairs : nb.out_pairs;
  std::vector<std::size_t> col0{0}, row0{0};
  for (int j : dom) col0.push_back(col0.back() + static_cast<std::size_t>(rep.dim(j)));
  for (int k : cod) row0.push_back(row0.back() + static_cast<std::size_t>(rep.dim(k)));
  auto out = zero_matrix(field, row0.back(), col0.back());
  if (dom.size() <= 1) return out;  // F_i = 0 by convention
  auto pos = [](const std::vector<int>& xs, int v) {
    return static_cast<std::size_t>(std::find(xs.begin(), xs.end(), v) - xs.begin());
  };
  auto put = [&](int k, int j, const FieldMatrix<F>& blk, bool negative) {
    const auto r0 = row0[pos(cod, k)], c0 = col0[pos(dom, j)];
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < blk.cols(); ++c) out(r0 + r, c0 + c) = negative ? field.neg(blk(r, c)) : blk(r, c);
  };
  for (const auto& p : pairs) {
    if (starred) {
      put(p.k, p.j1, transpose(rep.map(p.k, p.j1)), false);
      put(p.k, p.j2, transpose(rep.map(p.k, p.j2)), true);
    } else {
      put(p.k, p.j1, rep.map(p.j1, p.k), false);
      put(p.k, p.j2, rep.map(p.j2, p.k), true);
    }
  }
  return out;
}

template <Field F>
int exttilde_dim(const Representation<F>& rep, int i, bool starred) {
  const auto m = f_matrix(rep, i, starred);
  return static_cast<int>(m.cols() - rank(rep.field(), m));
}

/// (rank [f12; f13], rank [f24, -f34]) on the 2x2 grid.
template <Field F>
g22::Ranks2 rank_pair(const Representation<F>& rep) {
  const auto p = modules::rank_profile(rep);
  return {p[8], p[9]};
}

enum class EpsilonKind { epsilon, epsilon_star };

/// Minimum of epsilon_i (or epsilon*_i) over cfg.count sampled points of c.
inline int estimate_component_invariant(const g22::Component2x2& c, int i, EpsilonKind kind, const SampleConfig& cfg) {
  cfg.validate();
  int best = std::numeric_limits<int>::max();
  for (int k = 0; k < cfg.count; ++k) {
    const auto rep = sample_component_point(c, cfg, static_cast<std::uint64_t>(k));
    const int v = kind == EpsilonKind::epsilon ? epsilon_of_rep(rep, i) : epsilon_star_of_rep(rep, i);
    best = std::min(best, v);
  }
  return best;
}

/// Sampled minima of eps_i and eps*_i for all four vertices from one set of points.
struct ComponentEstimates {
  std::array<int, 4> epsilon{};
  std::array<int, 4> epsilon_star{};
};

inline ComponentEstimates estimate_component(const g22::Component2x2& c, const SampleConfig& cfg) {
  cfg.validate();
  ComponentEstimates out;
  out.epsilon.fill(std::numeric_limits<int>::max());
  out.epsilon_star.fill(std::numeric_limits<int>::max());
  for (int k = 0; k < cfg.count; ++k) {
    const auto rep = sample_component_point(c, cfg, static_cast<std::uint64_t>(k));
    for (int i = 1; i <= 4; ++i) {
      auto& e = out.epsilon[static_cast<std::size_t>(i - 1)];
      auto& es = out.epsilon_star[static_cast<std::size_t>(i - 1)];
      e = std::min(e, epsilon_of_rep(rep, i));
      es = std::min(es, epsilon_star_of_rep(rep, i));
    }
  }
  return out;
}

/// Same for the A_n chain with random points of E_C(nu).
inline int estimate_an_invariant(const an::AnComponent& c, int i, EpsilonKind kind, const SampleConfig& cfg) {
  cfg.validate();
  int best = std::numeric_limits<int>::max();
  for (int k = 0; k < cfg.count; ++k) {
    const auto rep = sample_an_point(c.dims, cfg, static_cast<std::uint64_t>(k));
    const int v = kind == EpsilonKind::epsilon ? epsilon_of_rep(rep, i) : epsilon_star_of_rep(rep, i);
    best = std::min(best, v);
  }
  return best;
}

/// Decomposition of a 2x2 representation into M1..M11 via its rank profile.
template <Field F>
modules::Multiset11 certify_decomposition(const Representation<F>& rep) {
  return modules::certify(rep);
}

}  // namespace crystal_grid::oracle
