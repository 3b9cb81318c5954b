#pragma once

// Exact scalar fields used by the linear algebra layer. Each field is a small
// value object that owns the arithmetic; elements are plain value_type values.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace crystal_grid {

template <class F>
concept Field = requires(const F& field, const typename F::value_type& a,
                         const typename F::value_type& b, std::int64_t n) {
  typename F::value_type;
  { field.zero() } -> std::convertible_to<typename F::value_type>;
  { field.one() } -> std::convertible_to<typename F::value_type>;
  { field.from_int(n) } -> std::convertible_to<typename F::value_type>;
  { field.add(a, b) } -> std::convertible_to<typename F::value_type>;
  { field.sub(a, b) } -> std::convertible_to<typename F::value_type>;
  { field.mul(a, b) } -> std::convertible_to<typename F::value_type>;
  { field.neg(a) } -> std::convertible_to<typename F::value_type>;
  { field.inv(a) } -> std::convertible_to<typename F::value_type>;
  { field.is_zero(a) } -> std::convertible_to<bool>;
  { field.to_string(a) } -> std::convertible_to<std::string>;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
      throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                  " is not a prime below 2^31");
    }
  }

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  bool is_zero(value_type a) const { return a == 0; }
  std::string to_string(value_type a) const { return std::to_string(a); }

  /// Representative in (-p/2, p/2], handy for printing small signed entries.
  std::int64_t to_signed(value_type a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The rationals, with arbitrary-precision numerators and denominators.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const { return n; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  std::string to_string(const value_type& a) const { return a.str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

}  // namespace crystal_grid
