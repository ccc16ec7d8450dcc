#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "biharmonic/numeric.hpp"

namespace biharmonic {

// Result of a geometric mean: exact rational when the product of the
// inputs is a perfect t-th power, otherwise the radical root(radicand, t)
// kept symbolically plus a decimal approximation (1e-12 relative, display
// only).
struct GeometricValue {
  enum class Kind { exact, radical };
  Kind kind = Kind::exact;
  Rational exact_value;  // set when kind == exact
  Rational radicand;     // product of the inputs, set when kind == radical
  unsigned index = 1;    // the t of the t-th root
  double approx = 0.0;

  bool is_exact() const { return kind == Kind::exact; }
};

namespace detail {

inline void require_positive(const std::vector<Rational>& xs,
                             const char* where) {
  if (xs.empty())
    throw std::invalid_argument(std::string(where) + ": empty input");
  for (const auto& x : xs)
    if (x <= 0)
      throw std::invalid_argument(std::string(where) +
                                  ": entries must be positive");
}

inline double approx_root(const Rational& radicand, unsigned t) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float x(radicand);
  return static_cast<double>(
      boost::multiprecision::pow(x, Float(1) / Float(t)));
}

}  // namespace detail

inline Rational arithmetic_mean(const std::vector<Rational>& xs) {
  detail::require_positive(xs, "arithmetic_mean");
  Rational sum = 0;
  for (const auto& x : xs) sum += x;
  return sum / Integer(xs.size());
}

inline Rational harmonic_mean(const std::vector<Rational>& xs) {
  detail::require_positive(xs, "harmonic_mean");
  Rational inv_sum = 0;
  for (const auto& x : xs) inv_sum += 1 / x;
  return Integer(xs.size()) / inv_sum;
}

inline Rational contraharmonic_mean(const std::vector<Rational>& xs) {
  detail::require_positive(xs, "contraharmonic_mean");
  Rational sq = 0, sum = 0;
  for (const auto& x : xs) {
    sq += x * x;
    sum += x;
  }
  return sq / sum;
}

// Arithmetic mean of the harmonic and contraharmonic means.
inline Rational biharmonic_mean(const std::vector<Rational>& xs) {
  return (harmonic_mean(xs) + contraharmonic_mean(xs)) / 2;
}

inline GeometricValue geometric_mean(const std::vector<Rational>& xs) {
  detail::require_positive(xs, "geometric_mean");
  const unsigned t = static_cast<unsigned>(xs.size());
  Rational product = 1;
  for (const auto& x : xs) product *= x;

  GeometricValue g;
  g.index = t;
  if (auto root = exact_nth_root(product, t)) {
    g.kind = GeometricValue::Kind::exact;
    g.exact_value = *root;
    g.approx = detail::approx_root(product, t);
  } else {
    g.kind = GeometricValue::Kind::radical;
    g.radicand = product;
    g.approx = detail::approx_root(product, t);
  }
  return g;
}

}  // namespace biharmonic
