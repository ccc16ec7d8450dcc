#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace biharmonic {

// Exact arbitrary-precision integers and fractions. Rational is always kept
// in lowest terms with a positive denominator by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Integer as_integer(const Rational& r) {
  if (!is_integer(r))
    throw std::invalid_argument("as_integer: " + r.str() + " is not an integer");
  return boost::multiprecision::numerator(r);
}

inline Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Rational rpow(const Rational& base, unsigned exp) {
  return Rational(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

// Floor of the t-th root of a nonnegative integer, by bisection on the bit
// length. No floating point anywhere.
inline Integer floor_nth_root(const Integer& x, unsigned t) {
  if (t == 0) throw std::invalid_argument("floor_nth_root: index must be >= 1");
  if (x < 0) throw std::invalid_argument("floor_nth_root: negative radicand");
  if (x == 0 || x == 1 || t == 1) return x;
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  Integer lo = 1;
  Integer hi = Integer(1) << (bits / t + 1);
  // invariant: lo^t <= x < hi^t
  while (hi - lo > 1) {
    Integer mid = (lo + hi) >> 1;
    if (ipow(mid, t) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Exact t-th root, or nullopt when x is not a perfect t-th power.
inline std::optional<Integer> exact_nth_root(const Integer& x, unsigned t) {
  Integer r = floor_nth_root(x, t);
  if (ipow(r, t) == x) return r;
  return std::nullopt;
}

// Exact t-th root of a fraction: numerator and denominator must both be
// perfect t-th powers (the fraction is in lowest terms, so the roots are
// coprime and the result is already reduced).
inline std::optional<Rational> exact_nth_root(const Rational& x, unsigned t) {
  if (x < 0) return std::nullopt;
  auto rn = exact_nth_root(numerator(x), t);
  if (!rn) return std::nullopt;
  auto rd = exact_nth_root(denominator(x), t);
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

inline Integer isqrt(const Integer& x) {
  if (x < 0) throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(x);
}

inline bool is_perfect_square(const Integer& x) {
  if (x < 0) return false;
  Integer r = boost::multiprecision::sqrt(x);
  return r * r == x;
}

}  // namespace biharmonic
