#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "biharmonic/numeric.hpp"

namespace biharmonic {

// Exact element c * (sqrt(w))^parity of the ring generated by sqrt(w).
// The recurrence a_n = sqrt(w)*a_{n-1} - a_{n-2} alternates between the
// two parities, so subtraction only ever meets like parities; zero acts as
// either. sqrt(w) itself is never evaluated numerically.
class QuadraticInt {
 public:
  QuadraticInt(std::uint64_t w, Integer coeff, unsigned parity)
      : w_(w), coeff_(std::move(coeff)), parity_(parity & 1) {
    if (w_ == 0) throw std::invalid_argument("QuadraticInt: w must be >= 1");
    if (coeff_ == 0) parity_ = 0;  // canonical zero
  }

  static QuadraticInt zero(std::uint64_t w) { return {w, 0, 0}; }
  static QuadraticInt unit(std::uint64_t w) { return {w, 1, 0}; }

  std::uint64_t w() const { return w_; }
  const Integer& coeff() const { return coeff_; }
  unsigned parity() const { return parity_; }
  bool is_zero() const { return coeff_ == 0; }

  // multiply by sqrt(w); parity 1 wraps to parity 0 picking up a factor w
  QuadraticInt times_sqrt_w() const {
    if (parity_ == 0) return {w_, coeff_, 1};
    return {w_, coeff_ * w_, 0};
  }

  QuadraticInt operator-(const QuadraticInt& rhs) const {
    if (w_ != rhs.w_)
      throw std::invalid_argument("QuadraticInt: mixed w in subtraction");
    if (is_zero()) return {w_, -rhs.coeff_, rhs.parity_};
    if (rhs.is_zero()) return *this;
    if (parity_ != rhs.parity_)
      throw std::logic_error("QuadraticInt: parity mismatch in subtraction");
    return {w_, coeff_ - rhs.coeff_, parity_};
  }

  bool operator==(const QuadraticInt& rhs) const {
    return w_ == rhs.w_ && coeff_ == rhs.coeff_ && parity_ == rhs.parity_;
  }

  // (c * sqrt(w)^e)^2 = c^2 * w^e, always a plain integer
  Integer square() const {
    Integer s = coeff_ * coeff_;
    return parity_ ? s * w_ : s;
  }

 private:
  std::uint64_t w_;
  Integer coeff_;
  unsigned parity_;
};

// Chebyshev T_2: theta(x) = 2x^2 - 1.
inline Rational chebyshev_t2(const Rational& x) { return 2 * x * x - 1; }
inline Integer chebyshev_t2(const Integer& x) { return 2 * x * x - 1; }

// For ring elements the square is a plain integer, so theta is too.
inline Integer chebyshev_t2(const QuadraticInt& x) {
  return 2 * x.square() - 1;
}

// u_0 = 0, u_1 = 1, u_{n+1} = (w-2)u_n - u_{n-1} + 2. Consecutive terms
// are exactly the positive solutions of (x+y-1)^2 = wxy.
inline std::vector<Integer> u_sequence(std::uint64_t w, std::size_t n_max) {
  if (w == 0) throw std::invalid_argument("u_sequence: w must be >= 1");
  std::vector<Integer> u;
  u.reserve(n_max + 1);
  u.push_back(0);
  if (n_max >= 1) u.push_back(1);
  const Integer c = Integer(w) - 2;
  for (std::size_t n = 2; n <= n_max; ++n)
    u.push_back(c * u[n - 1] - u[n - 2] + 2);
  return u;
}

// The same sequence written as a homogeneous order-3 recurrence:
// u_{n+2} = (w-1)u_{n+1} - (w-1)u_n + u_{n-1}, seeded with 0, 1, w.
inline std::vector<Integer> u_sequence_order3(std::uint64_t w,
                                              std::size_t n_max) {
  if (w == 0) throw std::invalid_argument("u_sequence_order3: w must be >= 1");
  std::vector<Integer> u;
  u.reserve(n_max + 1);
  u.push_back(0);
  if (n_max >= 1) u.push_back(1);
  if (n_max >= 2) u.push_back(Integer(w));
  const Integer c = Integer(w) - 1;
  for (std::size_t n = 3; n <= n_max; ++n)
    u.push_back(c * u[n - 1] - c * u[n - 2] + u[n - 3]);
  return u;
}

// a_0 = 0, a_1 = 1, a_n = sqrt(w)*a_{n-1} - a_{n-2}, kept exact in the
// (coeff, parity) representation.
inline std::vector<QuadraticInt> a_sequence(std::uint64_t w,
                                            std::size_t n_max) {
  if (w == 0) throw std::invalid_argument("a_sequence: w must be >= 1");
  std::vector<QuadraticInt> a;
  a.reserve(n_max + 1);
  a.push_back(QuadraticInt::zero(w));
  if (n_max >= 1) a.push_back(QuadraticInt::unit(w));
  for (std::size_t n = 2; n <= n_max; ++n)
    a.push_back(a[n - 1].times_sqrt_w() - a[n - 2]);
  return a;
}

// theta(a_n) = 2u_n - 1 for every n <= n_max; equivalently a_n^2 = u_n.
inline bool theta_u_link(std::uint64_t w, std::size_t n_max) {
  const auto u = u_sequence(w, n_max);
  const auto a = a_sequence(w, n_max);
  for (std::size_t n = 0; n <= n_max; ++n)
    if (chebyshev_t2(a[n]) != 2 * u[n] - 1) return false;
  return true;
}

}  // namespace biharmonic
