#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "biharmonic/parallel.hpp"
#include "biharmonic/recurrences.hpp"

namespace biharmonic {

// The three conics tied together by theta and squaring:
//   C(w):  x^2 + y^2 - sqrt(w)*x*y = 1
//   C2(w): (x + y - 1)^2 = w*x*y
//   C3(w): (x + y)^2 = w*(x + 1)*(y + 1)
enum class ConicKind { C, C2, C3 };

struct ConicId {
  ConicKind which = ConicKind::C;
  std::uint64_t w = 1;
};

// Membership on C(w) for ring elements sharing the conic's w. The whole
// equation is evaluated as a pair (rational part, sqrt(w) part), so the
// test is exact for non-square w too.
inline bool conic_contains(const ConicId& conic, const QuadraticInt& x,
                           const QuadraticInt& y) {
  if (conic.which != ConicKind::C)
    throw std::invalid_argument("conic_contains: ring points only apply to C(w)");
  if (x.w() != conic.w || y.w() != conic.w)
    throw std::invalid_argument("conic_contains: w mismatch between conic and points");
  // sqrt(w) * x * y = cx*cy * sqrt(w)^(px+py+1)
  const unsigned e = x.parity() + y.parity() + 1;
  Integer cross = x.coeff() * y.coeff();
  Integer rational_part = x.square() + y.square();
  Integer sqrt_part = 0;
  if (e % 2 == 0)
    rational_part -= cross * ipow(Integer(conic.w), e / 2);
  else
    sqrt_part = cross * ipow(Integer(conic.w), (e - 1) / 2);
  return rational_part == 1 && sqrt_part == 0;
}

// Membership on C2(w) / C3(w) for rational points.
inline bool conic_contains(const ConicId& conic, const Rational& x,
                           const Rational& y) {
  const Integer w = conic.w;
  switch (conic.which) {
    case ConicKind::C2:
      return (x + y - 1) * (x + y - 1) == w * x * y;
    case ConicKind::C3:
      return (x + y) * (x + y) == w * (x + 1) * (y + 1);
    case ConicKind::C:
      throw std::invalid_argument(
          "conic_contains: C(w) needs ring points, not rationals");
  }
  return false;
}

// Checks the three conic correspondences on the recurrence orbits:
// consecutive a-pairs lie on C(w), consecutive u-pairs on C2(w), and
//   (x,y) in C(w)   <=>  (theta(x), theta(y)) in C3(w)
//   (x,y) in C(w)   <=>  (x^2, y^2) in C2(w)
//   (x,y) in C2(w)  <=>  (2x-1, 2y-1) in C3(w)
// hold with equality of membership on every sampled pair.
inline bool conic_maps_check(std::uint64_t w, std::size_t sample_count) {
  const ConicId c{ConicKind::C, w}, c2{ConicKind::C2, w}, c3{ConicKind::C3, w};
  const auto a = a_sequence(w, sample_count);
  const auto u = u_sequence(w, sample_count);
  for (std::size_t n = 1; n <= sample_count; ++n) {
    const bool on_c = conic_contains(c, a[n], a[n - 1]);
    if (!on_c) return false;
    const Rational tx = chebyshev_t2(a[n]), ty = chebyshev_t2(a[n - 1]);
    if (conic_contains(c3, tx, ty) != on_c) return false;
    if (conic_contains(c2, Rational(a[n].square()),
                       Rational(a[n - 1].square())) != on_c)
      return false;

    const Rational p = u[n], q = u[n - 1];
    const bool on_c2 = conic_contains(c2, p, q);
    if (!on_c2) return false;
    if (conic_contains(c3, 2 * p - 1, 2 * q - 1) != on_c2) return false;
  }
  return true;
}

// Exhaustive scan for positive solutions of (x+y-1)^2 = wxy with
// x, y <= bound. Returns every ordered pair, sorted. This is the oracle
// side of the Diophantine check, so it never consults the recurrences.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> solve_c2_bruteforce(
    std::uint64_t w, std::uint64_t bound, unsigned threads = 1) {
  if (w < 1 || bound < 1)
    throw std::invalid_argument("solve_c2_bruteforce: w and bound must be >= 1");
  if (bound > 2'000'000'000ULL || w > UINT64_MAX / bound / bound)
    throw std::invalid_argument("solve_c2_bruteforce: range would overflow 64 bits");

  using Pair = std::pair<std::uint64_t, std::uint64_t>;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, bound / 256);
  const std::uint64_t nchunks = (bound + chunk - 1) / chunk;
  std::vector<std::vector<Pair>> slots(nchunks);

  for_chunks(1, bound, chunk, threads,
             [&](std::size_t slot, std::uint64_t x_lo, std::uint64_t x_hi) {
               auto& found = slots[slot];
               for (std::uint64_t x = x_lo; x <= x_hi; ++x) {
                 // scan the half grid y >= x; lhs and rhs advance incrementally
                 std::uint64_t s = 2 * x - 1;        // x + y - 1 at y = x
                 std::uint64_t lhs = s * s;
                 const std::uint64_t step = w * x;   // d(rhs)/dy
                 std::uint64_t rhs = step * x;
                 for (std::uint64_t y = x; y <= bound; ++y) {
                   if (lhs == rhs) found.emplace_back(x, y);
                   lhs += 2 * s + 1;
                   s += 1;
                   rhs += step;
                 }
               }
             });

  std::vector<Pair> out;
  for (const auto& part : slots)
    for (const auto& [x, y] : part) {
      out.emplace_back(x, y);
      if (x != y) out.emplace_back(y, x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Consecutive-u pairs (u_n, u_{n-1}) with both coordinates in [1, bound],
// deduplicated. Cycle detection makes the periodic small-w sequences
// terminate; growing sequences stop once both coordinates pass the bound.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> consecutive_u_pairs(
    std::uint64_t w, std::uint64_t bound) {
  if (w < 1 || bound < 1)
    throw std::invalid_argument("consecutive_u_pairs: w and bound must be >= 1");
  std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::set<std::pair<Integer, Integer>> seen;
  Integer prev = 0, cur = 1;
  const Integer c = Integer(w) - 2;
  const Integer big = bound;
  while (seen.insert({prev, cur}).second) {
    if (prev >= 1 && prev <= big && cur >= 1 && cur <= big)
      pairs.emplace(static_cast<std::uint64_t>(cur),
                    static_cast<std::uint64_t>(prev));
    if (prev > big && cur > big) break;
    Integer next = c * cur - prev + 2;
    prev = cur;
    cur = next;
  }
  return {pairs.begin(), pairs.end()};
}

struct DiophantineCheck {
  bool complete = false;
  // canonical x >= y pairs present on only one side
  std::vector<std::pair<std::uint64_t, std::uint64_t>> brute_only;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> recurrence_only;
};

// Set equality, up to symmetry, of the brute-force solution set and the
// consecutive-u pairs.
inline DiophantineCheck check_c2_solutions(std::uint64_t w, std::uint64_t bound,
                                           unsigned threads = 1) {
  auto canonical = [](std::vector<std::pair<std::uint64_t, std::uint64_t>> v) {
    for (auto& [x, y] : v)
      if (x < y) std::swap(x, y);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto brute = canonical(solve_c2_bruteforce(w, bound, threads));
  const auto rec = canonical(consecutive_u_pairs(w, bound));
  DiophantineCheck out;
  std::set_difference(brute.begin(), brute.end(), rec.begin(), rec.end(),
                      std::back_inserter(out.brute_only));
  std::set_difference(rec.begin(), rec.end(), brute.begin(), brute.end(),
                      std::back_inserter(out.recurrence_only));
  out.complete = out.brute_only.empty() && out.recurrence_only.empty();
  return out;
}

}  // namespace biharmonic
