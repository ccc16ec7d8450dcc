#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "biharmonic/divisor_means.hpp"
#include "biharmonic/factorization.hpp"
#include "biharmonic/numeric.hpp"
#include "biharmonic/parallel.hpp"
#include "biharmonic/recurrences.hpp"

namespace biharmonic {

// The four pair functions whose integrality is mutually equivalent for odd
// a, b:
//   B(a,b) = ((a+b)^2 + (ab+1)^2) / (2(a+1)(b+1))
//   F(a,b) = (ab+1)^2 / ((a+1)(b+1))
//   P(a,b) = (a+b)(ab+1) / ((a+1)(b+1))
//   Q(a,b) = (a+b)^2 / ((a+1)(b+1))
// For a semiprime n = pq, B(p,q) coincides with the divisor mean B(n);
// Q(a,b) is the conic parameter w.
struct PairInvariants {
  Rational b, f, p, q;
};

inline PairInvariants pair_invariants(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("pair_invariants: arguments must be >= 1");
  const Integer sum2 = (a + b) * (a + b);
  const Integer prod1 = a * b + 1;
  const Integer den = (a + 1) * (b + 1);
  PairInvariants r;
  r.b = Rational(sum2 + prod1 * prod1, 2 * den);
  r.f = Rational(prod1 * prod1, den);
  r.p = Rational((a + b) * prod1, den);
  r.q = Rational(sum2, den);
  return r;
}

// For odd a, b: the four integrality statements must agree (all or none),
// and the three linking identities
//   B + P = (a+1)(b+1)/2,   P + Q = a + b,   F + P = ab + 1
// must hold exactly.
inline bool equivalence_check(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1 || (a & 1) == 0 || (b & 1) == 0)
    throw std::invalid_argument("equivalence_check: arguments must be odd and positive");
  const PairInvariants inv = pair_invariants(a, b);
  const bool flags[4] = {is_integer(inv.b), is_integer(inv.f),
                         is_integer(inv.p), is_integer(inv.q)};
  for (int i = 1; i < 4; ++i)
    if (flags[i] != flags[0]) return false;
  if (inv.b + inv.p != Rational((a + 1) * (b + 1), 2)) return false;
  if (inv.p + inv.q != a + b) return false;
  if (inv.f + inv.p != a * b + 1) return false;
  return true;
}

// A crystal n = a*b, odd, with a >= b > 1 and B(a,b) integral. The
// recurrence index is present on generator output: a = theta(a_index),
// b = theta(a_{index-1}) over sqrt(w).
struct CrystalRecord {
  Integer n;
  Integer a, b;
  Integer w;  // = Q(a,b)
  std::optional<std::uint64_t> index;
};

inline bool operator<(const CrystalRecord& lhs, const CrystalRecord& rhs) {
  if (lhs.n != rhs.n) return lhs.n < rhs.n;
  return lhs.a < rhs.a;
}

// Brute force over the divisor pairs of N: every unordered (a, b) with
// a*b = N, a >= b > 1 and B(a,b) integral.
inline std::vector<CrystalRecord> crystal_decompositions(const Integer& N) {
  if (N < 1) throw std::invalid_argument("crystal_decompositions: N must be >= 1");
  if ((N & 1) == 0)
    throw std::invalid_argument("crystal_decompositions: N must be odd");
  std::vector<CrystalRecord> out;
  for (const Integer& d : divisors(factorize(N))) {
    if (d == 1) continue;
    if (d * d > N) break;
    const Integer a = N / d, b = d;
    if (a == 1) continue;
    const PairInvariants inv = pair_invariants(a, b);
    if (is_integer(inv.b))
      out.push_back({N, a, b, as_integer(inv.q), std::nullopt});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Generator from the recurrence side: N = theta(a_n) * theta(a_{n-1}) for
// n >= 3, kept when both factors exceed 1. Periodic small-w orbits revisit
// the same N; records are deduplicated by N keeping the smallest index.
inline std::vector<CrystalRecord> generate_crystals(std::uint64_t w,
                                                    std::uint64_t n_limit) {
  if (w < 1) throw std::invalid_argument("generate_crystals: w must be >= 1");
  std::map<Integer, CrystalRecord> by_n;
  const auto u = u_sequence(w, static_cast<std::size_t>(n_limit));
  for (std::uint64_t n = 3; n <= n_limit; ++n) {
    // theta(a_n) = 2*u_n - 1
    Integer a = 2 * u[static_cast<std::size_t>(n)] - 1;
    Integer b = 2 * u[static_cast<std::size_t>(n - 1)] - 1;
    if (a <= 1 || b <= 1) continue;
    if (a < b) std::swap(a, b);
    const Integer N = a * b;
    auto it = by_n.find(N);
    if (it == by_n.end())
      by_n.emplace(N, CrystalRecord{N, a, b, Integer(w), n});
  }
  std::vector<CrystalRecord> out;
  out.reserve(by_n.size());
  for (auto& [key, rec] : by_n) out.push_back(rec);
  return out;
}

namespace detail {

// Smallest product the generator can emit for a given w: the n = 3 pair
// theta(a_3) = 2(w-1)^2 - 1, theta(a_2) = 2w - 1. Strictly increasing in
// w, which is what terminates the w-scan.
inline Integer min_crystal_for_w(std::uint64_t w) {
  const Integer t3 = 2 * Integer(w - 1) * Integer(w - 1) - 1;
  const Integer t2 = 2 * Integer(w) - 1;
  return t3 * t2;
}

}  // namespace detail

// All crystals for one w with N <= limit. Periodic orbits (w <= 3) close
// within 8 steps; for growing orbits the recurrence is followed until the
// product of the two trailing factors already exceeds the limit.
inline std::vector<CrystalRecord> crystals_up_to(std::uint64_t w,
                                                 std::uint64_t limit) {
  if (w < 1 || limit < 1)
    throw std::invalid_argument("crystals_up_to: w and limit must be >= 1");
  std::uint64_t n_limit = 8;
  if (w >= 4) {
    Integer prev = 0, cur = 1;
    const Integer c = Integer(w) - 2;
    std::uint64_t n = 1;
    while ((2 * prev - 1) * (2 * cur - 1) <= limit || prev <= 1) {
      const Integer next = c * cur - prev + 2;
      prev = cur;
      cur = next;
      ++n;
    }
    n_limit = n;
  }
  std::vector<CrystalRecord> out;
  for (auto& rec : generate_crystals(w, n_limit))
    if (rec.n <= limit) out.push_back(std::move(rec));
  return out;
}

// Union of crystals_up_to over all w, sorted ascending. The scan over w
// stops at the first w >= 4 whose smallest admissible product exceeds the
// limit; w = 1 and 2 never emit (a factor sticks at 1) and w = 3 only
// yields 35.
inline std::vector<CrystalRecord> generate_all_crystals(std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("generate_all_crystals: limit must be >= 1");
  std::vector<CrystalRecord> all;
  Integer previous_min = 0;
  for (std::uint64_t w = 1;; ++w) {
    if (w >= 4) {
      const Integer min_n = detail::min_crystal_for_w(w);
      if (min_n <= previous_min)
        throw std::logic_error("generate_all_crystals: w-scan lost monotonicity");
      previous_min = min_n;
      if (min_n > limit) break;
    }
    for (auto& rec : crystals_up_to(w, limit)) all.push_back(std::move(rec));
  }
  std::sort(all.begin(), all.end());
  return all;
}

struct ConjectureFinding {
  std::uint64_t n;
  std::vector<CrystalRecord> decompositions;
};

struct ConjectureScanResult {
  std::uint64_t limit = 0;
  std::uint64_t odd_scanned = 0;
  std::uint64_t crystals_found = 0;
  // every odd N <= limit admitting two or more distinct decompositions
  std::vector<ConjectureFinding> findings;
};

// Scans every odd N <= limit for multiple crystal decompositions. The
// pair grid (b odd, 3 <= b <= a, a*b <= limit) covers exactly the factor
// pairs the per-N brute force would test, without factoring anything.
// A nonempty findings list is a counterexample report, not a failure.
inline ConjectureScanResult conjecture_scan(std::uint64_t limit,
                                            unsigned threads = 1) {
  if (limit < 1) throw std::invalid_argument("conjecture_scan: limit must be >= 1");
  if (limit > 2'000'000'000ULL)
    throw std::invalid_argument("conjecture_scan: limit exceeds the 64-bit-safe bound");
  ConjectureScanResult result;
  result.limit = limit;
  result.odd_scanned = (limit + 1) / 2;

  const std::uint64_t b_max = static_cast<std::uint64_t>(isqrt(Integer(limit)));
  using Triple = std::array<std::uint64_t, 3>;  // N, a, b
  std::vector<std::vector<Triple>> slots;
  if (b_max >= 3) {
    const std::uint64_t chunk = 64;
    slots.resize((b_max - 3) / chunk + 1);
    for_chunks(3, b_max, chunk, threads,
               [&](std::size_t slot, std::uint64_t b_lo, std::uint64_t b_hi) {
                 auto& found = slots[slot];
                 for (std::uint64_t b = b_lo | 1; b <= b_hi; b += 2) {
                   for (std::uint64_t a = b; a * b <= limit; a += 2) {
                     const std::uint64_t sum = a + b, prod1 = a * b + 1;
                     const std::uint64_t num = sum * sum + prod1 * prod1;
                     const std::uint64_t den = 2 * (a + 1) * (b + 1);
                     if (num % den == 0) found.push_back({a * b, a, b});
                   }
                 }
               });
  }

  std::map<std::uint64_t, std::vector<CrystalRecord>> by_n;
  for (const auto& part : slots)
    for (const auto& [N, a, b] : part) {
      const std::uint64_t q = (a + b) * (a + b) / ((a + 1) * (b + 1));
      by_n[N].push_back({Integer(N), Integer(a), Integer(b), Integer(q),
                         std::nullopt});
    }
  result.crystals_found = by_n.size();
  for (auto& [N, recs] : by_n)
    if (recs.size() >= 2) {
      std::sort(recs.begin(), recs.end());
      result.findings.push_back({N, std::move(recs)});
    }
  return result;
}

}  // namespace biharmonic
