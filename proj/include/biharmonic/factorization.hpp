#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "biharmonic/numeric.hpp"

namespace biharmonic {

// Prime-power decomposition of n, primes strictly increasing.
// n = 1 has an empty factor list.
struct Factorization {
  Integer n;
  std::vector<std::pair<Integer, unsigned>> factors;
};

struct DivisorStats {
  Integer n;
  Integer sigma0, sigma1, sigma2;
  std::optional<std::vector<Integer>> divisors;
};

namespace detail {

inline Integer mulmod(const Integer& a, const Integer& b, const Integer& m) {
  return (a * b) % m;
}

// Strong probable-prime test to base a (n odd, n > 2, 1 < a < n - 1).
inline bool strong_probable_prime(const Integer& n, const Integer& a,
                                  const Integer& d, unsigned s) {
  Integer x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

// Miller-Rabin with the fixed base set {2,3,...,37}, deterministic for
// n < 3.3e24; above that the answer is probable-prime with error
// below 4^-12 per extra base. Factoring targets here stay far smaller.
inline bool is_prime(const Integer& n) {
  if (n < 1) throw std::invalid_argument("is_prime: argument must be >= 1");
  if (n < 4) return n == 2 || n == 3;
  if ((n & 1) == 0) return false;
  static const unsigned kBases[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                    23, 29, 31, 37, 41, 43, 47};
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
    if (!detail::strong_probable_prime(n, Integer(b), d, s)) return false;
  }
  return true;
}

namespace detail {

// Brent's variant of Pollard rho. Returns a nontrivial factor of odd
// composite n. Parameters come from a fixed retry schedule so runs are
// reproducible.
inline Integer rho_brent(const Integer& n) {
  for (unsigned attempt = 1;; ++attempt) {
    const Integer c = attempt;
    Integer y = 2 + attempt, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const unsigned batch = 128;
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        const Integer steps = std::min<Integer>(batch, r - k);
        for (Integer i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += steps;
      }
      r <<= 1;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
    // cycle degenerated for this c; retry with the next parameter
  }
}

inline void factor_rec(const Integer& n,
                       std::vector<Integer>& primes_out) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes_out.push_back(n);
    return;
  }
  Integer d = rho_brent(n);
  factor_rec(d, primes_out);
  factor_rec(n / d, primes_out);
}

}  // namespace detail

// Deterministic trial division up to 2^20, then Brent rho for whatever
// remains. Intended range is inputs up to ~10^18; larger values work but
// may be slow when they have two huge prime factors.
inline Factorization factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  Factorization f;
  f.n = n;
  Integer m = n;
  auto push = [&](Integer p) {  // by value: the tail call aliases p with m
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  };
  static constexpr std::uint64_t kTrialLimit = 1u << 20;
  if (m % 2 == 0) push(2);
  if (m % 3 == 0) push(3);
  for (std::uint64_t p = 5; p <= kTrialLimit && Integer(p) * p <= m; p += 6) {
    if (m % p == 0) push(Integer(p));
    if (m % (p + 2) == 0) push(Integer(p + 2));
  }
  if (m > 1) {
    if (Integer(kTrialLimit) * kTrialLimit > m || is_prime(m)) {
      // trial division already covered sqrt(m), or m is prime
      push(m);
    } else {
      std::vector<Integer> primes;
      detail::factor_rec(m, primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        unsigned e = 0;
        while (m % primes[i] == 0) {
          m /= primes[i];
          ++e;
        }
        f.factors.emplace_back(primes[i], e);
        i = j;
      }
    }
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

// All divisors in ascending order; count is the product of (e_i + 1).
inline std::vector<Integer> divisors(const Factorization& f) {
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = ds.size();
    Integer pe = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pe *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// sigma_x(n) = sum of x-th powers of the divisors, via the multiplicative
// closed form per prime power. Only x in {0, 1, 2} is supported.
inline Integer sigma(const Factorization& f, unsigned x) {
  if (x > 2) throw std::invalid_argument("sigma: exponent must be 0, 1 or 2");
  Integer result = 1;
  for (const auto& [p, e] : f.factors) {
    if (x == 0) {
      result *= e + 1;
    } else {
      const Integer px = x == 1 ? p : p * p;
      // 1 + px + px^2 + ... + px^e
      result *= (ipow(px, e + 1) - 1) / (px - 1);
    }
  }
  return result;
}

inline DivisorStats divisor_stats(const Integer& n, bool with_divisors = false) {
  Factorization f = factorize(n);
  DivisorStats s;
  s.n = n;
  s.sigma0 = sigma(f, 0);
  s.sigma1 = sigma(f, 1);
  s.sigma2 = sigma(f, 2);
  if (with_divisors) s.divisors = divisors(f);
  return s;
}

}  // namespace biharmonic
