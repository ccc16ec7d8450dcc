#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "biharmonic/factorization.hpp"
#include "biharmonic/numeric.hpp"
#include "biharmonic/sigma_sieve.hpp"

namespace biharmonic {

// The five divisor means of n. A*H = n exactly and B = (H+C)/2 by
// construction; the flags are exact integrality tests.
struct DivisorMeansRecord {
  Integer n;
  Rational arithmetic;        // A(n) = sigma1/sigma0
  Rational harmonic;          // H(n) = n*sigma0/sigma1
  Rational contraharmonic;    // C(n) = sigma2/sigma1
  Rational biharmonic;        // B(n) = (n*sigma0 + sigma2) / (2*sigma1)
  Integer geometric_squared;  // G(n)^2 = n; G itself is rational iff n is a square
  bool is_arithmetic = false;
  bool is_harmonic = false;
  bool is_contraharmonic = false;
  bool is_biharmonic = false;
  std::optional<Integer> harmonic_value;  // set when is_harmonic
};

inline DivisorMeansRecord divisor_means_from_sigma(const Integer& n,
                                                   const Integer& s0,
                                                   const Integer& s1,
                                                   const Integer& s2) {
  DivisorMeansRecord r;
  r.n = n;
  r.arithmetic = Rational(s1, s0);
  r.harmonic = Rational(n * s0, s1);
  r.contraharmonic = Rational(s2, s1);
  r.biharmonic = Rational(n * s0 + s2, 2 * s1);
  r.geometric_squared = n;
  r.is_arithmetic = is_integer(r.arithmetic);
  r.is_harmonic = is_integer(r.harmonic);
  r.is_contraharmonic = is_integer(r.contraharmonic);
  r.is_biharmonic = is_integer(r.biharmonic);
  if (r.is_harmonic) r.harmonic_value = as_integer(r.harmonic);
  return r;
}

inline DivisorMeansRecord divisor_means(const Integer& n) {
  if (n < 1) throw std::invalid_argument("divisor_means: argument must be >= 1");
  Factorization f = factorize(n);
  return divisor_means_from_sigma(n, sigma(f, 0), sigma(f, 1), sigma(f, 2));
}

enum class SequenceKind { arithmetic, harmonic, contraharmonic, biharmonic };

inline const char* to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::arithmetic: return "arithmetic";
    case SequenceKind::harmonic: return "harmonic";
    case SequenceKind::contraharmonic: return "contraharmonic";
    case SequenceKind::biharmonic: return "biharmonic";
  }
  return "?";
}

inline SequenceKind sequence_kind_from_string(const std::string& s) {
  if (s == "arithmetic") return SequenceKind::arithmetic;
  if (s == "harmonic") return SequenceKind::harmonic;
  if (s == "contraharmonic") return SequenceKind::contraharmonic;
  if (s == "biharmonic") return SequenceKind::biharmonic;
  throw std::invalid_argument("unknown sequence kind: " + s);
}

struct EnumerateOptions {
  std::uint64_t sieve_threshold = 1000;  // below: per-n factorization
  std::uint64_t segment_size = 1u << 16;
  unsigned threads = 1;
};

struct Enumeration {
  SequenceKind kind;
  std::vector<std::uint64_t> terms;
  // parallel to terms when kind == harmonic: the integer H(n)
  std::vector<std::uint64_t> harmonic_values;
};

// All n <= limit whose mean of the given kind is an integer, ascending.
inline Enumeration enumerate_numbers(SequenceKind kind, std::uint64_t limit,
                                     const EnumerateOptions& opts = {}) {
  if (limit < 1) throw std::invalid_argument("enumerate_numbers: limit must be >= 1");
  Enumeration out;
  out.kind = kind;

  auto admit = [&](std::uint64_t n, std::uint64_t s0, std::uint64_t s1,
                   std::uint64_t s2) {
    switch (kind) {
      case SequenceKind::arithmetic:
        if (s1 % s0 == 0) out.terms.push_back(n);
        break;
      case SequenceKind::harmonic:
        if ((n * s0) % s1 == 0) {
          out.terms.push_back(n);
          out.harmonic_values.push_back(n * s0 / s1);
        }
        break;
      case SequenceKind::contraharmonic:
        if (s2 % s1 == 0) out.terms.push_back(n);
        break;
      case SequenceKind::biharmonic:
        if ((n * s0 + s2) % (2 * s1) == 0) out.terms.push_back(n);
        break;
    }
  };

  if (limit <= opts.sieve_threshold) {
    for (std::uint64_t n = 1; n <= limit; ++n) {
      Factorization f = factorize(n);
      admit(n, static_cast<std::uint64_t>(sigma(f, 0)),
            static_cast<std::uint64_t>(sigma(f, 1)),
            static_cast<std::uint64_t>(sigma(f, 2)));
    }
  } else {
    SigmaBlock block = sigma_sieve(
        1, limit, {.segment_size = opts.segment_size, .threads = opts.threads});
    for (std::uint64_t n = 1; n <= limit; ++n)
      admit(n, block.s0(n), block.s1(n), block.s2(n));
  }
  return out;
}

// B(n) == (n+1)/2, which holds exactly for odd primes. The even case is
// rejected outright: B(2) = 3/2 satisfies the equation without being an
// integer, so the characterization only makes sense on odd input.
inline bool prime_characterization(const Integer& n) {
  if (n <= 1)
    throw std::invalid_argument("prime_characterization: argument must be > 1");
  if ((n & 1) == 0)
    throw std::invalid_argument("prime_characterization: argument must be odd");
  Factorization f = factorize(n);
  return (n + 1) * sigma(f, 1) == sigma(f, 2) + n * sigma(f, 0);
}

struct SumIdentity {
  Integer lhs;  // (n+1)*sigma1 - (sigma2 + n*sigma0)
  Integer rhs;  // paired-divisor sum, see below
  bool equal = false;
};

// Both sides of the paired-divisor identity behind the prime
// characterization. Divisors pair as (d, n/d) with d < sqrt(n); for square
// n the middle divisor k = sqrt(n) contributes k*(k-1)^2. Each pair
// contributes (d + n/d)(d - 1)(n/d - 1), so the sum is zero only when every
// pair contains a 1, i.e. when n is 1 or prime.
inline SumIdentity sum_identity_check(const Integer& n) {
  if (n < 2) throw std::invalid_argument("sum_identity_check: argument must be >= 2");
  Factorization f = factorize(n);
  SumIdentity s;
  s.lhs = (n + 1) * sigma(f, 1) - (sigma(f, 2) + n * sigma(f, 0));
  Integer rhs = 0;
  for (const Integer& d : divisors(f)) {
    if (d * d >= n) break;
    const Integer cod = n / d;
    rhs += (d + cod) * (d - 1) * (cod - 1);
  }
  if (is_perfect_square(n)) {
    const Integer k = isqrt(n);
    rhs += k * (k - 1) * (k - 1);
  }
  s.rhs = rhs;
  s.equal = s.lhs == s.rhs;
  return s;
}

}  // namespace biharmonic
