#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "biharmonic/parallel.hpp"

namespace biharmonic {

// Largest hi for which sigma2(n) <= zeta(2) * hi^2 still fits in 64 bits.
inline constexpr std::uint64_t kSigmaSieveMaxHi = 3'000'000'000ULL;

struct SigmaSieveOptions {
  std::uint64_t segment_size = 1u << 16;
  unsigned threads = 1;
};

// Divisor-power sums over an inclusive range. Entry i holds the value for
// n = lo + i. Values are exact in uint64 for every n <= kSigmaSieveMaxHi.
struct SigmaBlock {
  std::uint64_t lo = 1, hi = 0;
  std::vector<std::uint64_t> sigma0, sigma1, sigma2;

  std::uint64_t s0(std::uint64_t n) const { return sigma0[n - lo]; }
  std::uint64_t s1(std::uint64_t n) const { return sigma1[n - lo]; }
  std::uint64_t s2(std::uint64_t n) const { return sigma2[n - lo]; }
  std::uint64_t size() const { return hi - lo + 1; }
};

// Segmented sieve of sigma0/sigma1/sigma2 over [lo, hi]: every divisor d
// adds (1, d, d^2) to each of its multiples inside the current segment.
// Memory is O(hi - lo); segments are independent, so they can be handed to
// worker threads and the output is identical for any thread count.
inline SigmaBlock sigma_sieve(std::uint64_t lo, std::uint64_t hi,
                              const SigmaSieveOptions& opts = {}) {
  if (lo < 1 || lo > hi)
    throw std::invalid_argument("sigma_sieve: need 1 <= lo <= hi");
  if (hi > kSigmaSieveMaxHi)
    throw std::invalid_argument("sigma_sieve: hi exceeds the 64-bit-safe bound");

  SigmaBlock block;
  block.lo = lo;
  block.hi = hi;
  const std::uint64_t len = hi - lo + 1;
  block.sigma0.assign(len, 0);
  block.sigma1.assign(len, 0);
  block.sigma2.assign(len, 0);

  const std::uint64_t seg = opts.segment_size == 0 ? len : opts.segment_size;
  for_chunks(lo, hi, seg, opts.threads,
             [&](std::size_t, std::uint64_t a, std::uint64_t b) {
               for (std::uint64_t d = 1; d <= b; ++d) {
                 std::uint64_t m = ((a + d - 1) / d) * d;
                 if (m < d) m = d;
                 const std::uint64_t dd = d * d;
                 for (; m <= b; m += d) {
                   const std::uint64_t i = m - lo;
                   block.sigma0[i] += 1;
                   block.sigma1[i] += d;
                   block.sigma2[i] += dd;
                 }
               }
             });
  return block;
}

}  // namespace biharmonic
