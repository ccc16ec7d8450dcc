#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace biharmonic {

inline unsigned default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Splits the inclusive range [lo, hi] into contiguous chunks of at most
// chunk_size values and runs worker(chunk_index, chunk_lo, chunk_hi) over
// them. Chunk indices are dense starting at 0, so callers that store one
// result slot per chunk get the same merged output no matter how many
// threads actually ran.
template <class Worker>
void for_chunks(std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk_size,
                unsigned threads, Worker&& worker) {
  if (lo > hi) throw std::invalid_argument("for_chunks: empty range");
  if (chunk_size == 0) throw std::invalid_argument("for_chunks: chunk_size == 0");
  const std::uint64_t count = hi - lo + 1;
  const std::uint64_t nchunks = (count + chunk_size - 1) / chunk_size;

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t a = lo + c * chunk_size;
    const std::uint64_t b = (c + 1 == nchunks) ? hi : a + chunk_size - 1;
    worker(static_cast<std::size_t>(c), a, b);
  };

  if (threads <= 1 || nchunks <= 1) {
    for (std::uint64_t c = 0; c < nchunks; ++c) run_chunk(c);
    return;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto pump = [&] {
    for (;;) {
      std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks || failed.load()) return;
      try {
        run_chunk(c);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  const unsigned nworkers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, nchunks));
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (unsigned i = 0; i < nworkers; ++i) pool.emplace_back(pump);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace biharmonic
