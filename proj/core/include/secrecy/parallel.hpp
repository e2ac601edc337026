#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace secrecy::parallel {

// Fixed work-unit size for every chunked Monte Carlo loop.  Partial results
// are produced per chunk and combined in chunk order, so changing the worker
// count never changes summation order — outputs stay bit-identical.
inline constexpr std::uint64_t kChunkSize = 1 << 16;

namespace detail {
inline std::atomic<unsigned>& thread_cap() {
  static std::atomic<unsigned> cap{0};
  return cap;
}
}  // namespace detail

inline void set_max_threads(unsigned n) { detail::thread_cap() = n; }

inline unsigned max_threads() {
  const unsigned cap = detail::thread_cap().load();
  if (cap != 0) return cap;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? hw : 1;
}

// Applies fn(chunk_index, begin, end) to each chunk of [0, n) and returns the
// per-chunk results indexed by chunk (deterministic regardless of scheduling).
template <class T, class Fn>
std::vector<T> map_chunks(std::uint64_t n, Fn&& fn,
                          std::uint64_t chunk_size = kChunkSize) {
  const std::uint64_t n_chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<T> results(n_chunks);
  if (n_chunks == 0) return results;

  const unsigned workers =
      unsigned(std::min<std::uint64_t>(max_threads(), n_chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c)
      results[c] = fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) return;
      results[c] = fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace secrecy::parallel
