#pragma once

#include <array>
#include <cstdint>

namespace secrecy {

namespace detail {

// Philox4x32-10 counter-based block cipher (Salmon et al., SC'11).  Each call
// maps a 128-bit counter plus a 64-bit key to 128 pseudo-random bits, so any
// draw can be computed in isolation: no sequential state, which is what makes
// Monte Carlo results independent of chunking and thread count.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace detail

// A named random stream.  (seed, stream) select a key-separated sequence;
// individual draws are addressed by a 64-bit counter.  Copying is free and
// draws are const, so one stream can be shared by any number of workers.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  // Derives a statistically independent child stream.  Distinct tags (or
  // distinct parents) give distinct streams with overwhelming probability.
  RngStream substream(std::uint64_t tag) const;

  std::uint64_t bits64(std::uint64_t counter) const;

  // Uniform on [0,1) with 53 random mantissa bits.
  double uniform(std::uint64_t counter) const;

  // Exponential with the given mean (inverse CDF of the uniform above).
  double exponential(double mean, std::uint64_t counter) const;
};

}  // namespace secrecy
