#include <array>
#include <cmath>
#include <cstdint>
#include <set>

#include "doctest.h"
#include "secrecy/estimate.hpp"
#include "secrecy/rng.hpp"

using namespace secrecy;

TEST_SUITE("rng") {

// Known-answer vectors for the 10-round counter cipher, from the reference
// implementation's published test vectors.
TEST_CASE("counter cipher matches reference vectors") {
  const std::array<std::uint32_t, 4> zero =
      detail::philox4x32({0u, 0u, 0u, 0u}, {0u, 0u});
  CHECK(zero == std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du,
                                             0xbc57ac4cu, 0x9b00dbd8u});

  const std::array<std::uint32_t, 4> ones = detail::philox4x32(
      {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
      {0xffffffffu, 0xffffffffu});
  CHECK(ones == std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu,
                                             0xa20bc7c6u, 0x6d5451fdu});

  const std::array<std::uint32_t, 4> pi = detail::philox4x32(
      {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
      {0xa4093822u, 0x299f31d0u});
  CHECK(pi == std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu,
                                           0x5001e420u, 0x24126ea1u});
}

TEST_CASE("draws are pure functions of (seed, stream, counter)") {
  const RngStream a{42, 7};
  const RngStream b{42, 7};
  for (std::uint64_t c : {0ull, 1ull, 99ull, (1ull << 40) + 5}) {
    CHECK(a.bits64(c) == b.bits64(c));
    CHECK(a.uniform(c) == b.uniform(c));
  }
  // Random access: reading counters out of order changes nothing.
  const double later = a.uniform(1000);
  (void)a.uniform(0);
  (void)a.uniform(500);
  CHECK(a.uniform(1000) == later);
}

TEST_CASE("distinct seeds, streams and counters decorrelate") {
  const RngStream base{1, 0};
  CHECK(base.bits64(0) != base.bits64(1));
  CHECK(RngStream{1, 0}.bits64(0) != RngStream{2, 0}.bits64(0));
  CHECK(RngStream{1, 0}.bits64(0) != RngStream{1, 1}.bits64(0));
}

TEST_CASE("substream derivation is deterministic and tag-sensitive") {
  const RngStream root{123, 0};
  const RngStream s1 = root.substream(5);
  const RngStream s2 = root.substream(5);
  CHECK(s1.stream == s2.stream);
  CHECK(s1.seed == root.seed);
  CHECK(root.substream(5).stream != root.substream(6).stream);
  // Nested derivations with different paths should not collide.
  std::set<std::uint64_t> streams;
  for (std::uint64_t t = 0; t < 100; ++t) {
    streams.insert(root.substream(t).stream);
    streams.insert(root.substream(t).substream(t).stream);
  }
  CHECK(streams.size() == 200);
}

TEST_CASE("uniform draws live in [0,1) and fill the unit interval") {
  const RngStream rng{2024, 9};
  MeanAccum acc;
  double lo = 1.0, hi = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = rng.uniform(i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    acc.add(u);
  }
  CHECK(lo < 1e-3);
  CHECK(hi > 1.0 - 1e-3);
  // Mean of U(0,1) is 1/2 with sd 1/sqrt(12n) ~ 9e-4.
  CHECK(std::abs(acc.mean() - 0.5) < 4e-3);
}

TEST_CASE("exponential draws have the requested mean and are finite") {
  const RngStream rng{7, 3};
  MeanAccum acc;
  for (std::uint64_t i = 0; i < 200000; ++i) {
    const double x = rng.exponential(2.0, i);
    REQUIRE(std::isfinite(x));
    REQUIRE(x >= 0.0);
    acc.add(x);
  }
  // sd of the sample mean = 2/sqrt(n) ~ 0.0045.
  CHECK(std::abs(acc.mean() - 2.0) < 0.02);
}

}  // TEST_SUITE
