#include "secrecy/rng.hpp"

#include <cmath>

namespace secrecy {
namespace detail {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;  // golden ratio
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;  // sqrt(3) - 1

inline void philox_round(std::array<std::uint32_t, 4>& c,
                         const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * c[0];
  const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * c[2];
  const auto hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
  const auto hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(ctr, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace detail

RngStream RngStream::substream(std::uint64_t tag) const {
  return RngStream{seed, detail::splitmix64(stream ^ detail::splitmix64(tag))};
}

std::uint64_t RngStream::bits64(std::uint64_t counter) const {
  const std::array<std::uint32_t, 4> ctr = {
      std::uint32_t(counter), std::uint32_t(counter >> 32),
      std::uint32_t(stream), std::uint32_t(stream >> 32)};
  const std::array<std::uint32_t, 2> key = {std::uint32_t(seed),
                                            std::uint32_t(seed >> 32)};
  const auto out = detail::philox4x32(ctr, key);
  return (std::uint64_t(out[0]) << 32) | out[1];
}

double RngStream::uniform(std::uint64_t counter) const {
  return double(bits64(counter) >> 11) * 0x1.0p-53;
}

double RngStream::exponential(double mean, std::uint64_t counter) const {
  // -log(1-U) keeps the sample finite: U < 1 exactly.
  return -mean * std::log1p(-uniform(counter));
}

}  // namespace secrecy
