#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "secrecy/dist.hpp"

namespace secrecy {

// Draw counters: sample i consumes counters {3i, 3i+1, 3i+2} of its stream
// for (hm, he, hz).  Random access by index — no sequential RNG state — is
// what makes every consumer reproducible across chunkings and thread counts.
GainSample draw_gain_sample(const ChannelModel& model, const RngStream& rng,
                            std::uint64_t index);

std::vector<GainSample> sample_gains(const ChannelModel& model,
                                     std::uint64_t n, const RngStream& rng);

// Per-block information rates in bits/channel use (all logs are base 2).
// The jammer degrades the main channel through its own fading gain:
//   main:  log2(1 + pt*hm / (1 + pj*hz))
//   eaves: log2(1 + pt*he)
double main_info(const GainSample& g, const PowerConfig& power);
double eaves_info(const GainSample& g, const PowerConfig& power);

// Main-channel gain as seen through constant jamming: hm / (1 + pj*hz).
double effective_main_gain(const GainSample& g, double pj);

// Order-statistic quantile of an ascending-sorted sample: entry at index
// ceil(u*n), clamped to [1, n] (1-based).  For even n and u = 0.5 this is the
// lower of the two middle values.
double empirical_quantile(std::span<const double> sorted, double u);

}  // namespace secrecy
