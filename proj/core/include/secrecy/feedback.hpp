#pragma once

#include <cstdint>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/estimate.hpp"

namespace secrecy {

// Retransmission schemes driven by one ACK/NAK bit per block.
//  - mrc:       receiver combines all retransmissions; the accumulated SNR
//               sum (inside one log) must reach r.
//  - plain_arq: each block decodes on its own; success is a per-block event.
//  - main_csi:  per-block stopping like plain_arq, but the transmitter knows
//               hm and stays silent on bad blocks, so only the final (ACKed)
//               block can leak.
enum class FeedbackScheme { mrc, plain_arq, main_csi };

const char* to_string(FeedbackScheme s);

// One epoch between renewals: t blocks until the threshold was crossed,
// the adversary's accumulated gain over the epoch under the conservative
// always-eavesdrop account, and the secrecy reward [r - log2(1+pt*sum)]^+.
// Truncated epochs (threshold not crossed within t_max) carry reward 0.
struct RenewalSample {
  std::uint64_t t = 0;
  double sum_he = 0.0;
  double reward = 0.0;
  bool truncated = false;
};

std::vector<RenewalSample> simulate_renewals(const ChannelModel& model,
                                             const PowerConfig& power,
                                             double r, FeedbackScheme scheme,
                                             std::uint64_t n_renewals,
                                             std::uint64_t t_max,
                                             const RngStream& rng);

struct RateEstimate {
  BoundEstimate estimate;
  double mean_t = 0.0;
  double truncation_fraction = 0.0;
};

// Renewal-reward rate at threshold r: mean(reward)/mean(t), with a
// delta-method CI for the ratio.
RateEstimate rate_at(const ChannelModel& model, const PowerConfig& power,
                     double r, FeedbackScheme scheme, std::uint64_t n_renewals,
                     std::uint64_t t_max, const RngStream& rng);

struct RateSearch {
  double r_max = 0.0;    // 0 = derive from the 0.999 info quantile
  int grid_points = 64;  // coarse scan
  int refine_iters = 20; // golden-section steps around the best cell
};

struct RateMaximum {
  double r_star = 0.0;
  RateEstimate best;
};

// Maximizes rate_at over r with a coarse grid plus golden-section
// refinement.  Every evaluation reuses the same stream (common random
// numbers), so the scan is a deterministic function of r.  The returned
// value is the max over all scanned points.
RateMaximum maximize_rate(const ChannelModel& model, const PowerConfig& power,
                          FeedbackScheme scheme, const RateSearch& search,
                          std::uint64_t n_renewals, std::uint64_t t_max,
                          const RngStream& rng);

// Converse with one bit of feedback: E[log2(1 + pt*hm/(1 + max(pj*hz,
// pt*he)))] — the adversary picks the better of jamming and eavesdropping
// blockwise.
BoundEstimate upper_bound_1bit(const ChannelModel& model,
                               const PowerConfig& power, std::uint64_t n,
                               const RngStream& rng);

// Best achievable rate with 1-bit feedback: max of the no-feedback lower
// bound and the MRC renewal rate.
BoundEstimate one_bit_lower_bound(const ChannelModel& model,
                                  const PowerConfig& power,
                                  const RateSearch& search,
                                  std::uint64_t n_renewals, std::uint64_t n,
                                  const RngStream& rng);

}  // namespace secrecy
