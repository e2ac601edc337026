#pragma once

#include <cstdint>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/estimate.hpp"

namespace secrecy {

// Where the key stream backing the one-time-pad share comes from: the
// no-feedback secrecy rate alone, or the better of it and the 1-bit MRC rate.
enum class KeyMode { no_feedback, one_bit };

const char* to_string(KeyMode m);

// Success probability estimate for one delay-limited operating point.
struct OutageEstimate {
  double p_success = 0.0;
  double ci_halfwidth = 0.0;  // Wald 95%, for reporting
  std::uint64_t n = 0;

  // Wilson score lower edge: never collapses to 1 at p_hat = 1, so a finite
  // sample can never certify a zero-outage constraint.
  double wilson_lower() const;
};

// P[ {(1-gamma)*main >= r_tilde}  and  {[r_tilde - (1-gamma)*eaves]^+ >=
// r_s - r_key} ]: the block carries its message and the wiretap-coded share
// stays secret given the key chunk spent on it.
OutageEstimate success_probability(const ChannelModel& model,
                                   const PowerConfig& power, double gamma,
                                   double r_tilde, double r_s, double r_key,
                                   std::uint64_t n, const RngStream& rng);

// Key replenishment rate gamma * C_key, where C_key is the no-feedback lower
// bound or (one_bit) the max of it and the MRC renewal rate.
double key_rate(const ChannelModel& model, const PowerConfig& power,
                double gamma, KeyMode mode, std::uint64_t n,
                const RngStream& rng);

struct DelayConfig {
  double alpha = 0.1;                // outage budget
  std::vector<double> gamma_grid;    // empty = 0, 0.05, ..., 1
  int rate_grid_points = 64;
  KeyMode key_mode = KeyMode::no_feedback;
};

struct DelayOperatingPoint {
  double gamma = 0.0;
  double r_tilde = 0.0;
  double r_s = 0.0;
  double r_key = 0.0;
  OutageEstimate p_success;
  bool feasible = false;
  // value.value = r_s; ci_halfwidth = final rate-grid resolution / 2.
  BoundEstimate value;
};

// Maximizes r_s over (gamma, r_tilde, r_s) grids subject to
// wilson_lower(success) >= 1 - alpha and r_key <= r_s <= r_tilde, with one
// refinement pass around the best coarse cell.  All cells share one set of
// draws (common random numbers), so the result is monotone in alpha by
// construction.  With no feasible point, returns all zeros at gamma = 0.
DelayOperatingPoint maximize_outage_rate(const ChannelModel& model,
                                         const PowerConfig& power,
                                         const DelayConfig& config,
                                         std::uint64_t n,
                                         const RngStream& rng);

}  // namespace secrecy
