#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/estimate.hpp"

namespace secrecy {

// Achievable secrecy rate without feedback:
//   [ E( log2(1 + pt*hm/(1+pj*hz)) - log2(1 + pt*he) ) ]^+
// The mean is clamped to zero *after* averaging; the CI describes the
// unclamped mean.
BoundEstimate lower_bound(const ChannelModel& model, const PowerConfig& power,
                          std::uint64_t n, const RngStream& rng);

// Converse: min over couplings that preserve the (hm,hz) joint law and the
// he marginal of E[(A - B)^+], evaluated via the sorted-quantile coupling.
// Here the positive part sits inside the expectation.
BoundEstimate upper_bound(const ChannelModel& model, const PowerConfig& power,
                          std::uint64_t n, const RngStream& rng);

// Receiver knows only E[hz], not the realization: the jamming term enters
// through its mean.  Coincides with lower_bound when hz is a point mass.
BoundEstimate lower_bound_no_jammer_csi(const ChannelModel& model,
                                        const PowerConfig& power,
                                        std::uint64_t n, const RngStream& rng);

// Tests whether the eavesdropper gain stochastically dominates the effective
// main gain hm/(1+pj*hz); if it does, the secrecy capacity is zero.
// max_cdf_gap = sup_a ( F_he(a) - F_hm*(a) ) over the merged empirical grid;
// dominance is declared when the gap stays within epsilon_stat, twice the
// 95% Dvoretzky-Kiefer-Wolfowitz deviation bound at this sample size.
struct DominanceResult {
  bool dominated = false;
  double max_cdf_gap = 0.0;
  double epsilon_stat = 0.0;
};

DominanceResult dominance_check(const ChannelModel& model,
                                const PowerConfig& power, std::uint64_t n,
                                const RngStream& rng);

// Power law coeff * P^exponent used by the scaling sweep.
struct ScalingSpec {
  double coeff = 1.0;
  double exponent = 1.0;

  double operator()(double p) const;
};

struct SweepPoint {
  double p = 0.0;
  double pt = 0.0;
  double pj = 0.0;
  BoundEstimate upper;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  // Set when pt grows strictly faster than pj, i.e. pt = O(pj) is violated
  // and the vanishing-capacity regime does not apply.  The sweep still runs.
  bool scaling_warning = false;
};

// Evaluates upper_bound along pt = pt_scale(P), pj = pj_scale(P) for each P
// in the ascending grid, reusing one random stream (common random numbers)
// so the trend is noise-free.
SweepResult power_scaling_sweep(const ChannelModel& model,
                                const ScalingSpec& pt_scale,
                                const ScalingSpec& pj_scale,
                                std::span<const double> p_grid,
                                std::uint64_t n, const RngStream& rng);

namespace detail {
// Shared converse kernel: full-sample quantile-coupling value of (A,B) info
// samples plus a batch-means CI.  The multi-adversary bounds reuse it so the
// one-adversary case reduces to upper_bound bit-for-bit.
BoundEstimate coupled_upper_estimate(std::vector<double> a,
                                     std::vector<double> b);
}  // namespace detail

}  // namespace secrecy
