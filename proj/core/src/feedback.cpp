#include "secrecy/feedback.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "secrecy/bounds.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/parallel.hpp"

namespace secrecy {

const char* to_string(FeedbackScheme s) {
  switch (s) {
    case FeedbackScheme::mrc: return "mrc";
    case FeedbackScheme::plain_arq: return "plain_arq";
    case FeedbackScheme::main_csi: return "main_csi";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kEpochChunk = 1024;

// Largest information total one epoch can accumulate.  plain_arq/main_csi
// decode single blocks; mrc adds up to t_max block SNRs inside one log.
double max_epoch_info(const ChannelModel& model, const PowerConfig& power,
                      FeedbackScheme scheme, std::uint64_t t_max) {
  const double c_max =
      power.pt * model.hm.ess_sup() / (1.0 + power.pj * model.hz.ess_inf());
  if (std::isinf(c_max)) return c_max;
  const double top = scheme == FeedbackScheme::mrc ? double(t_max) * c_max
                                                   : c_max;
  return std::log2(1.0 + top);
}

RenewalSample simulate_epoch(const ChannelModel& model,
                             const PowerConfig& power, double r,
                             FeedbackScheme scheme, std::uint64_t t_max,
                             const RngStream& epoch_rng) {
  double snr_sum = 0.0;
  double sum_he = 0.0;
  for (std::uint64_t t = 0; t < t_max; ++t) {
    const GainSample g = draw_gain_sample(model, epoch_rng, t);
    bool crossed = false;
    if (scheme == FeedbackScheme::mrc) {
      snr_sum += power.pt * g.hm / (1.0 + power.pj * g.hz);
      crossed = std::log2(1.0 + snr_sum) >= r;
    } else {
      crossed = main_info(g, power) >= r;
    }
    // The adversary hears every block of the epoch under the conservative
    // account; with main-channel CSI only the final (ACKed) block can leak.
    if (scheme == FeedbackScheme::main_csi)
      sum_he = g.he;
    else
      sum_he += g.he;
    if (crossed) {
      const double leak = std::log2(1.0 + power.pt * sum_he);
      return RenewalSample{t + 1, sum_he, std::max(r - leak, 0.0), false};
    }
  }
  return RenewalSample{t_max, sum_he, 0.0, true};
}

void validate_renewal_inputs(const ChannelModel& model,
                             const PowerConfig& power, double r,
                             FeedbackScheme scheme, std::uint64_t n_renewals,
                             std::uint64_t t_max) {
  validate(power);
  if (!(r >= 0.0)) throw ConfigError("threshold rate r must be >= 0");
  if (n_renewals == 0) throw ConfigError("need at least one renewal epoch");
  if (t_max == 0) throw ConfigError("t_max must be >= 1");
  if (r > max_epoch_info(model, power, scheme, t_max))
    throw UnreachableThresholdError(
        "threshold r=" + std::to_string(r) +
        " exceeds the largest information accumulable in " +
        std::to_string(t_max) + " blocks; every epoch would truncate");
}

}  // namespace

std::vector<RenewalSample> simulate_renewals(const ChannelModel& model,
                                             const PowerConfig& power,
                                             double r, FeedbackScheme scheme,
                                             std::uint64_t n_renewals,
                                             std::uint64_t t_max,
                                             const RngStream& rng) {
  validate_renewal_inputs(model, power, r, scheme, n_renewals, t_max);
  std::vector<RenewalSample> out(n_renewals);
  parallel::map_chunks<int>(
      n_renewals,
      [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t k = b; k < e; ++k)
          out[k] = simulate_epoch(model, power, r, scheme, t_max,
                                  rng.substream(k));
        return 0;
      },
      kEpochChunk);
  return out;
}

RateEstimate rate_at(const ChannelModel& model, const PowerConfig& power,
                     double r, FeedbackScheme scheme, std::uint64_t n_renewals,
                     std::uint64_t t_max, const RngStream& rng) {
  validate_renewal_inputs(model, power, r, scheme, n_renewals, t_max);
  struct Partial {
    RatioAccum ratio;
    std::uint64_t truncated = 0;
  };
  auto partials = parallel::map_chunks<Partial>(
      n_renewals,
      [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        Partial p;
        for (std::uint64_t k = b; k < e; ++k) {
          const RenewalSample s =
              simulate_epoch(model, power, r, scheme, t_max, rng.substream(k));
          p.ratio.add(s.reward, double(s.t));
          p.truncated += s.truncated ? 1 : 0;
        }
        return p;
      },
      kEpochChunk);
  RatioAccum total;
  std::uint64_t truncated = 0;
  for (const auto& p : partials) {
    total.merge(p.ratio);
    truncated += p.truncated;
  }
  RateEstimate out;
  out.estimate = BoundEstimate{total.ratio(), total.ci95(), n_renewals,
                               BoundKind::lower};
  out.mean_t = total.mean_t();
  out.truncation_fraction = double(truncated) / double(n_renewals);
  return out;
}

RateMaximum maximize_rate(const ChannelModel& model, const PowerConfig& power,
                          FeedbackScheme scheme, const RateSearch& search,
                          std::uint64_t n_renewals, std::uint64_t t_max,
                          const RngStream& rng) {
  validate(power);
  if (search.grid_points < 2 || search.refine_iters < 0)
    throw ConfigError("rate search needs grid_points >= 2, refine_iters >= 0");

  double r_max = search.r_max;
  if (r_max <= 0.0) {
    // Scan ceiling: 0.999-quantile of the single-block information, from an
    // auxiliary stream so the epoch streams stay aligned across calls.
    constexpr std::uint64_t kAux = 1 << 16;
    const RngStream aux = rng.substream(0xA0C7);
    std::vector<double> info(kAux);
    for (std::uint64_t i = 0; i < kAux; ++i)
      info[i] = main_info(draw_gain_sample(model, aux, i), power);
    std::sort(info.begin(), info.end());
    r_max = empirical_quantile(info, 0.999);
  }

  RateMaximum best;
  best.best.estimate = BoundEstimate{0.0, 0.0, n_renewals, BoundKind::lower};
  if (!(r_max > 0.0)) return best;  // degenerate channel: rate 0 at any r

  // Epoch gains depend only on the stream, not on r: common random numbers
  // make eval() deterministic in r, so the argmax is stable.
  auto eval = [&](double r) {
    const RateEstimate est =
        rate_at(model, power, r, scheme, n_renewals, t_max, rng);
    if (est.estimate.value > best.best.estimate.value) {
      best.r_star = r;
      best.best = est;
    }
    return est.estimate.value;
  };

  const int grid = search.grid_points;
  int best_k = 1;
  double best_val = -1.0;
  for (int k = 1; k <= grid; ++k) {
    const double r = r_max * double(k) / double(grid);
    const double v = eval(r);
    if (v > best_val) {
      best_val = v;
      best_k = k;
    }
  }

  double lo = r_max * double(std::max(best_k - 1, 1)) / double(grid);
  double hi = r_max * double(std::min(best_k + 1, grid)) / double(grid);
  if (best_k == 1) lo = r_max / (2.0 * double(grid));
  constexpr double kInvPhi = 0.6180339887498949;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = eval(c), fd = eval(d);
  for (int it = 0; it < search.refine_iters; ++it) {
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = eval(d);
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = eval(c);
    }
  }
  return best;
}

BoundEstimate upper_bound_1bit(const ChannelModel& model,
                               const PowerConfig& power, std::uint64_t n,
                               const RngStream& rng) {
  validate(power);
  if (n == 0) throw ConfigError("sample count must be >= 1");
  auto partials = parallel::map_chunks<MeanAccum>(
      n, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        MeanAccum acc;
        for (std::uint64_t i = b; i < e; ++i) {
          const GainSample g = draw_gain_sample(model, rng, i);
          const double denom =
              1.0 + std::max(power.pj * g.hz, power.pt * g.he);
          acc.add(std::log2(1.0 + power.pt * g.hm / denom));
        }
        return acc;
      });
  MeanAccum total;
  for (const auto& p : partials) total.merge(p);
  return BoundEstimate{total.mean(), total.ci95(), n, BoundKind::upper};
}

BoundEstimate one_bit_lower_bound(const ChannelModel& model,
                                  const PowerConfig& power,
                                  const RateSearch& search,
                                  std::uint64_t n_renewals, std::uint64_t n,
                                  const RngStream& rng) {
  const BoundEstimate no_fb = lower_bound(model, power, n, rng.substream(1));
  const RateMaximum mrc =
      maximize_rate(model, power, FeedbackScheme::mrc, search, n_renewals,
                    10000, rng.substream(2));
  return no_fb.value >= mrc.best.estimate.value ? no_fb : mrc.best.estimate;
}

}  // namespace secrecy
