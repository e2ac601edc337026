#include "secrecy/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "secrecy/coupling.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/parallel.hpp"

namespace secrecy {

namespace {

// Chunked compensated mean of fn(sample) over n draws; deterministic for any
// worker count because chunk boundaries are fixed and partials merge in
// chunk order.
template <class Fn>
MeanAccum chunked_mean(const ChannelModel& model, std::uint64_t n,
                       const RngStream& rng, Fn&& fn) {
  auto partials = parallel::map_chunks<MeanAccum>(
      n, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        MeanAccum acc;
        for (std::uint64_t i = b; i < e; ++i)
          acc.add(fn(draw_gain_sample(model, rng, i)));
        return acc;
      });
  MeanAccum total;
  for (const auto& p : partials) total.merge(p);
  return total;
}

void validate_inputs(const PowerConfig& power, std::uint64_t n) {
  validate(power);
  if (n == 0) throw ConfigError("sample count must be >= 1");
}

}  // namespace

BoundEstimate lower_bound(const ChannelModel& model, const PowerConfig& power,
                          std::uint64_t n, const RngStream& rng) {
  validate_inputs(power, n);
  const MeanAccum acc = chunked_mean(model, n, rng, [&](const GainSample& g) {
    return main_info(g, power) - eaves_info(g, power);
  });
  return BoundEstimate{std::max(acc.mean(), 0.0), acc.ci95(), n,
                       BoundKind::lower};
}

namespace detail {

// Full-sample quantile-coupling value plus a batch-means CI: the value comes
// from one coupling over all n samples; the spread of 32 independent
// sub-coupling values estimates its variance.
BoundEstimate coupled_upper_estimate(std::vector<double> a,
                                     std::vector<double> b) {
  const std::uint64_t n = a.size();
  constexpr std::size_t kBatches = 32;
  double ci = 0.0;
  if (n >= 2 * kBatches) {
    const std::size_t len = n / kBatches;
    MeanAccum batch_stats;
    std::vector<double> ba(len), bb(len);
    for (std::size_t k = 0; k < kBatches; ++k) {
      std::copy_n(a.begin() + k * len, len, ba.begin());
      std::copy_n(b.begin() + k * len, len, bb.begin());
      std::sort(ba.begin(), ba.end());
      std::sort(bb.begin(), bb.end());
      batch_stats.add(min_positive_gap(EmpiricalDist{ba}, EmpiricalDist{bb}));
    }
    ci = 1.959963984540054 *
         std::sqrt(batch_stats.variance() / double(kBatches));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double value =
      min_positive_gap(EmpiricalDist{std::move(a)}, EmpiricalDist{std::move(b)});
  return BoundEstimate{value, ci, n, BoundKind::upper};
}

}  // namespace detail

BoundEstimate upper_bound(const ChannelModel& model, const PowerConfig& power,
                          std::uint64_t n, const RngStream& rng) {
  validate_inputs(power, n);
  std::vector<double> a(n), b(n);
  parallel::map_chunks<int>(
      n, [&](std::uint64_t, std::uint64_t beg, std::uint64_t end) {
        for (std::uint64_t i = beg; i < end; ++i) {
          const GainSample g = draw_gain_sample(model, rng, i);
          a[i] = main_info(g, power);
          b[i] = eaves_info(g, power);
        }
        return 0;
      });
  return detail::coupled_upper_estimate(std::move(a), std::move(b));
}

BoundEstimate lower_bound_no_jammer_csi(const ChannelModel& model,
                                        const PowerConfig& power,
                                        std::uint64_t n, const RngStream& rng) {
  validate_inputs(power, n);
  const double hz_mean = model.hz.mean();
  const MeanAccum acc = chunked_mean(model, n, rng, [&](const GainSample& g) {
    // Same kernel as lower_bound but with the jammer gain frozen at its
    // mean; bit-identical to lower_bound when hz is a point mass.
    const GainSample fixed{g.hm, g.he, hz_mean};
    return main_info(fixed, power) - eaves_info(fixed, power);
  });
  return BoundEstimate{std::max(acc.mean(), 0.0), acc.ci95(), n,
                       BoundKind::lower};
}

DominanceResult dominance_check(const ChannelModel& model,
                                const PowerConfig& power, std::uint64_t n,
                                const RngStream& rng) {
  validate_inputs(power, n);
  std::vector<double> he(n), hms(n);
  parallel::map_chunks<int>(
      n, [&](std::uint64_t, std::uint64_t beg, std::uint64_t end) {
        for (std::uint64_t i = beg; i < end; ++i) {
          const GainSample g = draw_gain_sample(model, rng, i);
          he[i] = g.he;
          hms[i] = effective_main_gain(g, power.pj);
        }
        return 0;
      });
  std::sort(he.begin(), he.end());
  std::sort(hms.begin(), hms.end());

  // Walk the merged grid; the sup of F_he - F_hm* over the line is attained
  // at a sample point (both CDFs are right-continuous steps).
  double max_gap = -1.0;
  std::size_t ihe = 0, ihm = 0;
  while (ihe < he.size() || ihm < hms.size()) {
    double a;
    if (ihm >= hms.size() || (ihe < he.size() && he[ihe] <= hms[ihm]))
      a = he[ihe];
    else
      a = hms[ihm];
    while (ihe < he.size() && he[ihe] <= a) ++ihe;
    while (ihm < hms.size() && hms[ihm] <= a) ++ihm;
    max_gap = std::max(max_gap, (double(ihe) - double(ihm)) / double(n));
  }

  // Twice the one-sample DKW deviation bound at 95% confidence: each
  // empirical CDF is within sqrt(ln(2/0.05)/(2n)) of its true CDF w.h.p.
  const double eps = 2.0 * std::sqrt(std::log(2.0 / 0.05) / (2.0 * double(n)));
  return DominanceResult{max_gap <= eps, max_gap, eps};
}

double ScalingSpec::operator()(double p) const {
  return coeff * std::pow(p, exponent);
}

SweepResult power_scaling_sweep(const ChannelModel& model,
                                const ScalingSpec& pt_scale,
                                const ScalingSpec& pj_scale,
                                std::span<const double> p_grid,
                                std::uint64_t n, const RngStream& rng) {
  if (p_grid.empty()) throw ConfigError("power sweep needs a non-empty grid");
  for (std::size_t k = 0; k + 1 < p_grid.size(); ++k)
    if (!(p_grid[k] < p_grid[k + 1]))
      throw ConfigError("power sweep grid must be strictly ascending");
  if (p_grid.front() < 0.0)
    throw ConfigError("power sweep grid must be nonnegative");
  for (const ScalingSpec* s : {&pt_scale, &pj_scale}) {
    if (!(s->coeff >= 0.0) || !(s->exponent > 0.0))
      throw ConfigError("power scaling needs coeff >= 0 and exponent > 0");
  }

  SweepResult out;
  out.scaling_warning =
      pt_scale.coeff > 0.0 && pj_scale.coeff > 0.0 &&
      pt_scale.exponent > pj_scale.exponent;
  out.points.reserve(p_grid.size());
  for (const double p : p_grid) {
    const PowerConfig power{pt_scale(p), pj_scale(p)};
    // Same rng at every grid point: common random numbers.
    out.points.push_back(SweepPoint{p, power.pt, power.pj,
                                    upper_bound(model, power, n, rng)});
  }
  return out;
}

}  // namespace secrecy
