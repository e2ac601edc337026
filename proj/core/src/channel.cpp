#include "secrecy/channel.hpp"

#include <cmath>

#include "secrecy/errors.hpp"
#include "secrecy/parallel.hpp"

namespace secrecy {

GainSample draw_gain_sample(const ChannelModel& model, const RngStream& rng,
                            std::uint64_t index) {
  const std::uint64_t base = 3 * index;
  return GainSample{model.hm.sample(rng, base), model.he.sample(rng, base + 1),
                    model.hz.sample(rng, base + 2)};
}

std::vector<GainSample> sample_gains(const ChannelModel& model,
                                     std::uint64_t n, const RngStream& rng) {
  std::vector<GainSample> out(n);
  parallel::map_chunks<int>(n, [&](std::uint64_t, std::uint64_t b,
                                   std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i)
      out[i] = draw_gain_sample(model, rng, i);
    return 0;
  });
  return out;
}

double main_info(const GainSample& g, const PowerConfig& power) {
  return std::log2(1.0 + power.pt * g.hm / (1.0 + power.pj * g.hz));
}

double eaves_info(const GainSample& g, const PowerConfig& power) {
  return std::log2(1.0 + power.pt * g.he);
}

double effective_main_gain(const GainSample& g, double pj) {
  return g.hm / (1.0 + pj * g.hz);
}

double empirical_quantile(std::span<const double> sorted, double u) {
  if (sorted.empty()) throw ConfigError("empirical_quantile of empty sample");
  if (!(u >= 0.0 && u <= 1.0))
    throw ConfigError("quantile level must lie in [0,1]");
  const double n = double(sorted.size());
  auto k = std::uint64_t(std::ceil(u * n));
  if (k < 1) k = 1;
  if (k > sorted.size()) k = sorted.size();
  return sorted[k - 1];
}

}  // namespace secrecy
