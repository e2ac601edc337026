#include "secrecy/multi.hpp"

#include <algorithm>
#include <cmath>

#include "secrecy/bounds.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/parallel.hpp"

namespace secrecy {

void validate(const MultiModel& model) {
  if (model.he_list.empty())
    throw ConfigError("multi-adversary model needs at least one adversary");
  if (model.he_list.size() != model.hz_list.size())
    throw ConfigError("he_list and hz_list must have one entry per adversary");
}

namespace {

// Joint draw for sample i: hm, then every he_s, then every hz_s, at fixed
// counter offsets.  For S=1 the layout coincides with draw_gain_sample, so
// shared seeds reproduce the single-adversary draws bit-for-bit.
struct MultiSample {
  double hm = 0.0;
  std::vector<double> he;
  std::vector<double> hz;
};

MultiSample draw_multi_sample(const MultiModel& model, const RngStream& rng,
                              std::uint64_t index) {
  const std::size_t s_count = model.adversary_count();
  const std::uint64_t base = std::uint64_t(1 + 2 * s_count) * index;
  MultiSample out;
  out.hm = model.hm.sample(rng, base);
  out.he.resize(s_count);
  out.hz.resize(s_count);
  for (std::size_t s = 0; s < s_count; ++s)
    out.he[s] = model.he_list[s].sample(rng, base + 1 + s);
  for (std::size_t s = 0; s < s_count; ++s)
    out.hz[s] = model.hz_list[s].sample(rng, base + 1 + s_count + s);
  return out;
}

double sum_of(const std::vector<double>& xs) {
  double total = 0.0;
  for (double x : xs) total += x;
  return total;
}

void validate_inputs(const MultiModel& model, const PowerConfig& power,
                     std::uint64_t n) {
  validate(model);
  validate(power);
  if (n == 0) throw ConfigError("sample count must be >= 1");
}

}  // namespace

MultiBound lower_noncolluding(const MultiModel& model,
                              const PowerConfig& power, std::uint64_t n,
                              const RngStream& rng) {
  validate_inputs(model, power, n);
  const std::size_t s_count = model.adversary_count();
  auto partials = parallel::map_chunks<std::vector<MeanAccum>>(
      n, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        std::vector<MeanAccum> acc(s_count);
        for (std::uint64_t i = b; i < e; ++i) {
          const MultiSample ms = draw_multi_sample(model, rng, i);
          const double a =
              main_info(GainSample{ms.hm, 0.0, sum_of(ms.hz)}, power);
          for (std::size_t s = 0; s < s_count; ++s)
            acc[s].add(a - eaves_info(GainSample{0.0, ms.he[s], 0.0}, power));
        }
        return acc;
      });
  std::vector<MeanAccum> total(s_count);
  for (const auto& p : partials)
    for (std::size_t s = 0; s < s_count; ++s) total[s].merge(p[s]);

  MultiBound out;
  out.estimate = BoundEstimate{0.0, 0.0, n, BoundKind::lower};
  for (std::size_t s = 0; s < s_count; ++s) {
    const double clamped = std::max(total[s].mean(), 0.0);
    if (s == 0 || clamped < out.estimate.value) {
      out.estimate.value = clamped;
      out.estimate.ci_halfwidth = total[s].ci95();
      out.s_argmin = std::int64_t(s);
    }
  }
  return out;
}

namespace {

// Info sample matrix for the converse bounds: A shared across adversaries,
// one B column per adversary plus the colluding column.
struct InfoColumns {
  std::vector<double> a;
  std::vector<std::vector<double>> b_each;
  std::vector<double> b_colluding;
};

InfoColumns draw_info_columns(const MultiModel& model,
                              const PowerConfig& power, std::uint64_t n,
                              const RngStream& rng) {
  const std::size_t s_count = model.adversary_count();
  InfoColumns cols;
  cols.a.resize(n);
  cols.b_each.assign(s_count, std::vector<double>(n));
  cols.b_colluding.resize(n);
  parallel::map_chunks<int>(
      n, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i) {
          const MultiSample ms = draw_multi_sample(model, rng, i);
          cols.a[i] = main_info(GainSample{ms.hm, 0.0, sum_of(ms.hz)}, power);
          for (std::size_t s = 0; s < s_count; ++s)
            cols.b_each[s][i] =
                eaves_info(GainSample{0.0, ms.he[s], 0.0}, power);
          cols.b_colluding[i] =
              eaves_info(GainSample{0.0, sum_of(ms.he), 0.0}, power);
        }
        return 0;
      });
  return cols;
}

}  // namespace

MultiBound upper_noncolluding(const MultiModel& model,
                              const PowerConfig& power, std::uint64_t n,
                              const RngStream& rng) {
  validate_inputs(model, power, n);
  const InfoColumns cols = draw_info_columns(model, power, n, rng);
  MultiBound out;
  for (std::size_t s = 0; s < model.adversary_count(); ++s) {
    BoundEstimate est =
        detail::coupled_upper_estimate(cols.a, cols.b_each[s]);
    if (s == 0 || est.value < out.estimate.value) {
      out.estimate = est;
      out.s_argmin = std::int64_t(s);
    }
  }
  return out;
}

MultiBound lower_colluding(const MultiModel& model, const PowerConfig& power,
                           std::uint64_t n, const RngStream& rng) {
  validate_inputs(model, power, n);
  auto partials = parallel::map_chunks<MeanAccum>(
      n, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        MeanAccum acc;
        for (std::uint64_t i = b; i < e; ++i) {
          const MultiSample ms = draw_multi_sample(model, rng, i);
          const double a =
              main_info(GainSample{ms.hm, 0.0, sum_of(ms.hz)}, power);
          acc.add(a - eaves_info(GainSample{0.0, sum_of(ms.he), 0.0}, power));
        }
        return acc;
      });
  MeanAccum total;
  for (const auto& p : partials) total.merge(p);
  return MultiBound{BoundEstimate{std::max(total.mean(), 0.0), total.ci95(),
                                  n, BoundKind::lower},
                    -1};
}

MultiBound upper_colluding(const MultiModel& model, const PowerConfig& power,
                           std::uint64_t n, const RngStream& rng) {
  validate_inputs(model, power, n);
  InfoColumns cols = draw_info_columns(model, power, n, rng);
  return MultiBound{detail::coupled_upper_estimate(std::move(cols.a),
                                                   std::move(cols.b_colluding)),
                    -1};
}

}  // namespace secrecy
