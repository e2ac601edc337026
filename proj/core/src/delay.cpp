#include "secrecy/delay.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "secrecy/bounds.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/feedback.hpp"
#include "secrecy/parallel.hpp"

namespace secrecy {

const char* to_string(KeyMode m) {
  return m == KeyMode::no_feedback ? "no_feedback" : "one_bit";
}

double OutageEstimate::wilson_lower() const {
  if (n == 0) return 0.0;
  const double z = 1.959963984540054;
  const double nn = double(n);
  const double z2n = z * z / nn;
  const double center = p_success + z2n / 2.0;
  const double rad =
      z * std::sqrt(p_success * (1.0 - p_success) / nn + z2n / (4.0 * nn));
  return (center - rad) / (1.0 + z2n);
}

namespace {

void validate_point(double gamma, double r_tilde, double r_s, double r_key) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw ConfigError("gamma must lie in [0,1]");
  if (!(r_tilde >= 0.0) || !(r_s >= 0.0) || !(r_key >= 0.0))
    throw ConfigError("rates must be >= 0");
  if (r_s > r_tilde)
    throw ConfigError("secrecy rate r_s cannot exceed the message rate r_tilde");
  if (r_key > r_s)
    throw ConfigError("key rate r_key cannot exceed the secrecy rate r_s");
}

// Block success under the conservative events; shared verbatim by
// success_probability and the grid search so their counts agree exactly.
inline bool block_success(double scaled_main, double scaled_eaves,
                          double r_tilde, double r_s, double r_key) {
  if (scaled_main < r_tilde) return false;
  const double need = r_s - r_key;
  return need <= 0.0 || scaled_eaves <= r_tilde - need;
}

}  // namespace

OutageEstimate success_probability(const ChannelModel& model,
                                   const PowerConfig& power, double gamma,
                                   double r_tilde, double r_s, double r_key,
                                   std::uint64_t n, const RngStream& rng) {
  validate(power);
  validate_point(gamma, r_tilde, r_s, r_key);
  if (n == 0) throw ConfigError("sample count must be >= 1");
  auto partials = parallel::map_chunks<std::uint64_t>(
      n, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = b; i < e; ++i) {
          const GainSample g = draw_gain_sample(model, rng, i);
          const double m = (1.0 - gamma) * main_info(g, power);
          const double w = (1.0 - gamma) * eaves_info(g, power);
          hits += block_success(m, w, r_tilde, r_s, r_key) ? 1 : 0;
        }
        return hits;
      });
  std::uint64_t hits = 0;
  for (const auto& p : partials) hits += p;
  const double p_hat = double(hits) / double(n);
  const double ci =
      1.959963984540054 * std::sqrt(p_hat * (1.0 - p_hat) / double(n));
  return OutageEstimate{p_hat, ci, n};
}

double key_rate(const ChannelModel& model, const PowerConfig& power,
                double gamma, KeyMode mode, std::uint64_t n,
                const RngStream& rng) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw ConfigError("gamma must lie in [0,1]");
  double base = lower_bound(model, power, n, rng).value;
  if (mode == KeyMode::one_bit) {
    const std::uint64_t n_renewals =
        std::clamp<std::uint64_t>(n / 10, 1000, 100000);
    const RateMaximum mrc =
        maximize_rate(model, power, FeedbackScheme::mrc, RateSearch{},
                      n_renewals, 10000, rng.substream(0x1B17));
    base = std::max(base, mrc.best.estimate.value);
  }
  return gamma * base;
}

namespace {

// Fenwick tree over value ranks; counts inserted entries <= a threshold.
class RankCounter {
 public:
  explicit RankCounter(const std::vector<double>& sorted_values)
      : values_(sorted_values), tree_(sorted_values.size() + 1, 0) {}

  void insert(double x) {
    auto it = std::lower_bound(values_.begin(), values_.end(), x);
    for (std::size_t k = std::size_t(it - values_.begin()) + 1;
         k <= values_.size(); k += k & (~k + 1))
      ++tree_[k];
  }

  std::uint64_t count_leq(double x) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), x);
    std::uint64_t total = 0;
    for (std::size_t k = std::size_t(it - values_.begin()); k > 0;
         k -= k & (~k + 1))
      total += tree_[k];
    return total;
  }

 private:
  const std::vector<double>& values_;
  std::vector<std::uint64_t> tree_;
};

struct Candidate {
  double gamma = 0.0, r_tilde = 0.0, r_s = 0.0, r_key = 0.0;
  std::uint64_t hits = 0;

  // Lexicographic preference (r_s, -gamma, r_tilde).
  bool operator<(const Candidate& o) const {
    if (r_s != o.r_s) return r_s < o.r_s;
    if (gamma != o.gamma) return gamma > o.gamma;
    return r_tilde < o.r_tilde;
  }
};

}  // namespace

DelayOperatingPoint maximize_outage_rate(const ChannelModel& model,
                                         const PowerConfig& power,
                                         const DelayConfig& config,
                                         std::uint64_t n,
                                         const RngStream& rng) {
  validate(power);
  if (!(config.alpha >= 0.0 && config.alpha <= 1.0))
    throw ConfigError("alpha must lie in [0,1]");
  if (config.rate_grid_points < 8)
    throw ConfigError("rate grid needs at least 8 points");
  if (n == 0) throw ConfigError("sample count must be >= 1");

  std::vector<double> gammas = config.gamma_grid;
  if (gammas.empty())
    for (int k = 0; k <= 20; ++k) gammas.push_back(double(k) / 20.0);
  for (double g : gammas)
    if (!(g >= 0.0 && g <= 1.0)) throw ConfigError("gamma must lie in [0,1]");

  const double c_key =
      key_rate(model, power, 1.0, config.key_mode, n, rng.substream(0x5E1));

  // One draw set shared by every cell, every gamma and (externally) every
  // alpha: common random numbers keep feasible sets nested as alpha grows.
  const RngStream cell_rng = rng.substream(0xCE11);
  std::vector<double> main_i(n), eaves_i(n);
  parallel::map_chunks<int>(
      n, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i) {
          const GainSample g = draw_gain_sample(model, cell_rng, i);
          main_i[i] = main_info(g, power);
          eaves_i[i] = eaves_info(g, power);
        }
        return 0;
      });

  const double p_target = 1.0 - config.alpha;
  const int grid = config.rate_grid_points;
  constexpr int kFineFactor = 8;

  auto wilson_ok = [&](std::uint64_t hits) {
    return OutageEstimate{double(hits) / double(n), 0.0, n}.wilson_lower() >=
           p_target;
  };

  bool have_best = false;
  Candidate best{};
  double best_resolution = 0.0;

  for (const double gamma : gammas) {
    const double scale = 1.0 - gamma;
    std::vector<double> m(n), w(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      m[i] = scale * main_i[i];
      w[i] = scale * eaves_i[i];
    }
    std::vector<double> m_sorted = m;
    std::sort(m_sorted.begin(), m_sorted.end());
    const double r_ceiling = empirical_quantile(m_sorted, 0.999);
    const double r_key = gamma * c_key;

    // Coarse candidates: the grid up to the 0.999 info quantile plus r_key
    // itself, so the pure key-padding point r_s = r_tilde = r_key is present.
    std::vector<double> rates;
    rates.reserve(std::size_t(grid) + 1);
    for (int k = 1; k <= grid; ++k)
      rates.push_back(r_ceiling * double(k) / double(grid));
    if (r_key > 0.0) rates.push_back(r_key);
    std::sort(rates.begin(), rates.end());
    rates.erase(std::unique(rates.begin(), rates.end()), rates.end());
    while (!rates.empty() && rates.front() <= 0.0) rates.erase(rates.begin());
    if (rates.empty()) continue;
    const double coarse_step = r_ceiling > 0.0 ? r_ceiling / double(grid) : 0.0;

    // Offline joint counting: sweep r_tilde descending, inserting samples as
    // they start to satisfy event 1; each event-2 threshold is then a single
    // rank query.  Counts match block_success exactly.
    std::vector<std::size_t> by_m_desc(n);
    for (std::uint64_t i = 0; i < n; ++i) by_m_desc[i] = i;
    std::sort(by_m_desc.begin(), by_m_desc.end(),
              [&](std::size_t x, std::size_t y) { return m[x] > m[y]; });
    std::vector<double> w_sorted = w;
    std::sort(w_sorted.begin(), w_sorted.end());

    bool have_center = false;
    Candidate center{};

    auto sweep = [&](const std::vector<double>& rt_set,
                     const std::vector<double>& rs_set, double resolution,
                     bool track_center) {
      std::vector<double> rt_desc = rt_set;
      std::sort(rt_desc.begin(), rt_desc.end(), std::greater<double>());
      rt_desc.erase(std::unique(rt_desc.begin(), rt_desc.end()),
                    rt_desc.end());
      RankCounter counter(w_sorted);
      std::size_t inserted = 0;
      for (const double r_tilde : rt_desc) {
        while (inserted < n && m[by_m_desc[inserted]] >= r_tilde) {
          counter.insert(w[by_m_desc[inserted]]);
          ++inserted;
        }
        for (const double r_s : rs_set) {
          if (r_s > r_tilde) break;
          if (r_key > r_s) continue;
          const double need = r_s - r_key;
          const std::uint64_t hits = need <= 0.0
                                         ? inserted
                                         : counter.count_leq(r_tilde - need);
          const Candidate c{gamma, r_tilde, r_s, r_key, hits};
          if (!wilson_ok(hits)) continue;
          if (track_center && (!have_center || center < c)) {
            center = c;
            have_center = true;
          }
          if (!have_best || best < c) {
            best = c;
            best_resolution = resolution;
            have_best = true;
          }
        }
      }
    };

    sweep(rates, rates, coarse_step, /*track_center=*/true);

    if (!have_center || coarse_step <= 0.0) continue;

    // Refinement: r_s moves to a fixed fine lattice (an alpha-independent
    // refinement of the coarse grid) within one coarse step of this gamma's
    // best cell; r_tilde candidates stay the coarse set plus the diagonals
    // r_tilde = r_s.  Candidate values never depend on alpha, so feasible
    // sets stay nested and the maximized rate stays monotone in alpha.
    const double fine_den = double(grid) * double(kFineFactor);
    const double lo = center.r_s - coarse_step;
    const double hi = center.r_s + coarse_step;
    std::vector<double> fine_rs{center.r_s};
    if (r_key > 0.0 && r_key >= lo && r_key <= hi) fine_rs.push_back(r_key);
    const auto j_lo = std::int64_t(std::ceil(lo * fine_den / r_ceiling));
    const auto j_hi = std::int64_t(std::floor(hi * fine_den / r_ceiling));
    for (std::int64_t j = std::max<std::int64_t>(j_lo, 1); j <= j_hi; ++j)
      fine_rs.push_back(r_ceiling * double(j) / fine_den);
    std::sort(fine_rs.begin(), fine_rs.end());
    fine_rs.erase(std::unique(fine_rs.begin(), fine_rs.end()), fine_rs.end());
    while (!fine_rs.empty() && fine_rs.front() <= 0.0)
      fine_rs.erase(fine_rs.begin());

    std::vector<double> rt_fine = rates;
    rt_fine.insert(rt_fine.end(), fine_rs.begin(), fine_rs.end());
    sweep(rt_fine, fine_rs, coarse_step / double(kFineFactor),
          /*track_center=*/false);
  }

  DelayOperatingPoint out;
  out.value = BoundEstimate{0.0, 0.0, n, BoundKind::lower};
  if (!have_best) {
    // Only the all-zero point remains; report it at gamma = 0.  Its success
    // event is vacuous, so p = 1 exactly.
    out.p_success = OutageEstimate{1.0, 0.0, n};
    return out;
  }

  out.gamma = best.gamma;
  out.r_tilde = best.r_tilde;
  out.r_s = best.r_s;
  out.r_key = best.r_key;
  out.feasible = true;
  const double p_hat = double(best.hits) / double(n);
  out.p_success = OutageEstimate{
      p_hat, 1.959963984540054 * std::sqrt(p_hat * (1.0 - p_hat) / double(n)),
      n};
  out.value =
      BoundEstimate{best.r_s, best_resolution / 2.0, n, BoundKind::lower};
  return out;
}

}  // namespace secrecy
