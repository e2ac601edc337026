// Microbenchmarks for the hot paths: gain sampling, the two capacity-bound
// estimators, the coupling oracles, and the block-level simulators.
//
//   cmake --build build --target secrecy_benchmarks
//   ./build/benchmarks/secrecy_benchmarks

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "secrecy/bounds.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/coupling.hpp"
#include "secrecy/feedback.hpp"
#include "secrecy/protocol.hpp"
#include "secrecy/rng.hpp"

namespace {

using namespace secrecy;

ChannelModel bench_model() {
  return ChannelModel{GainDist::exponential(5.0), GainDist::exponential(2.0),
                      GainDist::exponential(2.0)};
}

const PowerConfig kPower{10.0, 1.0};

void BM_DrawGainSample(benchmark::State& state) {
  const ChannelModel model = bench_model();
  const RngStream rng{1, 0};
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(main_info(draw_gain_sample(model, rng, i), kPower));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DrawGainSample);

void BM_LowerBound(benchmark::State& state) {
  const ChannelModel model = bench_model();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RngStream rng{2, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_bound(model, kPower, n, rng).value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_LowerBound)->Range(1 << 14, 1 << 20);

void BM_UpperBound(benchmark::State& state) {
  const ChannelModel model = bench_model();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RngStream rng{3, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(upper_bound(model, kPower, n, rng).value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_UpperBound)->Range(1 << 14, 1 << 20);

void BM_QuantileCoupling(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RngStream rng{4, 0};
  EmpiricalDist a, b;
  a.samples.resize(n);
  b.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.samples[i] = rng.exponential(2.0, 2 * i);
    b.samples[i] = rng.exponential(1.0, 2 * i + 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_positive_gap(a, b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_QuantileCoupling)->Range(1 << 10, 1 << 18);

void BM_LpOracle8x8(benchmark::State& state) {
  const RngStream rng{5, 0};
  DiscreteDist a, b;
  double sa = 0.0, sb = 0.0;
  for (int i = 0; i < 8; ++i) {
    a.atoms.push_back(8.0 * rng.uniform(4 * i));
    b.atoms.push_back(8.0 * rng.uniform(4 * i + 1));
    a.probs.push_back(0.05 + rng.uniform(4 * i + 2));
    b.probs.push_back(0.05 + rng.uniform(4 * i + 3));
    sa += a.probs.back();
    sb += b.probs.back();
  }
  double pa = 0.0, pb = 0.0;
  for (int i = 0; i < 7; ++i) {
    a.probs[i] /= sa;
    b.probs[i] /= sb;
    pa += a.probs[i];
    pb += b.probs[i];
  }
  a.probs[7] = 1.0 - pa;
  b.probs[7] = 1.0 - pb;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_oracle(a, b).value);
  }
}
BENCHMARK(BM_LpOracle8x8);

void BM_RenewalEpochs(benchmark::State& state) {
  const ChannelModel model = bench_model();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const RngStream rng{6, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rate_at(model, kPower, 1.0, FeedbackScheme::mrc, n, 10000, rng)
            .estimate.value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_RenewalEpochs)->Range(1 << 10, 1 << 14);

void BM_ArqSession(benchmark::State& state) {
  const ChannelModel model = bench_model();
  const auto blocks = static_cast<std::uint64_t>(state.range(0));
  const RngStream rng{7, 0};
  const AdversaryStrategy coin = AdversaryStrategy::bernoulli(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_arq_session(model, kPower, 1.0, FeedbackScheme::mrc, coin, blocks,
                        rng)
            .empirical_rate);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(blocks));
}
BENCHMARK(BM_ArqSession)->Range(1 << 12, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
