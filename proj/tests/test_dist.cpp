#include <cmath>
#include <map>

#include "doctest.h"
#include "secrecy/dist.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/estimate.hpp"

using namespace secrecy;

TEST_SUITE("dist") {

TEST_CASE("constructors reject invalid parameters") {
  CHECK_THROWS_AS(GainDist::exponential(0.0), ConfigError);
  CHECK_THROWS_AS(GainDist::exponential(-1.0), ConfigError);
  CHECK_THROWS_AS(GainDist::exponential(std::nan("")), ConfigError);
  CHECK_THROWS_AS(GainDist::point_mass(-0.5), ConfigError);
  CHECK_THROWS_AS(
      GainDist::point_mass(std::numeric_limits<double>::infinity()),
      ConfigError);
  CHECK_THROWS_AS(GainDist::discrete({}, {}), ConfigError);
  CHECK_THROWS_AS(GainDist::discrete({1.0}, {0.5, 0.5}), ConfigError);
  CHECK_THROWS_AS(GainDist::discrete({1.0, 2.0}, {0.6, 0.6}), ConfigError);
  CHECK_THROWS_AS(GainDist::discrete({1.0, -2.0}, {0.5, 0.5}), ConfigError);
  CHECK_THROWS_AS(GainDist::discrete({1.0, 2.0}, {1.5, -0.5}), ConfigError);
}

TEST_CASE("point mass always samples its value") {
  const GainDist d = GainDist::point_mass(3.5);
  const RngStream rng{1, 2};
  for (std::uint64_t i = 0; i < 100; ++i) CHECK(d.sample(rng, i) == 3.5);
  CHECK(d.mean() == 3.5);
  CHECK(d.ess_sup() == 3.5);
  CHECK(d.ess_inf() == 3.5);
}

TEST_CASE("exponential sampling matches its mean and support") {
  const GainDist d = GainDist::exponential(0.7);
  const RngStream rng{11, 0};
  MeanAccum acc;
  for (std::uint64_t i = 0; i < 200000; ++i) {
    const double x = d.sample(rng, i);
    REQUIRE(x >= 0.0);
    acc.add(x);
  }
  CHECK(std::abs(acc.mean() - 0.7) < 0.01);
  CHECK(d.mean() == 0.7);
  CHECK(std::isinf(d.ess_sup()));
  CHECK(d.ess_inf() == 0.0);
}

TEST_CASE("discrete sampling reproduces the atom frequencies") {
  const GainDist d = GainDist::discrete({0.0, 1.0, 4.0}, {0.2, 0.5, 0.3});
  const RngStream rng{5, 8};
  std::map<double, std::uint64_t> counts;
  const std::uint64_t n = 200000;
  for (std::uint64_t i = 0; i < n; ++i) ++counts[d.sample(rng, i)];
  CHECK(counts.size() == 3);
  CHECK(std::abs(double(counts[0.0]) / double(n) - 0.2) < 0.005);
  CHECK(std::abs(double(counts[1.0]) / double(n) - 0.5) < 0.005);
  CHECK(std::abs(double(counts[4.0]) / double(n) - 0.3) < 0.005);
  CHECK(d.mean() == doctest::Approx(0.2 * 0.0 + 0.5 * 1.0 + 0.3 * 4.0));
  CHECK(d.ess_sup() == 4.0);
  CHECK(d.ess_inf() == 0.0);
}

TEST_CASE("zero-probability atoms do not stretch the essential range") {
  const GainDist d =
      GainDist::discrete({0.0, 2.0, 9.0}, {0.0, 1.0, 0.0});
  CHECK(d.ess_sup() == 2.0);
  CHECK(d.ess_inf() == 2.0);
  const RngStream rng{3, 3};
  for (std::uint64_t i = 0; i < 1000; ++i) CHECK(d.sample(rng, i) == 2.0);
}

TEST_CASE("distributions compare by family and parameters") {
  CHECK(GainDist::exponential(1.0) == GainDist::exponential(1.0));
  CHECK(GainDist::exponential(1.0) != GainDist::exponential(2.0));
  CHECK(GainDist::exponential(1.0) != GainDist::point_mass(1.0));
  CHECK(GainDist::discrete({1.0}, {1.0}) == GainDist::discrete({1.0}, {1.0}));
}

TEST_CASE("power configuration rejects negative and non-finite powers") {
  CHECK_NOTHROW(validate(PowerConfig{0.0, 0.0}));
  CHECK_THROWS_AS(validate(PowerConfig{-1.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(validate(PowerConfig{1.0, -2.0}), ConfigError);
  CHECK_THROWS_AS(
      validate(PowerConfig{std::numeric_limits<double>::infinity(), 1.0}),
      ConfigError);
}

}  // TEST_SUITE
