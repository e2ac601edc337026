#pragma once

#include <limits>
#include <variant>
#include <vector>

#include "secrecy/rng.hpp"

namespace secrecy {

struct Exponential {
  double mean = 1.0;
  bool operator==(const Exponential&) const = default;
};

struct PointMass {
  double value = 0.0;
  bool operator==(const PointMass&) const = default;
};

struct Discrete {
  std::vector<double> atoms;
  std::vector<double> probs;
  bool operator==(const Discrete&) const = default;
};

// Distribution of a nonnegative fading power gain.  Validated on
// construction; sampling is addressed by an explicit counter so that draw i
// of a run never depends on draws j < i having happened.
class GainDist {
 public:
  static GainDist exponential(double mean);
  static GainDist point_mass(double value);
  static GainDist discrete(std::vector<double> atoms, std::vector<double> probs);

  double sample(const RngStream& rng, std::uint64_t counter) const;

  double mean() const;
  double ess_sup() const;  // +inf for exponential
  double ess_inf() const;

  const std::variant<Exponential, PointMass, Discrete>& family() const {
    return family_;
  }
  bool operator==(const GainDist&) const = default;

 private:
  explicit GainDist(std::variant<Exponential, PointMass, Discrete> f)
      : family_(std::move(f)) {}
  std::variant<Exponential, PointMass, Discrete> family_;
};

// Single-adversary channel: main (tx->rx), eavesdropper and jammer gains,
// mutually independent across coordinates and across blocks.
struct ChannelModel {
  GainDist hm = GainDist::exponential(1.0);
  GainDist he = GainDist::exponential(1.0);
  GainDist hz = GainDist::exponential(1.0);
  bool operator==(const ChannelModel&) const = default;
};

struct PowerConfig {
  double pt = 1.0;  // transmit power
  double pj = 1.0;  // jamming power
  bool operator==(const PowerConfig&) const = default;
};

void validate(const PowerConfig& power);  // throws ConfigError

struct GainSample {
  double hm = 0.0;
  double he = 0.0;
  double hz = 0.0;
};

}  // namespace secrecy
