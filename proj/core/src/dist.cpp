#include "secrecy/dist.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "secrecy/errors.hpp"

namespace secrecy {

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

GainDist GainDist::exponential(double mean) {
  if (!std::isfinite(mean) || mean <= 0.0)
    throw ConfigError("exponential gain needs mean > 0, got " +
                      std::to_string(mean));
  return GainDist{Exponential{mean}};
}

GainDist GainDist::point_mass(double value) {
  if (!finite_nonneg(value))
    throw ConfigError("point-mass gain needs a finite value >= 0, got " +
                      std::to_string(value));
  return GainDist{PointMass{value}};
}

GainDist GainDist::discrete(std::vector<double> atoms,
                            std::vector<double> probs) {
  if (atoms.empty() || atoms.size() != probs.size())
    throw ConfigError("discrete gain needs matching non-empty atoms/probs");
  double total = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!finite_nonneg(atoms[i]))
      throw ConfigError("discrete gain atoms must be finite and >= 0");
    if (!std::isfinite(probs[i]) || probs[i] < 0.0)
      throw ConfigError("discrete gain probabilities must be >= 0");
    total += probs[i];
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ConfigError("discrete gain probabilities must sum to 1, got " +
                      std::to_string(total));
  return GainDist{Discrete{std::move(atoms), std::move(probs)}};
}

double GainDist::sample(const RngStream& rng, std::uint64_t counter) const {
  struct Visitor {
    const RngStream& rng;
    std::uint64_t counter;
    double operator()(const Exponential& e) const {
      return rng.exponential(e.mean, counter);
    }
    double operator()(const PointMass& p) const { return p.value; }
    double operator()(const Discrete& d) const {
      const double u = rng.uniform(counter);
      double cdf = 0.0;
      for (std::size_t i = 0; i + 1 < d.atoms.size(); ++i) {
        cdf += d.probs[i];
        if (u < cdf) return d.atoms[i];
      }
      return d.atoms.back();
    }
  };
  return std::visit(Visitor{rng, counter}, family_);
}

double GainDist::mean() const {
  struct Visitor {
    double operator()(const Exponential& e) const { return e.mean; }
    double operator()(const PointMass& p) const { return p.value; }
    double operator()(const Discrete& d) const {
      double m = 0.0;
      for (std::size_t i = 0; i < d.atoms.size(); ++i)
        m += d.atoms[i] * d.probs[i];
      return m;
    }
  };
  return std::visit(Visitor{}, family_);
}

double GainDist::ess_sup() const {
  struct Visitor {
    double operator()(const Exponential&) const {
      return std::numeric_limits<double>::infinity();
    }
    double operator()(const PointMass& p) const { return p.value; }
    double operator()(const Discrete& d) const {
      double hi = 0.0;
      for (std::size_t i = 0; i < d.atoms.size(); ++i)
        if (d.probs[i] > 0.0) hi = std::max(hi, d.atoms[i]);
      return hi;
    }
  };
  return std::visit(Visitor{}, family_);
}

double GainDist::ess_inf() const {
  struct Visitor {
    double operator()(const Exponential&) const { return 0.0; }
    double operator()(const PointMass& p) const { return p.value; }
    double operator()(const Discrete& d) const {
      double lo = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < d.atoms.size(); ++i)
        if (d.probs[i] > 0.0) lo = std::min(lo, d.atoms[i]);
      return lo;
    }
  };
  return std::visit(Visitor{}, family_);
}

void validate(const PowerConfig& power) {
  if (!std::isfinite(power.pt) || power.pt < 0.0)
    throw ConfigError("transmit power pt must be finite and >= 0");
  if (!std::isfinite(power.pj) || power.pj < 0.0)
    throw ConfigError("jamming power pj must be finite and >= 0");
}

}  // namespace secrecy
