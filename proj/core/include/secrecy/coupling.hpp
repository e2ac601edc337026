#pragma once

#include <cstddef>
#include <vector>

#include "secrecy/rng.hpp"

namespace secrecy {

// Equal-weight sample cloud, kept ascending-sorted.
struct EmpiricalDist {
  std::vector<double> samples;

  static EmpiricalDist from_samples(std::vector<double> xs);  // sorts
};

// Finite distribution with explicit probabilities (atoms need not be sorted).
struct DiscreteDist {
  std::vector<double> atoms;
  std::vector<double> probs;
};

void validate(const DiscreteDist& d);  // throws ConfigError

// Joint weight matrix w[i*cols + j] over atom pairs; rows marginalize to a,
// columns to b.
struct CouplingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> w;

  CouplingMatrix() = default;
  CouplingMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), w(r * c) {}
  double& at(std::size_t i, std::size_t j) { return w[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return w[i * cols + j]; }
};

// min over couplings with the given marginals of E[(A - B)^+].  Because
// (a-b)^+ is submodular, the comonotone (sorted-quantile) coupling attains
// the minimum, so this evaluates the sorted pairing directly.  Inputs of
// unequal size are re-expressed on a common quantile grid of size
// max(|a|,|b|).
double min_positive_gap(const EmpiricalDist& a, const EmpiricalDist& b);

// Same optimum for weighted atoms: mass-matching walk over both sorted
// supports (the northwest-corner rule applied to sorted marginals).
double min_positive_gap(const DiscreteDist& a, const DiscreteDist& b);

struct LpSolution {
  double value = 0.0;
  CouplingMatrix plan;
};

// Reference solver: exact transportation simplex over all couplings, no
// appeal to submodularity.  Intended for instances up to ~64 atoms per side;
// used to cross-check min_positive_gap.
LpSolution lp_oracle(const DiscreteDist& a, const DiscreteDist& b);

// Monte Carlo E[(A - B)^+] under the independent coupling: averages
// `rounds` random shufflings of b against a.
double independent_gap(const EmpiricalDist& a, const EmpiricalDist& b,
                       const RngStream& rng, int rounds = 64);

}  // namespace secrecy
