#pragma once

#include <cstdint>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/estimate.hpp"

namespace secrecy {

// Channel with S adversaries, each contributing an eavesdropping gain and a
// jamming gain; all coordinates independent.  Jamming interference adds up:
// the main channel sees 1 + pj * sum_s hz_s.  The optional cross-adversary
// gains (adversary r received at adversary s) are accepted for completeness
// but never enter any bound — the bounds hold for every value they take.
struct MultiModel {
  GainDist hm = GainDist::exponential(1.0);
  std::vector<GainDist> he_list;
  std::vector<GainDist> hz_list;
  std::vector<GainDist> hf_list;  // cross gains; parsed, stored, ignored

  std::size_t adversary_count() const { return he_list.size(); }
};

void validate(const MultiModel& model);  // throws ConfigError

struct MultiBound {
  BoundEstimate estimate;
  // Adversary attaining the min for the non-colluding bounds; -1 when the
  // bound has no per-adversary structure (colluding).
  std::int64_t s_argmin = -1;
};

// Non-colluding: every adversary jams the sum channel, but each decodes
// alone — min over s of the single-adversary bound against adversary s.
MultiBound lower_noncolluding(const MultiModel& model,
                              const PowerConfig& power, std::uint64_t n,
                              const RngStream& rng);
MultiBound upper_noncolluding(const MultiModel& model,
                              const PowerConfig& power, std::uint64_t n,
                              const RngStream& rng);

// Colluding: the adversaries pool observations, so the eavesdropping gains
// add inside the log as well.
MultiBound lower_colluding(const MultiModel& model, const PowerConfig& power,
                           std::uint64_t n, const RngStream& rng);
MultiBound upper_colluding(const MultiModel& model, const PowerConfig& power,
                           std::uint64_t n, const RngStream& rng);

}  // namespace secrecy
