#pragma once

#include <string>
#include <vector>

#include "secrecy/dist.hpp"
#include "secrecy/multi.hpp"
#include "secrecy/protocol.hpp"

namespace secrecy {

// JSON model descriptions.  A gain distribution is an object with exactly one
// of the keys "exp" (mean), "point" (value) or "discrete" ({"atoms": [...],
// "probs": [...]}).  A channel model holds per-link distributions under "hm",
// "he", "hz"; omitted links default to exp(1).  A multi-adversary model uses
// "he_list"/"hz_list" (required, equal lengths) and an optional, currently
// unused "hf_list".  Unknown keys are rejected so typos cannot silently fall
// back to defaults.
GainDist parse_gain_dist(const std::string& json_text);
ChannelModel parse_channel_model(const std::string& json_text);
MultiModel parse_multi_model(const std::string& json_text);

ChannelModel load_channel_model(const std::string& path);
MultiModel load_multi_model(const std::string& path);

std::string to_json(const GainDist& dist);
std::string to_json(const ChannelModel& model);
std::string to_json(const MultiModel& model);

// Adversary spec strings: "always_eavesdrop", "always_jam",
// "bernoulli:<p>", "periodic:<k>", "trace:<01 string>".
AdversaryStrategy parse_adversary(const std::string& spec);

// Reads a 0/1 switch trace from a file; whitespace is ignored.
std::vector<int> load_adversary_trace(const std::string& path);

}  // namespace secrecy
