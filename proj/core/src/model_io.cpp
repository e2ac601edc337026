#include "secrecy/model_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "secrecy/errors.hpp"

namespace secrecy {

namespace {

using nlohmann::json;

void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const char* what) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        ok = true;
        break;
      }
    if (!ok)
      throw ConfigError(std::string("unknown key \"") + item.key() + "\" in " +
                        what);
  }
}

double as_number(const json& j, const char* what) {
  if (!j.is_number())
    throw ConfigError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> as_number_list(const json& j, const char* what) {
  if (!j.is_array())
    throw ConfigError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_number(v, what));
  return out;
}

GainDist parse_dist(const json& j) {
  if (!j.is_object())
    throw ConfigError(
        "distribution must be an object with one of: exp, point, discrete");
  expect_keys(j, {"exp", "point", "discrete"}, "distribution");
  if (j.size() != 1)
    throw ConfigError(
        "distribution must contain exactly one of: exp, point, discrete");
  if (j.contains("exp")) return GainDist::exponential(as_number(j["exp"], "exp"));
  if (j.contains("point"))
    return GainDist::point_mass(as_number(j["point"], "point"));
  const json& d = j.at("discrete");
  if (!d.is_object()) throw ConfigError("discrete must be an object");
  expect_keys(d, {"atoms", "probs"}, "discrete distribution");
  if (!d.contains("atoms") || !d.contains("probs"))
    throw ConfigError("discrete distribution needs both atoms and probs");
  return GainDist::discrete(as_number_list(d["atoms"], "atoms"),
                            as_number_list(d["probs"], "probs"));
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("invalid JSON in model description");
  return j;
}

json dist_to_json(const GainDist& dist) {
  json j;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          j["exp"] = f.mean;
        } else if constexpr (std::is_same_v<T, PointMass>) {
          j["point"] = f.value;
        } else {
          j["discrete"] = json{{"atoms", f.atoms}, {"probs", f.probs}};
        }
      },
      dist.family());
  return j;
}

std::vector<GainDist> parse_dist_list(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw ConfigError(std::string(what) + " must be a non-empty array");
  std::vector<GainDist> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(parse_dist(v));
  return out;
}

}  // namespace

GainDist parse_gain_dist(const std::string& json_text) {
  return parse_dist(parse_or_throw(json_text));
}

ChannelModel parse_channel_model(const std::string& json_text) {
  const json j = parse_or_throw(json_text);
  if (!j.is_object()) throw ConfigError("channel model must be a JSON object");
  expect_keys(j, {"hm", "he", "hz"}, "channel model");
  ChannelModel model;
  if (j.contains("hm")) model.hm = parse_dist(j["hm"]);
  if (j.contains("he")) model.he = parse_dist(j["he"]);
  if (j.contains("hz")) model.hz = parse_dist(j["hz"]);
  return model;
}

MultiModel parse_multi_model(const std::string& json_text) {
  const json j = parse_or_throw(json_text);
  if (!j.is_object())
    throw ConfigError("multi-adversary model must be a JSON object");
  expect_keys(j, {"hm", "he_list", "hz_list", "hf_list"},
              "multi-adversary model");
  if (!j.contains("he_list") || !j.contains("hz_list"))
    throw ConfigError("multi-adversary model needs he_list and hz_list");
  MultiModel model;
  if (j.contains("hm")) model.hm = parse_dist(j["hm"]);
  model.he_list = parse_dist_list(j["he_list"], "he_list");
  model.hz_list = parse_dist_list(j["hz_list"], "hz_list");
  if (j.contains("hf_list"))
    model.hf_list = parse_dist_list(j["hf_list"], "hf_list");
  validate(model);
  return model;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open model file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ChannelModel load_channel_model(const std::string& path) {
  return parse_channel_model(slurp(path));
}

MultiModel load_multi_model(const std::string& path) {
  return parse_multi_model(slurp(path));
}

std::string to_json(const GainDist& dist) { return dist_to_json(dist).dump(); }

std::string to_json(const ChannelModel& model) {
  json j{{"hm", dist_to_json(model.hm)},
         {"he", dist_to_json(model.he)},
         {"hz", dist_to_json(model.hz)}};
  return j.dump();
}

std::string to_json(const MultiModel& model) {
  json he = json::array(), hz = json::array();
  for (const auto& d : model.he_list) he.push_back(dist_to_json(d));
  for (const auto& d : model.hz_list) hz.push_back(dist_to_json(d));
  json j{{"hm", dist_to_json(model.hm)}, {"he_list", he}, {"hz_list", hz}};
  if (!model.hf_list.empty()) {
    json hf = json::array();
    for (const auto& d : model.hf_list) hf.push_back(dist_to_json(d));
    j["hf_list"] = hf;
  }
  return j.dump();
}

AdversaryStrategy parse_adversary(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? std::string{} : spec.substr(colon + 1);

  if (head == "always_eavesdrop" || head == "eavesdrop") {
    if (!arg.empty()) throw ConfigError("always_eavesdrop takes no argument");
    return AdversaryStrategy::always_eavesdrop();
  }
  if (head == "always_jam" || head == "jam") {
    if (!arg.empty()) throw ConfigError("always_jam takes no argument");
    return AdversaryStrategy::always_jam();
  }
  if (head == "bernoulli") {
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw ConfigError("bernoulli needs a probability, e.g. bernoulli:0.4");
    }
    return AdversaryStrategy::bernoulli(p);
  }
  if (head == "periodic") {
    unsigned long long k = 0;
    try {
      std::size_t used = 0;
      k = std::stoull(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw ConfigError("periodic needs a period, e.g. periodic:3");
    }
    return AdversaryStrategy::periodic(k);
  }
  if (head == "trace") {
    std::vector<int> bits;
    for (char c : arg) {
      if (c == '0' || c == '1')
        bits.push_back(c - '0');
      else
        throw ConfigError("trace bits must be 0 or 1");
    }
    return AdversaryStrategy::explicit_trace(std::move(bits));
  }
  throw ConfigError(
      "unknown adversary spec \"" + spec +
      "\"; expected always_eavesdrop, always_jam, bernoulli:<p>, "
      "periodic:<k> or trace:<bits>");
}

std::vector<int> load_adversary_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open trace file: " + path);
  std::vector<int> bits;
  char c;
  while (in.get(c)) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '0' || c == '1')
      bits.push_back(c - '0');
    else
      throw ConfigError("trace file may contain only 0, 1 and whitespace");
  }
  if (bits.empty()) throw ConfigError("trace file is empty");
  return bits;
}

}  // namespace secrecy
