#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/model_io.hpp"

using namespace secrecy;

TEST_SUITE("model_io") {

TEST_CASE("gain distributions round-trip through JSON") {
  const GainDist cases[] = {
      GainDist::exponential(2.5),
      GainDist::point_mass(0.0),
      GainDist::point_mass(4.0),
      GainDist::discrete({0.0, 1.5, 3.0}, {0.2, 0.5, 0.3}),
  };
  for (const GainDist& d : cases) {
    CHECK(parse_gain_dist(to_json(d)) == d);
  }
  CHECK(parse_gain_dist(R"({"exp": 1.0})") == GainDist::exponential(1.0));
  CHECK(parse_gain_dist(R"({"point": 2})") == GainDist::point_mass(2.0));
  CHECK(parse_gain_dist(
            R"({"discrete": {"atoms": [1, 2], "probs": [0.25, 0.75]}})") ==
        GainDist::discrete({1.0, 2.0}, {0.25, 0.75}));
}

TEST_CASE("channel models round-trip and default omitted links") {
  const ChannelModel model{GainDist::exponential(5.0),
                           GainDist::discrete({0.0, 1.0}, {0.5, 0.5}),
                           GainDist::point_mass(2.0)};
  CHECK(parse_channel_model(to_json(model)) == model);

  const ChannelModel defaults = parse_channel_model(R"({"hm": {"exp": 3.0}})");
  CHECK(defaults.hm == GainDist::exponential(3.0));
  CHECK(defaults.he == GainDist::exponential(1.0));
  CHECK(defaults.hz == GainDist::exponential(1.0));
  CHECK(parse_channel_model("{}") == ChannelModel{});
}

TEST_CASE("multi-adversary models round-trip") {
  MultiModel model;
  model.hm = GainDist::exponential(5.0);
  model.he_list = {GainDist::exponential(2.0), GainDist::point_mass(1.0)};
  model.hz_list = {GainDist::exponential(1.0), GainDist::exponential(3.0)};
  const MultiModel parsed = parse_multi_model(to_json(model));
  CHECK(parsed.hm == model.hm);
  REQUIRE(parsed.he_list.size() == 2);
  CHECK(parsed.he_list[1] == model.he_list[1]);
  CHECK(parsed.hz_list[1] == model.hz_list[1]);
  CHECK(parsed.hf_list.empty());

  MultiModel with_feedback = model;
  with_feedback.hf_list = {GainDist::point_mass(1.0),
                           GainDist::point_mass(2.0)};
  CHECK(parse_multi_model(to_json(with_feedback)).hf_list.size() == 2);
}

TEST_CASE("unknown keys are rejected at every level") {
  CHECK_THROWS_AS(parse_gain_dist(R"({"exp": 1.0, "mean": 2.0})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_gain_dist(R"({"exponential": 1.0})"), ConfigError);
  CHECK_THROWS_AS(parse_channel_model(R"({"hm": {"exp": 1.0}, "hx": {}})"),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_multi_model(
          R"({"he_list": [{"exp": 1}], "hz_list": [{"exp": 1}], "foo": 3})"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_gain_dist(
          R"({"discrete": {"atoms": [1], "probs": [1], "weights": [1]}})"),
      ConfigError);
}

TEST_CASE("a gain distribution must pick exactly one family") {
  CHECK_THROWS_AS(parse_gain_dist("{}"), ConfigError);
  CHECK_THROWS_AS(parse_gain_dist(R"({"exp": 1.0, "point": 2.0})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_gain_dist(R"({"discrete": {"atoms": [1, 2]}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_gain_dist(R"({"discrete": {"probs": [1.0]}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_gain_dist("not json"), ConfigError);
  CHECK_THROWS_AS(parse_gain_dist("[1, 2]"), ConfigError);
}

TEST_CASE("distribution validation propagates through parsing") {
  CHECK_THROWS_AS(parse_gain_dist(R"({"exp": -1.0})"), ConfigError);
  CHECK_THROWS_AS(parse_gain_dist(R"({"exp": 0.0})"), ConfigError);
  CHECK_THROWS_AS(parse_gain_dist(R"({"point": -2.0})"), ConfigError);
  CHECK_THROWS_AS(
      parse_gain_dist(R"({"discrete": {"atoms": [1, 2], "probs": [0.5]}})"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_gain_dist(
          R"({"discrete": {"atoms": [1, 2], "probs": [0.4, 0.4]}})"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_gain_dist(R"({"discrete": {"atoms": [-1], "probs": [1.0]}})"),
      ConfigError);
}

TEST_CASE("multi-adversary models validate their lists") {
  CHECK_THROWS_AS(parse_multi_model(R"({"hm": {"exp": 1.0}})"), ConfigError);
  CHECK_THROWS_AS(parse_multi_model(R"({"he_list": [], "hz_list": []})"),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_multi_model(
          R"({"he_list": [{"exp": 1}, {"exp": 2}], "hz_list": [{"exp": 1}]})"),
      ConfigError);
  // Cross gains are accepted in any shape and ignored: the bounds do not
  // depend on them, so no length constraint is imposed.
  CHECK_NOTHROW(parse_multi_model(
      R"({"he_list": [{"exp": 1}], "hz_list": [{"exp": 1}],
          "hf_list": [{"exp": 1}, {"exp": 1}]})"));
}

TEST_CASE("model files load from disk and missing files fail loudly") {
  const std::string path = testutil::scratch_file("model.json");
  testutil::write_file(path, R"({"hm": {"exp": 5.0}, "he": {"exp": 2.0}})");
  const ChannelModel model = load_channel_model(path);
  CHECK(model.hm == GainDist::exponential(5.0));
  CHECK(model.hz == GainDist::exponential(1.0));
  CHECK_THROWS_AS(load_channel_model(path + ".missing"), ConfigError);

  const std::string multi_path = testutil::scratch_file("multi.json");
  testutil::write_file(multi_path,
                       R"({"he_list": [{"exp": 2.0}], "hz_list": [{"exp": 1.0}]})");
  CHECK(load_multi_model(multi_path).he_list.size() == 1);
  CHECK_THROWS_AS(load_multi_model(multi_path + ".missing"), ConfigError);
}

TEST_CASE("adversary spec strings parse into strategies") {
  CHECK(parse_adversary("always_eavesdrop").kind ==
        AdversaryStrategy::Kind::always_eavesdrop);
  CHECK(parse_adversary("always_jam").kind ==
        AdversaryStrategy::Kind::always_jam);

  const AdversaryStrategy coin = parse_adversary("bernoulli:0.25");
  CHECK(coin.kind == AdversaryStrategy::Kind::bernoulli);
  CHECK(coin.jam_prob == 0.25);

  const AdversaryStrategy periodic = parse_adversary("periodic:4");
  CHECK(periodic.kind == AdversaryStrategy::Kind::periodic);
  CHECK(periodic.jam_every == 4);

  const AdversaryStrategy scripted = parse_adversary("trace:0110");
  CHECK(scripted.kind == AdversaryStrategy::Kind::explicit_trace);
  CHECK(scripted.trace == std::vector<int>{0, 1, 1, 0});

  CHECK_THROWS_AS(parse_adversary(""), ConfigError);
  CHECK_THROWS_AS(parse_adversary("sometimes"), ConfigError);
  CHECK_THROWS_AS(parse_adversary("bernoulli:"), ConfigError);
  CHECK_THROWS_AS(parse_adversary("bernoulli:abc"), ConfigError);
  CHECK_THROWS_AS(parse_adversary("bernoulli:1.5"), ConfigError);
  CHECK_THROWS_AS(parse_adversary("periodic:0"), ConfigError);
  CHECK_THROWS_AS(parse_adversary("periodic:x"), ConfigError);
  CHECK_THROWS_AS(parse_adversary("trace:"), ConfigError);
  CHECK_THROWS_AS(parse_adversary("trace:012"), ConfigError);
}

TEST_CASE("switch traces load from disk") {
  const std::string path = testutil::scratch_file("trace.txt");
  testutil::write_file(path, "0 1 1\n0\t1\n");
  CHECK(load_adversary_trace(path) == std::vector<int>{0, 1, 1, 0, 1});

  testutil::write_file(path, "010x1");
  CHECK_THROWS_AS(load_adversary_trace(path), ConfigError);
  testutil::write_file(path, "  \n ");
  CHECK_THROWS_AS(load_adversary_trace(path), ConfigError);
  CHECK_THROWS_AS(load_adversary_trace(path + ".missing"), ConfigError);
}

}  // TEST_SUITE
