#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using testutil::CliResult;
using testutil::run_cli;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string fig2_model_args() {
  static const std::string path = [] {
    const auto p = testutil::scratch_file("cli-fig2-model.json");
    testutil::write_file(
        p, R"({"hm": {"exp": 1.0}, "he": {"exp": 2.0}, "hz": {"exp": 1.0}})");
    return p.string();
  }();
  return "--model '" + path + "'";
}

std::string multi_model_args() {
  static const std::string path = [] {
    const auto p = testutil::scratch_file("cli-multi-model.json");
    testutil::write_file(p, R"({
      "hm": {"exp": 5.0},
      "he_list": [{"exp": 2.0}, {"exp": 0.5}],
      "hz_list": [{"exp": 2.0}, {"exp": 1.0}]
    })");
    return p.string();
  }();
  return "--model '" + path + "'";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bounds subcommand emits annotated CSV on stdout") {
  const CliResult res = run_cli("bounds --seed 3 --samples 2000 --pt 2 " +
                                fig2_model_args());
  REQUIRE(res.exit_code == 0);
  CHECK(contains(res.output, "# secrecy-lab bounds seed=3 samples=2000"));
  CHECK(contains(res.output, "# pt=2 pj=1"));
  CHECK(contains(res.output, "# model="));
  CHECK(contains(res.output, "\"hm\""));
  CHECK(contains(res.output, "quantity,value_bits,ci,n"));
  CHECK(contains(res.output, "\nlower,"));
  CHECK(contains(res.output, "\nupper,"));
  CHECK(contains(res.output, "\nlower_no_jammer_csi,"));
  // Thread count must never be part of the recorded configuration.
  CHECK_FALSE(contains(res.output, "threads"));
}

TEST_CASE("the seed environment variable is a default, not an override") {
  const std::string args = "bounds --samples 2000 " + fig2_model_args();
  const CliResult flag = run_cli(args + " --seed 77");
  const CliResult env = run_cli(args, "SECRECY_LAB_SEED=77");
  const CliResult both = run_cli(args + " --seed 78", "SECRECY_LAB_SEED=77");
  const CliResult other = run_cli(args + " --seed 78");
  REQUIRE(flag.exit_code == 0);
  CHECK(env.output == flag.output);
  CHECK(both.output == other.output);
  CHECK(flag.output != other.output);
}

TEST_CASE("every subcommand is byte-identical across repeats and threads") {
  const std::vector<std::string> commands = {
      "bounds --seed 5 --samples 2000 --pt 10 " + fig2_model_args(),
      "dominance --seed 5 --samples 2000 --pt 1 --pj 1 " + fig2_model_args(),
      "feedback --seed 5 --samples 2000 --pt 10 --rate 1.0 --epochs 1500 " +
          fig2_model_args(),
      "multi --seed 5 --samples 2000 --pt 1 " + multi_model_args(),
      "delay --seed 5 --samples 3000 --pt 10 --alpha 0.2 " + fig2_model_args(),
      "simulate --seed 5 --pt 10 --rate 1.0 --blocks 4000 "
      "--adversary bernoulli:0.5 " +
          fig2_model_args(),
      "simulate --seed 5 --pt 10 --protocol delay --gamma 0.2 --r-tilde 1 "
      "--r-s 0.8 --r-key 0.2 --m1 20 --m2 10 " +
          fig2_model_args(),
      "sweep --seed 5 --samples 2000 --p-grid 1,10,100 " + fig2_model_args(),
      "figures --seed 5 --samples 2000 --which fig2 --pt-grid 1,10",
  };
  for (const std::string& cmd : commands) {
    CAPTURE(cmd);
    const CliResult once = run_cli(cmd);
    REQUIRE(once.exit_code == 0);
    CHECK(run_cli(cmd).output == once.output);
    CHECK(run_cli(cmd + " --threads 1").output == once.output);
    CHECK(run_cli(cmd + " --threads 4").output == once.output);
  }
}

TEST_CASE("results land in --out files exactly as they would on stdout") {
  const auto out = testutil::scratch_file("bounds.csv");
  std::filesystem::remove(out);
  const std::string args = "bounds --seed 9 --samples 2000 --pt 5 " +
                           fig2_model_args();
  const CliResult to_stdout = run_cli(args);
  const CliResult to_file = run_cli(args + " --out '" + out.string() + "'");
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.output.empty());
  CHECK(testutil::read_file(out) == to_stdout.output);
  std::filesystem::remove(out);
}

TEST_CASE("configuration errors exit with status 2 and leave no file") {
  const auto out = testutil::scratch_file("never-written.csv");
  std::filesystem::remove(out);
  const CliResult bad_power = run_cli("bounds --pt -1 --samples 100 --out '" +
                                      out.string() + "'");
  CHECK(bad_power.exit_code == 2);
  CHECK(contains(bad_power.output, "configuration error"));
  CHECK_FALSE(std::filesystem::exists(out));

  CHECK(run_cli("bounds --bogus-flag 1").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  CHECK(run_cli("multi --samples 100").exit_code == 2);  // needs --model
  CHECK(run_cli("figures --samples 100").exit_code == 2);  // needs --which
  CHECK(run_cli("bounds --samples 100 --model /no/such/model.json").exit_code ==
        2);
  CHECK(run_cli("simulate --rate 0 --blocks 100 --samples 100").exit_code ==
        2);
}

TEST_CASE("runtime failures exit with status 1") {
  const CliResult res = run_cli(
      "bounds --samples 100 --out /no-such-directory/x.csv " +
      fig2_model_args());
  CHECK(res.exit_code == 1);
  CHECK(contains(res.output, "error"));
}

TEST_CASE("figure data uses the common x,series schema") {
  const CliResult res =
      run_cli("figures --seed 4 --samples 2000 --which fig2 --pt-grid 10");
  REQUIRE(res.exit_code == 0);
  CHECK(contains(res.output, "x,series,value_bits,ci"));
  for (const char* series : {"lower_nofeedback", "upper_nofeedback",
                             "lower_1bit", "upper_1bit"}) {
    CAPTURE(series);
    CHECK(contains(res.output, "10," + std::string(series) + ","));
  }

  const CliResult fig3 =
      run_cli("figures --seed 4 --samples 2000 --which fig3 --pt-grid 1,100");
  REQUIRE(fig3.exit_code == 0);
  CHECK(contains(fig3.output, "upper_pt1x"));
  CHECK(contains(fig3.output, "upper_pt10x"));
}

TEST_CASE("simulate can dump the per-block event trace as JSON lines") {
  const auto events = testutil::scratch_file("events.jsonl");
  std::filesystem::remove(events);
  const CliResult res = run_cli(
      "simulate --seed 6 --pt 10 --rate 1.0 --blocks 50 "
      "--adversary periodic:3 --events-out '" +
      events.string() + "' " + fig2_model_args());
  REQUIRE(res.exit_code == 0);
  const std::string text = testutil::read_file(events);
  std::size_t lines = 0;
  std::size_t pos = 0;
  while ((pos = text.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 50);
  CHECK(text.rfind("{\"index\":0,", 0) == 0);
  CHECK(contains(text, "\"phi\":1"));
  CHECK(contains(text, "\"leaked_info\":"));
  CHECK(contains(text, "\"ack\":true"));
  std::filesystem::remove(events);
}

TEST_CASE("explicit trace files drive the simulated adversary") {
  const auto trace = testutil::scratch_file("switch-trace.txt");
  testutil::write_file(trace, std::string(200, '1'));  // always jam
  const CliResult jam_file = run_cli(
      "simulate --seed 8 --pt 10 --rate 1.0 --blocks 200 --trace-file '" +
      trace.string() + "' " + fig2_model_args());
  const CliResult jam_spec = run_cli(
      "simulate --seed 8 --pt 10 --rate 1.0 --blocks 200 "
      "--adversary always_jam " +
      fig2_model_args());
  REQUIRE(jam_file.exit_code == 0);
  REQUIRE(jam_spec.exit_code == 0);
  // Same gains stream, same switch sequence: identical data rows.
  const auto data_rows = [](const std::string& s) {
    return s.substr(s.find("\nblocks,"));
  };
  CHECK(data_rows(jam_file.output) == data_rows(jam_spec.output));

  // A trace shorter than the session is a configuration error.
  const CliResult shorter = run_cli(
      "simulate --seed 8 --pt 10 --rate 1.0 --blocks 500 --trace-file '" +
      trace.string() + "' " + fig2_model_args());
  CHECK(shorter.exit_code == 2);
}

}  // TEST_SUITE
