// secrecy-lab: command-line front end for the Monte Carlo estimators.
// Emits plot-ready CSV (comma separated, '.' decimals, '#' header comments
// that embed the resolved configuration and seed).  Every subcommand is
// byte-deterministic for a fixed seed and config, regardless of --threads.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secrecy/bounds.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/delay.hpp"
#include "secrecy/dist.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/feedback.hpp"
#include "secrecy/model_io.hpp"
#include "secrecy/multi.hpp"
#include "secrecy/parallel.hpp"
#include "secrecy/protocol.hpp"
#include "secrecy/rng.hpp"

namespace {

using namespace secrecy;

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(std::uint64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(std::int64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(bool v) { return v ? "1" : "0"; }

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += fmt(xs[i]);
  }
  return s;
}

struct CsvDoc {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void render(std::ostream& os) const {
    for (const auto& c : comments) os << "# " << c << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << row[i];
      os << "\n";
    }
  }
};

// Output files are created only after all computation succeeded, so a
// configuration or runtime error never leaves a partial file behind.
void emit(const CsvDoc& doc, const std::string& path) {
  if (path.empty()) {
    doc.render(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  doc.render(out);
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

struct GlobalOptions {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::uint64_t samples = 100000;
  std::string out;
  std::string model_path;
};

ChannelModel resolve_model(const GlobalOptions& g) {
  if (g.model_path.empty()) return ChannelModel{};
  return load_channel_model(g.model_path);
}

std::string base_header(const char* sub, const GlobalOptions& g) {
  return std::string("secrecy-lab ") + sub + " seed=" + fmt(g.seed) +
         " samples=" + fmt(g.samples);
}

void add_bound_row(CsvDoc& doc, const char* name, const BoundEstimate& e) {
  doc.rows.push_back(
      {name, fmt(e.value), fmt(e.ci_halfwidth), fmt(e.n_samples)});
}

// ---------------------------------------------------------------- bounds --

void run_bounds(const GlobalOptions& g, const PowerConfig& power) {
  const ChannelModel model = resolve_model(g);
  validate(power);
  const RngStream rng{g.seed, 0};

  const BoundEstimate lo = lower_bound(model, power, g.samples, rng);
  const BoundEstimate hi = upper_bound(model, power, g.samples, rng);
  const BoundEstimate lo_nj =
      lower_bound_no_jammer_csi(model, power, g.samples, rng);

  CsvDoc doc;
  doc.comments = {base_header("bounds", g),
                  "pt=" + fmt(power.pt) + " pj=" + fmt(power.pj),
                  "model=" + to_json(model)};
  doc.columns = {"quantity", "value_bits", "ci", "n"};
  add_bound_row(doc, "lower", lo);
  add_bound_row(doc, "upper", hi);
  add_bound_row(doc, "lower_no_jammer_csi", lo_nj);
  emit(doc, g.out);
}

// ------------------------------------------------------------- dominance --

void run_dominance(const GlobalOptions& g, const PowerConfig& power) {
  const ChannelModel model = resolve_model(g);
  validate(power);
  const DominanceResult res =
      dominance_check(model, power, g.samples, RngStream{g.seed, 0});

  CsvDoc doc;
  doc.comments = {base_header("dominance", g),
                  "pt=" + fmt(power.pt) + " pj=" + fmt(power.pj),
                  "model=" + to_json(model)};
  doc.columns = {"dominated", "max_cdf_gap", "epsilon_stat", "n"};
  doc.rows.push_back({fmt(res.dominated), fmt(res.max_cdf_gap),
                      fmt(res.epsilon_stat), fmt(g.samples)});
  emit(doc, g.out);
}

// -------------------------------------------------------------- feedback --

struct FeedbackOptions {
  FeedbackScheme scheme = FeedbackScheme::mrc;
  double rate = -1.0;  // < 0: maximize over r
  std::uint64_t epochs = 20000;
  std::uint64_t t_max = 10000;
  int grid_points = 64;
};

void run_feedback(const GlobalOptions& g, const PowerConfig& power,
                  const FeedbackOptions& f) {
  const ChannelModel model = resolve_model(g);
  validate(power);
  const RngStream rng{g.seed, 0};

  CsvDoc doc;
  doc.comments = {base_header("feedback", g),
                  "pt=" + fmt(power.pt) + " pj=" + fmt(power.pj) +
                      " scheme=" + to_string(f.scheme) +
                      " epochs=" + fmt(f.epochs) + " t_max=" + fmt(f.t_max) +
                      (f.rate >= 0.0 ? " rate=" + fmt(f.rate)
                                     : " rate=maximize grid=" +
                                           fmt(std::uint64_t(f.grid_points))),
                  "model=" + to_json(model)};
  doc.columns = {"quantity", "r",  "value_bits",  "ci",
                 "n",        "mean_t", "truncation_fraction"};

  auto add_rate_row = [&](const char* name, double r, const RateEstimate& e) {
    doc.rows.push_back({name, fmt(r), fmt(e.estimate.value),
                        fmt(e.estimate.ci_halfwidth), fmt(e.estimate.n_samples),
                        fmt(e.mean_t), fmt(e.truncation_fraction)});
  };

  if (f.rate >= 0.0) {
    add_rate_row("rate_at", f.rate,
                 rate_at(model, power, f.rate, f.scheme, f.epochs, f.t_max,
                         rng.substream(1)));
  } else {
    RateSearch search;
    search.grid_points = f.grid_points;
    const RateMaximum m = maximize_rate(model, power, f.scheme, search,
                                        f.epochs, f.t_max, rng.substream(1));
    add_rate_row("max_rate", m.r_star, m.best);
  }

  const BoundEstimate up1 =
      upper_bound_1bit(model, power, g.samples, rng.substream(2));
  doc.rows.push_back({"upper_1bit", "", fmt(up1.value), fmt(up1.ci_halfwidth),
                      fmt(up1.n_samples), "", ""});
  const BoundEstimate lo =
      lower_bound(model, power, g.samples, rng.substream(3));
  doc.rows.push_back({"lower_nofeedback", "", fmt(lo.value),
                      fmt(lo.ci_halfwidth), fmt(lo.n_samples), "", ""});
  emit(doc, g.out);
}

// ----------------------------------------------------------------- multi --

void run_multi(const GlobalOptions& g, const PowerConfig& power) {
  if (g.model_path.empty())
    throw ConfigError("multi needs --model with a multi-adversary JSON file");
  const MultiModel model = load_multi_model(g.model_path);
  validate(power);
  const RngStream rng{g.seed, 0};

  CsvDoc doc;
  doc.comments = {base_header("multi", g),
                  "pt=" + fmt(power.pt) + " pj=" + fmt(power.pj),
                  "model=" + to_json(model)};
  doc.columns = {"quantity", "value_bits", "ci", "n", "s_argmin"};
  auto add = [&](const char* name, const MultiBound& b) {
    doc.rows.push_back({name, fmt(b.estimate.value),
                        fmt(b.estimate.ci_halfwidth), fmt(b.estimate.n_samples),
                        fmt(b.s_argmin)});
  };
  add("lower_noncolluding", lower_noncolluding(model, power, g.samples, rng));
  add("upper_noncolluding", upper_noncolluding(model, power, g.samples, rng));
  add("lower_colluding", lower_colluding(model, power, g.samples, rng));
  add("upper_colluding", upper_colluding(model, power, g.samples, rng));
  emit(doc, g.out);
}

// ----------------------------------------------------------------- delay --

struct DelayOptions {
  double alpha = 0.1;
  std::vector<double> gamma_grid;
  int grid_points = 64;
  KeyMode key_mode = KeyMode::no_feedback;
};

void run_delay(const GlobalOptions& g, const PowerConfig& power,
               const DelayOptions& d) {
  const ChannelModel model = resolve_model(g);
  validate(power);

  DelayConfig cfg;
  cfg.alpha = d.alpha;
  cfg.gamma_grid = d.gamma_grid;
  cfg.rate_grid_points = d.grid_points;
  cfg.key_mode = d.key_mode;
  const DelayOperatingPoint pt =
      maximize_outage_rate(model, power, cfg, g.samples, RngStream{g.seed, 0});

  CsvDoc doc;
  doc.comments = {
      base_header("delay", g),
      "pt=" + fmt(power.pt) + " pj=" + fmt(power.pj) +
          " alpha=" + fmt(d.alpha) + " key_mode=" + to_string(d.key_mode) +
          " grid_points=" + fmt(std::uint64_t(d.grid_points)) +
          " gamma_grid=" +
          (d.gamma_grid.empty() ? std::string("0:0.05:1")
                                : join(d.gamma_grid)),
      "model=" + to_json(model)};
  doc.columns = {"gamma",     "r_tilde", "r_s",        "r_key", "p_success",
                 "p_ci",      "feasible", "rate_ci",   "n"};
  doc.rows.push_back({fmt(pt.gamma), fmt(pt.r_tilde), fmt(pt.r_s),
                      fmt(pt.r_key), fmt(pt.p_success.p_success),
                      fmt(pt.p_success.ci_halfwidth), fmt(pt.feasible),
                      fmt(pt.value.ci_halfwidth), fmt(pt.p_success.n)});
  emit(doc, g.out);
}

// -------------------------------------------------------------- simulate --

struct SimulateOptions {
  std::string protocol = "arq";
  FeedbackScheme scheme = FeedbackScheme::mrc;
  double rate = 1.0;
  std::uint64_t blocks = 100000;
  std::uint64_t t_max = 10000;
  std::string adversary = "always_eavesdrop";
  std::string trace_file;
  std::string events_out;
  // delay protocol point
  double gamma = 0.0, r_tilde = 0.0, r_s = 0.0, r_key = 0.0;
  std::uint64_t m1 = 100, m2 = 100;
};

void write_events_jsonl(const SessionLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open events file: " + path);
  for (const auto& e : log.events) {
    nlohmann::ordered_json j{
        {"index", e.index},
        {"phi", e.phi},
        {"hm", e.gains.hm},
        {"he", e.gains.he},
        {"hz", e.gains.hz},
        {"transmitted", e.transmitted},
        {"main_info_eff", e.main_info_eff},
        {"leaked_info", e.leaked_info},
        {"ack", e.ack},
    };
    out << j.dump() << "\n";
  }
  if (!out) throw std::runtime_error("failed writing events file: " + path);
}

void run_simulate(const GlobalOptions& g, const PowerConfig& power,
                  const SimulateOptions& s) {
  const ChannelModel model = resolve_model(g);
  validate(power);
  const AdversaryStrategy adversary =
      s.trace_file.empty()
          ? parse_adversary(s.adversary)
          : AdversaryStrategy::explicit_trace(load_adversary_trace(s.trace_file));
  const std::string adversary_desc =
      s.trace_file.empty() ? s.adversary : "trace-file:" + s.trace_file;
  const RngStream rng{g.seed, 0};

  if (s.protocol == "delay") {
    const DelayPoint point{s.gamma, s.r_tilde, s.r_s, s.r_key};
    const DelaySessionLog log =
        run_delay_session(model, power, point, adversary, s.m1, s.m2, rng);
    CsvDoc doc;
    doc.comments = {
        base_header("simulate", g),
        "protocol=delay pt=" + fmt(power.pt) + " pj=" + fmt(power.pj) +
            " gamma=" + fmt(s.gamma) + " r_tilde=" + fmt(s.r_tilde) +
            " r_s=" + fmt(s.r_s) + " r_key=" + fmt(s.r_key) +
            " m1=" + fmt(s.m1) + " m2=" + fmt(s.m2) + " adversary=" +
            adversary_desc,
        "model=" + to_json(model)};
    doc.columns = {"superblocks",     "message_blocks", "outages",
                   "init_blocks",     "outage_fraction", "p_success",
                   "p_ci",            "final_key_balance"};
    doc.rows.push_back(
        {fmt(log.superblocks), fmt(log.message_blocks), fmt(log.outages),
         fmt(log.init_blocks), fmt(log.outage_fraction),
         fmt(log.success.p_success), fmt(log.success.ci_halfwidth),
         fmt(log.key_balance_trace.empty() ? 0.0
                                           : log.key_balance_trace.back())});
    emit(doc, g.out);
    return;
  }
  if (s.protocol != "arq")
    throw ConfigError("protocol must be arq or delay");

  ArqOptions opts;
  opts.t_max = s.t_max;
  opts.keep_events = !s.events_out.empty();
  const SessionLog log = run_arq_session(model, power, s.rate, s.scheme,
                                         adversary, s.blocks, rng, opts);
  if (!s.events_out.empty()) write_events_jsonl(log, s.events_out);

  const BoundEstimate strat = session_rate_estimate(log, LeakLedger::strategy);
  const BoundEstimate cons =
      session_rate_estimate(log, LeakLedger::conservative);

  CsvDoc doc;
  doc.comments = {base_header("simulate", g),
                  "protocol=arq pt=" + fmt(power.pt) + " pj=" + fmt(power.pj) +
                      " scheme=" + to_string(s.scheme) + " rate=" +
                      fmt(s.rate) + " blocks=" + fmt(s.blocks) + " t_max=" +
                      fmt(s.t_max) + " adversary=" + adversary_desc,
                  "model=" + to_json(model)};
  doc.columns = {"blocks",          "groups",
                 "truncations",     "incomplete_tail",
                 "empirical_rate",  "rate_ci",
                 "empirical_rate_conservative", "rate_ci_conservative"};
  doc.rows.push_back({fmt(log.total_blocks), fmt(std::uint64_t(log.groups.size())),
                      fmt(log.truncations), fmt(log.incomplete_tail),
                      fmt(log.empirical_rate), fmt(strat.ci_halfwidth),
                      fmt(log.empirical_rate_conservative),
                      fmt(cons.ci_halfwidth)});
  emit(doc, g.out);
}

// ----------------------------------------------------------------- sweep --

struct SweepOptions {
  std::vector<double> p_grid{1, 10, 100, 1000, 10000};
  double pt_coeff = 1.0, pt_exp = 1.0;
  double pj_coeff = 1.0, pj_exp = 1.0;
};

void run_sweep(const GlobalOptions& g, const SweepOptions& s) {
  const ChannelModel model = resolve_model(g);
  const ScalingSpec pt_scale{s.pt_coeff, s.pt_exp};
  const ScalingSpec pj_scale{s.pj_coeff, s.pj_exp};
  const SweepResult res = power_scaling_sweep(model, pt_scale, pj_scale,
                                              s.p_grid, g.samples,
                                              RngStream{g.seed, 0});

  CsvDoc doc;
  doc.comments = {base_header("sweep", g),
                  "pt=" + fmt(s.pt_coeff) + "*P^" + fmt(s.pt_exp) +
                      " pj=" + fmt(s.pj_coeff) + "*P^" + fmt(s.pj_exp) +
                      " p_grid=" + join(s.p_grid) +
                      " scaling_warning=" + fmt(res.scaling_warning),
                  "model=" + to_json(model)};
  doc.columns = {"p", "pt", "pj", "upper_bits", "ci", "n"};
  for (const auto& pt : res.points)
    doc.rows.push_back({fmt(pt.p), fmt(pt.pt), fmt(pt.pj), fmt(pt.upper.value),
                        fmt(pt.upper.ci_halfwidth), fmt(pt.upper.n_samples)});
  emit(doc, g.out);
}

// --------------------------------------------------------------- figures --

struct FiguresOptions {
  std::string which = "fig1";
  std::vector<double> pt_grid;  // empty = per-figure default
};

void run_figures(const GlobalOptions& g, const FiguresOptions& f) {
  const RngStream rng{g.seed, 0};
  CsvDoc doc;
  doc.columns = {"x", "series", "value_bits", "ci"};

  auto add = [&](double x, const char* series, double value, double ci) {
    doc.rows.push_back({fmt(x), series, fmt(value), fmt(ci)});
  };

  const std::uint64_t n = g.samples;
  const std::uint64_t n_renewals = std::max<std::uint64_t>(n / 5, 2000);
  const std::uint64_t n_delay = std::max<std::uint64_t>(n / 5, 10000);

  if (f.which == "fig1") {
    ChannelModel model;
    model.hm = GainDist::exponential(5.0);
    model.he = GainDist::exponential(2.0);
    model.hz = GainDist::exponential(2.0);
    const std::vector<double> grid =
        f.pt_grid.empty() ? std::vector<double>{1, 2, 5, 10, 20, 50, 100}
                          : f.pt_grid;
    doc.comments = {base_header("figures", g),
                    "which=fig1 alpha=0.2 pj=1 pt_grid=" + join(grid),
                    "model=" + to_json(model)};
    for (double pt : grid) {
      const PowerConfig power{pt, 1.0};
      const BoundEstimate lo = lower_bound(model, power, n, rng);
      add(pt, "lower_nofeedback", lo.value, lo.ci_halfwidth);
      const BoundEstimate lo1 = one_bit_lower_bound(
          model, power, RateSearch{}, n_renewals, n, rng.substream(1));
      add(pt, "lower_1bit", lo1.value, lo1.ci_halfwidth);
      const BoundEstimate up1 =
          upper_bound_1bit(model, power, n, rng.substream(2));
      add(pt, "upper_1bit", up1.value, up1.ci_halfwidth);
      DelayConfig cfg;
      cfg.alpha = 0.2;
      const DelayOperatingPoint d0 = maximize_outage_rate(
          model, power, cfg, n_delay, rng.substream(3));
      add(pt, "delay_nofeedback", d0.value.value, d0.value.ci_halfwidth);
      cfg.key_mode = KeyMode::one_bit;
      const DelayOperatingPoint d1 = maximize_outage_rate(
          model, power, cfg, n_delay, rng.substream(3));
      add(pt, "delay_1bit", d1.value.value, d1.value.ci_halfwidth);
    }
  } else if (f.which == "fig2") {
    ChannelModel model;
    model.hm = GainDist::exponential(1.0);
    model.he = GainDist::exponential(2.0);
    model.hz = GainDist::exponential(1.0);
    const std::vector<double> grid =
        f.pt_grid.empty()
            ? std::vector<double>{0.5, 1, 2, 5, 10, 20, 50, 100}
            : f.pt_grid;
    doc.comments = {base_header("figures", g),
                    "which=fig2 pj=1 pt_grid=" + join(grid),
                    "model=" + to_json(model)};
    for (double pt : grid) {
      const PowerConfig power{pt, 1.0};
      const BoundEstimate lo = lower_bound(model, power, n, rng);
      add(pt, "lower_nofeedback", lo.value, lo.ci_halfwidth);
      const BoundEstimate hi = upper_bound(model, power, n, rng);
      add(pt, "upper_nofeedback", hi.value, hi.ci_halfwidth);
      const BoundEstimate lo1 = one_bit_lower_bound(
          model, power, RateSearch{}, n_renewals, n, rng.substream(1));
      add(pt, "lower_1bit", lo1.value, lo1.ci_halfwidth);
      const BoundEstimate up1 =
          upper_bound_1bit(model, power, n, rng.substream(2));
      add(pt, "upper_1bit", up1.value, up1.ci_halfwidth);
    }
  } else {
    ChannelModel model;
    model.hm = GainDist::exponential(1.0);
    model.he = GainDist::exponential(2.0);
    model.hz = GainDist::exponential(1.0);
    const std::vector<double> grid =
        f.pt_grid.empty() ? std::vector<double>{1, 10, 100, 1000, 10000}
                          : f.pt_grid;
    doc.comments = {base_header("figures", g),
                    "which=fig3 pt=ratio*P pj=P p_grid=" + join(grid),
                    "model=" + to_json(model)};
    for (double ratio : {1.0, 10.0}) {
      const SweepResult res =
          power_scaling_sweep(model, ScalingSpec{ratio, 1.0},
                              ScalingSpec{1.0, 1.0}, grid, n, rng);
      const std::string series =
          "upper_pt" + fmt(ratio) + "x";
      for (const auto& pt : res.points)
        add(pt.p, series.c_str(), pt.upper.value, pt.upper.ci_halfwidth);
    }
  }
  emit(doc, g.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "secrecy-lab: Monte Carlo secrecy-capacity bounds for block-fading "
      "wiretap channels with a jam-or-eavesdrop adversary"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "RNG seed")->envname("SECRECY_LAB_SEED");
  app.add_option("--threads", g.threads,
                 "worker thread cap, 0 = hardware (never affects output)");
  app.add_option("--samples", g.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output CSV path (default: stdout)");
  app.add_option("--model", g.model_path, "channel model JSON file");

  PowerConfig power;
  const std::map<std::string, FeedbackScheme> scheme_map{
      {"mrc", FeedbackScheme::mrc},
      {"plain_arq", FeedbackScheme::plain_arq},
      {"main_csi", FeedbackScheme::main_csi}};
  const std::map<std::string, KeyMode> key_mode_map{
      {"no_feedback", KeyMode::no_feedback}, {"one_bit", KeyMode::one_bit}};

  auto* bounds_cmd =
      app.add_subcommand("bounds", "no-feedback secrecy-capacity bounds");
  bounds_cmd->add_option("--pt", power.pt, "transmit power");
  bounds_cmd->add_option("--pj", power.pj, "jamming power");

  auto* dominance_cmd = app.add_subcommand(
      "dominance", "stochastic-dominance zero-capacity test");
  dominance_cmd->add_option("--pt", power.pt, "transmit power");
  dominance_cmd->add_option("--pj", power.pj, "jamming power");

  FeedbackOptions fb;
  auto* feedback_cmd =
      app.add_subcommand("feedback", "1-bit feedback renewal rates");
  feedback_cmd->add_option("--pt", power.pt, "transmit power");
  feedback_cmd->add_option("--pj", power.pj, "jamming power");
  feedback_cmd->add_option("--scheme", fb.scheme, "retransmission scheme")
      ->transform(CLI::CheckedTransformer(scheme_map));
  feedback_cmd->add_option("--rate", fb.rate,
                           "decoding threshold r (omit to maximize over r)");
  feedback_cmd->add_option("--epochs", fb.epochs, "renewal epochs")
      ->check(CLI::PositiveNumber);
  feedback_cmd->add_option("--t-max", fb.t_max, "per-epoch truncation limit")
      ->check(CLI::PositiveNumber);
  feedback_cmd->add_option("--grid", fb.grid_points, "rate-scan grid points")
      ->check(CLI::PositiveNumber);

  auto* multi_cmd =
      app.add_subcommand("multi", "multi-adversary bounds (needs --model)");
  multi_cmd->add_option("--pt", power.pt, "transmit power");
  multi_cmd->add_option("--pj", power.pj, "per-adversary jamming power");

  DelayOptions dl;
  auto* delay_cmd =
      app.add_subcommand("delay", "delay-limited outage-rate maximization");
  delay_cmd->add_option("--pt", power.pt, "transmit power");
  delay_cmd->add_option("--pj", power.pj, "jamming power");
  delay_cmd->add_option("--alpha", dl.alpha, "outage budget");
  delay_cmd->add_option("--gamma-grid", dl.gamma_grid,
                        "comma-separated key-fraction grid")
      ->delimiter(',');
  delay_cmd->add_option("--grid-points", dl.grid_points, "rate grid points")
      ->check(CLI::PositiveNumber);
  delay_cmd->add_option("--key-mode", dl.key_mode, "key generation mode")
      ->transform(CLI::CheckedTransformer(key_mode_map));

  SimulateOptions sim;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "block-level protocol session");
  simulate_cmd->add_option("--pt", power.pt, "transmit power");
  simulate_cmd->add_option("--pj", power.pj, "jamming power");
  simulate_cmd->add_option("--protocol", sim.protocol, "arq or delay")
      ->check(CLI::IsMember({"arq", "delay"}));
  simulate_cmd->add_option("--scheme", sim.scheme, "retransmission scheme")
      ->transform(CLI::CheckedTransformer(scheme_map));
  simulate_cmd->add_option("--rate", sim.rate, "decoding threshold r");
  simulate_cmd->add_option("--blocks", sim.blocks, "channel blocks")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--t-max", sim.t_max, "per-group truncation limit")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option(
      "--adversary", sim.adversary,
      "always_eavesdrop | always_jam | bernoulli:<p> | periodic:<k> | "
      "trace:<bits>");
  simulate_cmd->add_option("--trace-file", sim.trace_file,
                           "0/1 switch trace file (overrides --adversary)");
  simulate_cmd->add_option("--events-out", sim.events_out,
                           "write per-block events as JSON lines");
  simulate_cmd->add_option("--gamma", sim.gamma, "delay: key fraction");
  simulate_cmd->add_option("--r-tilde", sim.r_tilde, "delay: message rate");
  simulate_cmd->add_option("--r-s", sim.r_s, "delay: secrecy rate");
  simulate_cmd->add_option("--r-key", sim.r_key, "delay: key rate");
  simulate_cmd->add_option("--m1", sim.m1, "delay: blocks per superblock")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--m2", sim.m2, "delay: superblocks")
      ->check(CLI::PositiveNumber);

  SweepOptions sw;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "power-scaling sweep of the upper bound");
  sweep_cmd->add_option("--p-grid", sw.p_grid, "comma-separated P grid")
      ->delimiter(',');
  sweep_cmd->add_option("--pt-coeff", sw.pt_coeff, "pt = coeff * P^exp");
  sweep_cmd->add_option("--pt-exp", sw.pt_exp, "pt exponent");
  sweep_cmd->add_option("--pj-coeff", sw.pj_coeff, "pj = coeff * P^exp");
  sweep_cmd->add_option("--pj-exp", sw.pj_exp, "pj exponent");

  FiguresOptions fig;
  auto* figures_cmd =
      app.add_subcommand("figures", "regenerate figure data series");
  figures_cmd->add_option("--which", fig.which, "fig1 | fig2 | fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  figures_cmd->add_option("--pt-grid", fig.pt_grid,
                          "comma-separated power grid override")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  parallel::set_max_threads(g.threads);

  try {
    if (*bounds_cmd)
      run_bounds(g, power);
    else if (*dominance_cmd)
      run_dominance(g, power);
    else if (*feedback_cmd)
      run_feedback(g, power, fb);
    else if (*multi_cmd)
      run_multi(g, power);
    else if (*delay_cmd)
      run_delay(g, power, dl);
    else if (*simulate_cmd)
      run_simulate(g, power, sim);
    else if (*sweep_cmd)
      run_sweep(g, sw);
    else if (*figures_cmd)
      run_figures(g, fig);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const UnreachableThresholdError& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
