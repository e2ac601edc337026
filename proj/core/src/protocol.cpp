#include "secrecy/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "secrecy/errors.hpp"

namespace secrecy {

AdversaryStrategy AdversaryStrategy::always_eavesdrop() {
  AdversaryStrategy s;
  s.kind = Kind::always_eavesdrop;
  return s;
}

AdversaryStrategy AdversaryStrategy::always_jam() {
  AdversaryStrategy s;
  s.kind = Kind::always_jam;
  return s;
}

AdversaryStrategy AdversaryStrategy::bernoulli(double jam_prob) {
  if (!(jam_prob >= 0.0 && jam_prob <= 1.0))
    throw ConfigError("jam probability must lie in [0,1]");
  AdversaryStrategy s;
  s.kind = Kind::bernoulli;
  s.jam_prob = jam_prob;
  return s;
}

AdversaryStrategy AdversaryStrategy::periodic(std::uint64_t jam_every) {
  if (jam_every == 0)
    throw ConfigError("periodic strategy needs a period >= 1");
  AdversaryStrategy s;
  s.kind = Kind::periodic;
  s.jam_every = jam_every;
  return s;
}

AdversaryStrategy AdversaryStrategy::explicit_trace(std::vector<int> trace) {
  if (trace.empty()) throw ConfigError("adversary trace must not be empty");
  for (int v : trace)
    if (v != 0 && v != 1)
      throw ConfigError("adversary trace entries must be 0 or 1");
  AdversaryStrategy s;
  s.kind = Kind::explicit_trace;
  s.trace = std::move(trace);
  return s;
}

int AdversaryStrategy::phi(std::uint64_t block, const RngStream& phi_rng) const {
  switch (kind) {
    case Kind::always_eavesdrop:
      return 0;
    case Kind::always_jam:
      return 1;
    case Kind::bernoulli:
      return phi_rng.uniform(block) < jam_prob ? 1 : 0;
    case Kind::periodic:
      return block % jam_every == jam_every - 1 ? 1 : 0;
    case Kind::explicit_trace:
      if (block >= trace.size())
        throw ConfigError("adversary trace is shorter than the session");
      return trace[block];
  }
  return 0;
}

std::uint64_t AdversaryStrategy::max_blocks() const {
  return kind == Kind::explicit_trace
             ? trace.size()
             : std::numeric_limits<std::uint64_t>::max();
}

const char* to_string(AdversaryStrategy::Kind kind) {
  switch (kind) {
    case AdversaryStrategy::Kind::always_eavesdrop:
      return "always_eavesdrop";
    case AdversaryStrategy::Kind::always_jam:
      return "always_jam";
    case AdversaryStrategy::Kind::bernoulli:
      return "bernoulli";
    case AdversaryStrategy::Kind::periodic:
      return "periodic";
    case AdversaryStrategy::Kind::explicit_trace:
      return "explicit_trace";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kGainsTag = 0x6A15;
constexpr std::uint64_t kPhiTag = 0x0F1B;

double group_reward(double rate, double sum_leaked, const PowerConfig& power) {
  return std::max(rate - std::log2(1.0 + power.pt * sum_leaked), 0.0);
}

}  // namespace

SessionLog run_arq_session(const ChannelModel& model, const PowerConfig& power,
                           double r, FeedbackScheme scheme,
                           const AdversaryStrategy& adversary,
                           std::uint64_t m_blocks, const RngStream& rng,
                           const ArqOptions& options) {
  validate(power);
  if (!(r > 0.0) || !std::isfinite(r))
    throw ConfigError("decoding threshold must be finite and > 0");
  if (m_blocks == 0) throw ConfigError("session needs at least one block");
  if (options.t_max == 0) throw ConfigError("t_max must be >= 1");
  if (adversary.max_blocks() < m_blocks)
    throw ConfigError("adversary trace is shorter than the session");

  const RngStream gains = rng.substream(kGainsTag);
  const RngStream phis = rng.substream(kPhiTag);

  SessionLog log;
  if (options.keep_events) log.events.reserve(m_blocks);

  std::uint64_t t = 0;
  double snr_sum = 0.0;    // mrc combiner state
  double sum_strat = 0.0;  // strategy-ledger eavesdropper gain
  double sum_cons = 0.0;   // conservative-ledger eavesdropper gain

  auto close_group = [&](bool truncated) {
    GroupRecord rec;
    rec.t = t;
    rec.sum_leaked = sum_strat;
    rec.sum_leaked_conservative = sum_cons;
    if (!truncated) {
      rec.secure_bits = group_reward(r, sum_strat, power);
      rec.secure_bits_conservative = group_reward(r, sum_cons, power);
    }
    rec.truncated = truncated;
    log.groups.push_back(rec);
    log.total_blocks += t;
    if (truncated) ++log.truncations;
    t = 0;
    snr_sum = 0.0;
    sum_strat = 0.0;
    sum_cons = 0.0;
  };

  for (std::uint64_t block = 0; block < m_blocks; ++block) {
    const GainSample g = draw_gain_sample(model, gains, block);
    const int phi = adversary.phi(block, phis);
    ++t;

    bool transmitted = true;
    bool ack = false;
    double eff = 0.0;
    double leaked = 0.0;

    switch (scheme) {
      case FeedbackScheme::mrc: {
        // The receiver levels the channel (self-noise on eavesdropped
        // blocks), so the decoder ledger runs at the jammed rate throughout.
        eff = main_info(g, power);
        snr_sum += power.pt * g.hm / (1.0 + power.pj * g.hz);
        ack = std::log2(1.0 + snr_sum) >= r;
        sum_cons += g.he;
        if (phi == 0) {
          sum_strat += g.he;
          leaked = eaves_info(g, power);
        }
        break;
      }
      case FeedbackScheme::plain_arq: {
        eff = main_info(g, power);
        ack = eff >= r;
        sum_cons += g.he;
        if (phi == 0) {
          sum_strat += g.he;
          leaked = eaves_info(g, power);
        }
        break;
      }
      case FeedbackScheme::main_csi: {
        // Transmit only when the unjammed main channel supports the rate; a
        // retransmission then implies the block was jammed, so only the
        // final (acknowledged) block can leak the group's codeword.
        transmitted = std::log2(1.0 + power.pt * g.hm) >= r;
        if (transmitted) {
          eff = std::log2(1.0 + power.pt * g.hm /
                                    (1.0 + power.pj * g.hz * double(phi)));
          ack = eff >= r;
          sum_cons = g.he;
          if (phi == 0) {
            sum_strat = g.he;
            leaked = eaves_info(g, power);
          } else {
            sum_strat = 0.0;
          }
        }
        break;
      }
    }

    if (options.keep_events)
      log.events.push_back(
          BlockEvent{block, phi, g, transmitted, eff, leaked, ack});

    if (ack)
      close_group(false);
    else if (t == options.t_max)
      close_group(true);
  }

  log.incomplete_tail = t > 0;

  CompensatedSum bits_strat, bits_cons;
  for (const auto& grp : log.groups) {
    bits_strat.add(grp.secure_bits);
    bits_cons.add(grp.secure_bits_conservative);
  }
  if (log.total_blocks > 0) {
    log.empirical_rate = bits_strat.value() / double(log.total_blocks);
    log.empirical_rate_conservative =
        bits_cons.value() / double(log.total_blocks);
  }
  return log;
}

double empirical_secure_rate(const SessionLog& log) {
  return log.empirical_rate;
}

BoundEstimate session_rate_estimate(const SessionLog& log, LeakLedger ledger) {
  RatioAccum acc;
  for (const auto& grp : log.groups) {
    const double w = ledger == LeakLedger::strategy
                         ? grp.secure_bits
                         : grp.secure_bits_conservative;
    acc.add(w, double(grp.t));
  }
  if (acc.count == 0) return BoundEstimate{0.0, 0.0, 0, BoundKind::lower};
  return BoundEstimate{acc.ratio(), acc.ci95(), acc.count, BoundKind::lower};
}

DelaySessionLog run_delay_session(const ChannelModel& model,
                                  const PowerConfig& power,
                                  const DelayPoint& point,
                                  const AdversaryStrategy& adversary,
                                  std::uint64_t m1, std::uint64_t m2,
                                  const RngStream& rng) {
  validate(power);
  if (!(point.gamma >= 0.0 && point.gamma <= 1.0))
    throw ConfigError("gamma must lie in [0,1]");
  if (!(point.r_tilde >= 0.0) || !(point.r_s >= 0.0) || !(point.r_key >= 0.0))
    throw ConfigError("rates must be >= 0");
  if (point.r_s > point.r_tilde)
    throw ConfigError("secrecy rate r_s cannot exceed the message rate r_tilde");
  if (m1 == 0) throw ConfigError("superblock length must be >= 1");
  if (m2 == 0) throw ConfigError("need at least one superblock");
  if (adversary.max_blocks() < m1 * m2)
    throw ConfigError("adversary trace is shorter than the session");

  const RngStream gains = rng.substream(kGainsTag);
  const RngStream phis = rng.substream(kPhiTag);
  const double scale = 1.0 - point.gamma;
  const double need = point.r_s - point.r_key;

  DelaySessionLog log;
  log.superblocks = m2;
  log.key_balance_trace.reserve(m2);
  KeyBank bank;

  for (std::uint64_t sb = 0; sb < m2; ++sb) {
    for (std::uint64_t j = 0; j < m1; ++j) {
      const std::uint64_t block = sb * m1 + j;
      const GainSample g = draw_gain_sample(model, gains, block);
      const int phi = adversary.phi(block, phis);

      if (sb == 0) {
        // Initialization superblock: the bank is still empty, so message
        // transmission is skipped and these blocks are outages by
        // convention, excluded from the headline frequency.
        ++log.init_blocks;
        continue;
      }

      ++log.message_blocks;
      bool success = false;
      if (point.gamma < 1.0) {
        const bool have_key =
            point.r_key <= 0.0 || bank.try_withdraw(point.r_key);
        const double m_eff =
            scale * std::log2(1.0 + power.pt * g.hm /
                                        (1.0 + power.pj * g.hz * double(phi)));
        const bool event1 = m_eff >= point.r_tilde;
        bool event2 = true;  // a jamming adversary hears nothing
        if (phi == 0 && need > 0.0)
          event2 = scale * eaves_info(g, power) <= point.r_tilde - need;
        success = have_key && event1 && event2;
      }
      if (!success) ++log.outages;
    }
    bank.deposit(double(m1) * point.r_key);
    log.key_balance_trace.push_back(bank.balance);
  }

  if (log.message_blocks > 0) {
    log.outage_fraction = double(log.outages) / double(log.message_blocks);
    const double p = 1.0 - log.outage_fraction;
    log.success = OutageEstimate{
        p,
        1.959963984540054 *
            std::sqrt(p * (1.0 - p) / double(log.message_blocks)),
        log.message_blocks};
  }
  return log;
}

}  // namespace secrecy
