#pragma once

#include <cstdint>
#include <vector>

#include "secrecy/channel.hpp"
#include "secrecy/delay.hpp"
#include "secrecy/dist.hpp"
#include "secrecy/estimate.hpp"
#include "secrecy/feedback.hpp"
#include "secrecy/rng.hpp"

namespace secrecy {

// Per-block adversary behaviour: phi = 1 jams the legitimate link, phi = 0
// eavesdrops.  A block can leak only when phi = 0 and jamming degrades the
// main channel only when phi = 1 (half-duplex: never both).
struct AdversaryStrategy {
  enum class Kind : std::uint8_t {
    always_eavesdrop,
    always_jam,
    bernoulli,
    periodic,
    explicit_trace,
  };

  Kind kind = Kind::always_eavesdrop;
  double jam_prob = 0.0;        // bernoulli
  std::uint64_t jam_every = 0;  // periodic: jam every k-th block
  std::vector<int> trace;       // explicit trace; must cover the session

  static AdversaryStrategy always_eavesdrop();
  static AdversaryStrategy always_jam();
  static AdversaryStrategy bernoulli(double jam_prob);
  static AdversaryStrategy periodic(std::uint64_t jam_every);
  static AdversaryStrategy explicit_trace(std::vector<int> trace);

  // Switch value for a global block index; `phi_rng` is consumed only by the
  // bernoulli kind (counter = block index, so strategies are replayable).
  // Throws ConfigError when an explicit trace is shorter than the index.
  int phi(std::uint64_t block, const RngStream& phi_rng) const;

  // Largest session this strategy can drive (trace length; no limit otherwise).
  std::uint64_t max_blocks() const;
};

const char* to_string(AdversaryStrategy::Kind kind);

// Which leakage bookkeeping a rate estimate uses.  The strategy ledger
// charges only blocks the adversary actually overheard (phi = 0); the
// conservative ledger charges every block an eavesdropper could have heard,
// matching the worst-case accounting of the closed-form bounds.
enum class LeakLedger : std::uint8_t { strategy, conservative };

struct BlockEvent {
  std::uint64_t index = 0;     // global block index
  int phi = 0;                 // 1 = jammed, 0 = eavesdropped
  GainSample gains{};
  bool transmitted = true;     // main_csi keeps silent on weak main gains
  double main_info_eff = 0.0;  // rate credited to the decoder this block
  double leaked_info = 0.0;    // eavesdropper rate; nonzero only when phi = 0
  bool ack = false;            // message group completed at this block
};

struct GroupRecord {
  std::uint64_t t = 0;                // blocks consumed by the group
  double sum_leaked = 0.0;            // eavesdropper gain sum, strategy ledger
  double sum_leaked_conservative = 0.0;  // worst-case (always-eavesdrop) ledger
  double secure_bits = 0.0;               // strategy ledger reward
  double secure_bits_conservative = 0.0;  // worst-case ledger reward
  bool truncated = false;             // hit t_max before an ack
};

struct ArqOptions {
  std::uint64_t t_max = 10000;  // per-group truncation limit
  bool keep_events = false;     // record the per-block trace
};

struct SessionLog {
  std::vector<BlockEvent> events;   // filled only when keep_events
  std::vector<GroupRecord> groups;  // complete and t_max-truncated groups
  std::uint64_t total_blocks = 0;   // blocks consumed by recorded groups
  std::uint64_t truncations = 0;    // groups cut off at t_max
  bool incomplete_tail = false;     // session ended mid-group
  double empirical_rate = 0.0;      // strategy ledger, bits per block
  double empirical_rate_conservative = 0.0;  // worst-case ledger, bits/block
};

// Runs a feedback retransmission session over m_blocks channel blocks against
// the given adversary.  Gains and the bernoulli switch use independent
// substreams of `rng`.
SessionLog run_arq_session(const ChannelModel& model, const PowerConfig& power,
                           double r, FeedbackScheme scheme,
                           const AdversaryStrategy& adversary,
                           std::uint64_t m_blocks, const RngStream& rng,
                           const ArqOptions& options = {});

// Headline realized secure rate: group rewards under the strategy ledger per
// channel block.  Zero for an empty log.
double empirical_secure_rate(const SessionLog& log);

// Renewal-reward rate over the recorded groups with a delta-method interval.
BoundEstimate session_rate_estimate(const SessionLog& log,
                                    LeakLedger ledger = LeakLedger::strategy);

// Secret-key buffer with nonnegative balance; withdrawals that would
// overdraw (beyond a rounding allowance) are refused.
struct KeyBank {
  double balance = 0.0;

  void deposit(double bits) { balance += bits; }

  bool try_withdraw(double bits) {
    if (balance < bits - 1e-9 * (1.0 + bits)) return false;
    balance -= bits;
    if (balance < 0.0) balance = 0.0;
    return true;
  }
};

struct DelayPoint {
  double gamma = 0.0;    // fraction of each block carrying key material
  double r_tilde = 0.0;  // transmitted message rate, bits per block
  double r_s = 0.0;      // secrecy rate, bits per block
  double r_key = 0.0;    // key bits generated and spent per block
};

struct DelaySessionLog {
  std::uint64_t superblocks = 0;
  std::uint64_t message_blocks = 0;  // counted blocks (first superblock excluded)
  std::uint64_t outages = 0;         // among counted blocks
  std::uint64_t init_blocks = 0;     // first-superblock blocks, outages by convention
  double outage_fraction = 0.0;
  OutageEstimate success{};               // 1 - outage_fraction, Wald interval
  std::vector<double> key_balance_trace;  // bank balance after each superblock
};

// Runs the delayed key-padding protocol over m2 superblocks of m1 blocks
// each: key material banked at superblock boundaries is spent r_key per
// message block of the next superblock.  The first superblock only
// initializes the bank; its blocks are outages by convention and excluded
// from the headline frequency.  A key underflow counts as an outage.
DelaySessionLog run_delay_session(const ChannelModel& model,
                                  const PowerConfig& power,
                                  const DelayPoint& point,
                                  const AdversaryStrategy& adversary,
                                  std::uint64_t m1, std::uint64_t m2,
                                  const RngStream& rng);

}  // namespace secrecy
