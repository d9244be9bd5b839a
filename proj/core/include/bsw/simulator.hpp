#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "bsw/network.hpp"

namespace bsw {

struct SimConfig {
  std::size_t n_messages = 1000;
  /// Per-message cutoff in seconds; defaults to 50 x the largest mean.
  std::optional<double> horizon;
  std::uint64_t seed = 1;
  /// Worker threads, 0 for hardware concurrency.
  unsigned threads = 0;
};

struct MessageOutcome {
  bool delivered = false;
  std::optional<double> delay;
  /// Copies the source handed to relays before the message ended.
  std::size_t copies_spent = 0;

  bool operator==(const MessageOutcome&) const = default;
};

struct ContactEvent {
  double time = 0.0;
  NodeId i = 0;
  NodeId j = 0;

  bool operator==(const ContactEvent&) const = default;
};

/// Called after every copy transfer with the per-node copy counts.
using TransferObserver = std::function<void(
    std::size_t message, double time, std::span<const std::size_t> copies)>;

/// Generator for replication `index`: mt19937_64 seeded through
/// std::seed_seq{lo(master), hi(master), lo(index), hi(index)}.
std::mt19937_64 replication_engine(std::uint64_t master, std::uint64_t index);

double effective_horizon(const NetworkSpec& spec, const SimConfig& cfg);

/// Runs cfg.n_messages independent replications of binary spray and wait over
/// fresh Poisson contact processes. Outcome i depends only on (spec, seed, i).
/// An observer forces single-threaded execution.
std::vector<MessageOutcome> simulate(const NetworkSpec& spec,
                                     const SimConfig& cfg,
                                     const TransferObserver& observer = {});

/// Contacts of replication 0 up to the horizon, in processing order.
std::vector<ContactEvent> replay_trace(const NetworkSpec& spec,
                                       const SimConfig& cfg);

/// "t=<seconds> i=<node> j=<node>" per line, one-based nodes.
void write_trace(std::ostream& os, std::span<const ContactEvent> events);
/// "msg_id,delivered,delay_s" CSV.
void write_outcomes(std::ostream& os, std::span<const MessageOutcome> outcomes);

/// Delays of the delivered messages, in message order.
std::vector<double> delivered_delays(std::span<const MessageOutcome> outcomes);

}  // namespace bsw
