#include "bsw/simulator.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace bsw {
namespace {

struct Pair {
  NodeId i;
  NodeId j;
  double rate;
};

struct Pending {
  double time;
  std::size_t pair;
  // Min-heap on (time, pair).
  bool operator>(const Pending& o) const {
    return time != o.time ? time > o.time : pair > o.pair;
  }
};

class ContactProcess {
 public:
  ContactProcess(const std::vector<Pair>& pairs, std::mt19937_64& rng)
      : pairs_(pairs), rng_(rng) {
    for (std::size_t p = 0; p < pairs_.size(); ++p) schedule(p, 0.0);
  }

  bool empty() const { return queue_.empty(); }
  double next_time() const { return queue_.top().time; }

  const Pair& pop(double& time) {
    const auto top = queue_.top();
    queue_.pop();
    time = top.time;
    schedule(top.pair, top.time);
    return pairs_[top.pair];
  }

 private:
  void schedule(std::size_t p, double now) {
    std::exponential_distribution<double> gap(pairs_[p].rate);
    queue_.push({now + gap(rng_), p});
  }

  const std::vector<Pair>& pairs_;
  std::mt19937_64& rng_;
  std::priority_queue<Pending, std::vector<Pending>, std::greater<>> queue_;
};

std::vector<Pair> contact_pairs(const ContactRateView& view) {
  std::vector<Pair> pairs;
  for (NodeId i = 0; i < view.node_count(); ++i)
    for (NodeId j = i + 1; j < view.node_count(); ++j)
      if (double r = view.rate(i, j); r > 0.0) pairs.push_back({i, j, r});
  return pairs;
}

// True when no future contact can change the outcome: no holder meets the
// destination and no multi-copy holder meets a copy-less relay.
bool stuck(const ContactRateView& view, const std::vector<std::size_t>& copies) {
  const NodeId dest = view.destination();
  for (NodeId h = 0; h < copies.size(); ++h) {
    if (copies[h] == 0) continue;
    for (NodeId u : view.neighbours(h)) {
      if (u == dest) return false;
      if (copies[h] > 1 && copies[u] == 0) return false;
    }
  }
  return true;
}

MessageOutcome run_message(const ContactRateView& view,
                           const std::vector<Pair>& pairs, double horizon,
                           std::uint64_t seed, std::size_t message,
                           const TransferObserver& observer) {
  auto rng = replication_engine(seed, message);
  const std::size_t total = view.replication_factor();
  const NodeId src = view.source();
  const NodeId dest = view.destination();
  std::vector<std::size_t> copies(view.node_count(), 0);
  copies[src] = total;

  MessageOutcome outcome;
  auto finish = [&] {
    outcome.copies_spent = total - copies[src];
    return outcome;
  };
  if (pairs.empty() || stuck(view, copies)) return finish();

  ContactProcess contacts(pairs, rng);
  while (contacts.next_time() <= horizon) {
    double t = 0.0;
    const Pair& c = contacts.pop(t);
    if (c.i == dest || c.j == dest) {
      const NodeId other = c.i == dest ? c.j : c.i;
      if (copies[other] > 0) {
        outcome.delivered = true;
        outcome.delay = t;
        return finish();
      }
      continue;
    }
    NodeId giver = c.i, taker = c.j;
    if (copies[giver] < copies[taker]) std::swap(giver, taker);
    if (copies[giver] <= 1 || copies[taker] != 0) continue;
    const std::size_t half = copies[giver] / 2;
    copies[giver] -= half;
    copies[taker] += half;

    std::size_t sum = 0;
    for (auto c : copies) sum += c;
    if (sum != total)
      throw std::logic_error("simulate: copy conservation violated");
    if (observer) observer(message, t, copies);
    if (stuck(view, copies)) break;
  }
  return finish();
}

}  // namespace

std::mt19937_64 replication_engine(std::uint64_t master, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master),
                    static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double effective_horizon(const NetworkSpec& spec, const SimConfig& cfg) {
  if (cfg.horizon) {
    if (!(*cfg.horizon > 0.0))
      throw std::invalid_argument("horizon: must be positive");
    return *cfg.horizon;
  }
  double max_mean = 0.0;
  for (const auto& [pair, mean] : spec.mean_intercontact)
    max_mean = std::max(max_mean, mean);
  return max_mean > 0.0 ? 50.0 * max_mean : 1.0;
}

std::vector<MessageOutcome> simulate(const NetworkSpec& spec,
                                     const SimConfig& cfg,
                                     const TransferObserver& observer) {
  if (cfg.n_messages == 0)
    throw std::invalid_argument("n_messages: must be at least 1");
  const auto view = validate_spec(spec);
  const double horizon = effective_horizon(spec, cfg);
  const auto pairs = contact_pairs(view);

  std::vector<MessageOutcome> outcomes(cfg.n_messages);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t m = begin; m < end; ++m)
      outcomes[m] = run_message(view, pairs, horizon, cfg.seed, m, observer);
  };

  unsigned workers = cfg.threads ? cfg.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  if (observer) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, cfg.n_messages));
  if (workers <= 1) {
    run_range(0, cfg.n_messages);
    return outcomes;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (cfg.n_messages + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(cfg.n_messages, begin + chunk);
    if (begin < end) pool.emplace_back(run_range, begin, end);
  }
  return outcomes;
}

std::vector<ContactEvent> replay_trace(const NetworkSpec& spec,
                                       const SimConfig& cfg) {
  const auto view = validate_spec(spec);
  const double horizon = effective_horizon(spec, cfg);
  const auto pairs = contact_pairs(view);
  std::vector<ContactEvent> events;
  if (pairs.empty()) return events;
  auto rng = replication_engine(cfg.seed, 0);
  ContactProcess contacts(pairs, rng);
  while (contacts.next_time() <= horizon) {
    double t = 0.0;
    const Pair& c = contacts.pop(t);
    events.push_back({t, c.i, c.j});
  }
  return events;
}

void write_trace(std::ostream& os, std::span<const ContactEvent> events) {
  for (const auto& e : events)
    os << fmt::format("t={} i={} j={}\n", e.time, e.i + 1, e.j + 1);
}

void write_outcomes(std::ostream& os,
                    std::span<const MessageOutcome> outcomes) {
  os << "msg_id,delivered,delay_s\n";
  for (std::size_t m = 0; m < outcomes.size(); ++m) {
    const auto& o = outcomes[m];
    if (o.delivered)
      os << fmt::format("{},1,{}\n", m, *o.delay);
    else
      os << fmt::format("{},0,\n", m);
  }
}

std::vector<double> delivered_delays(std::span<const MessageOutcome> outcomes) {
  std::vector<double> delays;
  for (const auto& o : outcomes)
    if (o.delivered) delays.push_back(*o.delay);
  return delays;
}

}  // namespace bsw
