#include "bsw/heterogeneous.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "bsw/errors.hpp"

namespace bsw {

CopyMatrix::CopyMatrix(std::vector<Holding> holdings, std::size_t total_copies,
                       NodeId destination)
    : holdings_(std::move(holdings)) {
  std::sort(holdings_.begin(), holdings_.end());
  for (std::size_t i = 0; i < holdings_.size(); ++i) {
    if (i > 0 && holdings_[i].node == holdings_[i - 1].node)
      throw ConfigError("CopyMatrix: node " +
                        std::to_string(holdings_[i].node + 1) +
                        " listed twice");
    if (holdings_[i].node == destination)
      throw ConfigError("CopyMatrix: destination cannot hold copies");
    if (holdings_[i].exponent < 0 || holdings_[i].exponent > 62)
      throw ConfigError("CopyMatrix: exponent out of range");
  }
  if (total() != total_copies)
    throw ConfigError("CopyMatrix: holds " + std::to_string(total()) +
                      " copies, expected " + std::to_string(total_copies));
}

std::size_t CopyMatrix::holders_at(int exponent) const {
  return static_cast<std::size_t>(
      std::count_if(holdings_.begin(), holdings_.end(),
                    [&](const Holding& h) { return h.exponent == exponent; }));
}

int CopyMatrix::exponent_of(NodeId node) const {
  for (const auto& h : holdings_)
    if (h.node == node) return h.exponent;
  return -1;
}

std::uint64_t CopyMatrix::total() const {
  std::uint64_t sum = 0;
  for (const auto& h : holdings_) sum += std::uint64_t{1} << h.exponent;
  return sum;
}

std::string CopyMatrix::label() const {
  std::string out = "{";
  for (std::size_t i = 0; i < holdings_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(holdings_[i].node + 1) + ":" +
           std::to_string(std::uint64_t{1} << holdings_[i].exponent);
  }
  return out + "}";
}

CopyPartition collapse(const CopyMatrix& state, int k) {
  CopyPartition p{std::vector<std::uint32_t>(k + 1, 0)};
  for (const auto& h : state.holdings()) {
    if (h.exponent > k)
      throw std::invalid_argument("collapse: exponent above k");
    ++p.counts[h.exponent];
  }
  return p;
}

struct HeterogeneousBuilder {
  const ContactRateView& view;
  const BuildLimits& limits;

  // Node-indexed exponent+1 bytes, 0 for non-holders.
  static std::string key(const CopyMatrix& s, std::size_t n) {
    std::string k(n, '\0');
    for (const auto& h : s.holdings_)
      k[h.node] = static_cast<char>(h.exponent + 1);
    return k;
  }

  static CopyMatrix spray(const CopyMatrix& s, std::size_t giver, NodeId to) {
    CopyMatrix next = s;
    const int m = next.holdings_[giver].exponent - 1;
    next.holdings_[giver].exponent = m;
    auto pos = std::lower_bound(next.holdings_.begin(), next.holdings_.end(),
                                CopyMatrix::Holding{to, -1});
    next.holdings_.insert(pos, {to, m});
    return next;
  }

  HeterogeneousChain run() {
    const std::size_t n = view.node_count();
    const NodeId dest = view.destination();
    const std::size_t copies = view.replication_factor();

    HeterogeneousChain out;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> spray_edges;
    std::vector<double> spray_rates;
    std::vector<double> absorb_rates;

    out.states.emplace_back(
        std::vector<CopyMatrix::Holding>{{view.source(), view.copy_exponent()}},
        copies, dest);
    index.emplace(key(out.states[0], n), 0);

    for (std::size_t s = 0; s < out.states.size(); ++s) {
      // Copy: out.states grows while we iterate.
      const CopyMatrix state = out.states[s];
      if (state.total() != copies)
        throw std::logic_error("heterogeneous state violates copy conservation");

      double absorb = 0.0;
      for (const auto& h : state.holdings_) absorb += view.rate(h.node, dest);
      absorb_rates.push_back(absorb);

      for (std::size_t g = 0; g < state.holdings_.size(); ++g) {
        const auto& giver = state.holdings_[g];
        if (giver.exponent < 1) continue;
        for (NodeId u : view.neighbours(giver.node)) {
          if (u == dest || state.exponent_of(u) >= 0) continue;
          auto next = spray(state, g, u);
          auto [it, inserted] = index.emplace(key(next, n), out.states.size());
          if (inserted) {
            if (out.states.size() + 2 > limits.max_states)
              throw CeilingError("heterogeneous state count exceeds the ceiling " +
                                 std::to_string(limits.max_states));
            out.states.push_back(std::move(next));
          }
          spray_edges.emplace_back(s, it->second);
          spray_rates.push_back(view.rate(giver.node, u));
        }
      }
    }

    const std::size_t absorbing = out.states.size();
    std::vector<Transition> transitions;
    transitions.reserve(spray_edges.size() + absorbing);
    for (std::size_t e = 0; e < spray_edges.size(); ++e)
      transitions.push_back(
          {spray_edges[e].first, spray_edges[e].second, spray_rates[e]});
    for (std::size_t s = 0; s < absorbing; ++s)
      if (absorb_rates[s] > 0.0)
        transitions.push_back({s, absorbing, absorb_rates[s]});

    std::vector<std::string> labels;
    labels.reserve(absorbing + 1);
    for (const auto& st : out.states) labels.push_back(st.label());
    labels.emplace_back("ABS");
    out.chain =
        AbsorbingChain(std::move(labels), std::move(transitions), absorbing, 0);
    return out;
  }
};

HeterogeneousChain build_heterogeneous_chain(const ContactRateView& view,
                                             const BuildLimits& limits) {
  if (view.copy_exponent() > kMaxHeterogeneousExponent)
    throw CeilingError("L: " + std::to_string(view.replication_factor()) +
                       " copies exceed the heterogeneous ceiling " +
                       std::to_string(1 << kMaxHeterogeneousExponent));
  if (view.node_count() > kMaxHeterogeneousNodes)
    throw CeilingError("n: " + std::to_string(view.node_count()) +
                       " nodes exceed the heterogeneous ceiling " +
                       std::to_string(kMaxHeterogeneousNodes));
  return HeterogeneousBuilder{view, limits}.run();
}

std::uint64_t count_states_L4(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("count_states_L4: n < 3");
  // (n-2)(6 + (n-3)(4n-7)) is always divisible by 6.
  return 2 + (n - 2) * (6 + (n - 3) * (4 * n - 7)) / 6;
}

}  // namespace bsw
