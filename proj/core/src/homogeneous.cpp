#include "bsw/homogeneous.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "bsw/errors.hpp"

namespace bsw {
namespace {

std::vector<std::string> labels_for(const std::vector<CopyPartition>& parts) {
  std::vector<std::string> labels;
  labels.reserve(parts.size() + 1);
  for (const auto& p : parts) labels.push_back(p.label());
  labels.emplace_back("ABS");
  return labels;
}

}  // namespace

HomogeneousChain build_homogeneous_chain(std::size_t nodes, double rate, int k,
                                         const BuildLimits& limits) {
  if (nodes < 2) throw ConfigError("n: network needs at least 2 nodes");
  if (!(rate > 0.0)) throw ConfigError("mean: contact rate must be positive");
  if (k < 0) throw ConfigError("L: negative copy exponent");
  if (k > kMaxEnumerationExponent)
    throw CeilingError("L: 2^" + std::to_string(k) +
                       " copies exceed the homogeneous ceiling 2^" +
                       std::to_string(kMaxEnumerationExponent));

  const auto all = enumerate_partitions(k);
  if (all.size() + 1 > limits.max_states)
    throw CeilingError("state count " + std::to_string(all.size() + 1) +
                       " exceeds the ceiling " +
                       std::to_string(limits.max_states));

  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].counts, i);

  const auto n = static_cast<double>(nodes);
  const std::uint64_t copies = std::uint64_t{1} << k;
  struct Edge {
    std::size_t to;
    double rate;
  };
  std::vector<std::vector<Edge>> spray(all.size());
  for (std::size_t s = 0; s < all.size(); ++s) {
    const auto& a = all[s].counts;
    const double holders = static_cast<double>(all[s].holders());
    const double receivers = n - holders - 1.0;
    if (receivers <= 0.0) continue;
    for (int m = 1; m <= k; ++m) {
      if (a[m] == 0) continue;
      auto b = a;
      b[m] -= 1;
      b[m - 1] += 2;
      if (CopyPartition{b}.total() != copies)
        throw std::logic_error("spray transition violates copy conservation");
      spray[s].push_back({index.at(b), a[m] * receivers * rate});
    }
  }

  // Forward reachability from {2^k}; a no-op when 2^k < nodes.
  std::vector<bool> reachable(all.size(), false);
  std::vector<std::size_t> stack{0};
  reachable[0] = true;
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (const auto& e : spray[s])
      if (!reachable[e.to]) {
        reachable[e.to] = true;
        stack.push_back(e.to);
      }
  }
  std::vector<std::size_t> renumber(all.size(), 0);
  HomogeneousChain out;
  out.node_count = nodes;
  out.rate = rate;
  out.direct_contact = true;
  for (std::size_t s = 0; s < all.size(); ++s)
    if (reachable[s]) {
      renumber[s] = out.partitions.size();
      out.partitions.push_back(all[s]);
    }
  const std::size_t absorbing = out.partitions.size();

  std::vector<Transition> transitions;
  for (std::size_t s = 0; s < all.size(); ++s) {
    if (!reachable[s]) continue;
    for (const auto& e : spray[s])
      transitions.push_back({renumber[s], renumber[e.to], e.rate});
    transitions.push_back({renumber[s], absorbing,
                           static_cast<double>(all[s].holders()) * rate});
  }
  out.chain = AbsorbingChain(labels_for(out.partitions), std::move(transitions),
                             absorbing, 0);
  return out;
}

HomogeneousChain build_homogeneous_chain(const ContactRateView& view,
                                         const BuildLimits& limits) {
  const auto rate = view.uniform_rate();
  if (!rate)
    throw ConfigError(
        "contacts: homogeneous chain needs one common rate on every pair");
  auto wdc = build_homogeneous_chain(view.node_count(), *rate,
                                     view.copy_exponent(), limits);
  return view.has_direct_contact() ? wdc : ndc_variant(wdc);
}

HomogeneousChain ndc_variant(const HomogeneousChain& wdc) {
  HomogeneousChain out = wdc;
  out.direct_contact = false;
  const std::size_t absorbing = wdc.chain.absorbing_index();
  std::vector<Transition> transitions;
  transitions.reserve(wdc.chain.transitions().size());
  for (const auto& t : wdc.chain.transitions()) {
    if (t.to != absorbing) {
      transitions.push_back(t);
      continue;
    }
    const auto holders = wdc.partitions[t.from].holders();
    if (holders > 1)
      transitions.push_back(
          {t.from, t.to, static_cast<double>(holders - 1) * wdc.rate});
  }
  out.chain = AbsorbingChain(wdc.chain.labels(), std::move(transitions),
                             absorbing, wdc.chain.initial_index());
  return out;
}

}  // namespace bsw
