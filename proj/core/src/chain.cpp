#include "bsw/chain.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <ostream>
#include <stdexcept>

namespace bsw {

AbsorbingChain::AbsorbingChain(std::vector<std::string> labels,
                               std::vector<Transition> transitions,
                               std::size_t absorbing_index,
                               std::size_t initial_index)
    : labels_(std::move(labels)),
      absorbing_(absorbing_index),
      initial_(initial_index) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("AbsorbingChain: no states");
  if (absorbing_ >= n || initial_ >= n)
    throw std::invalid_argument("AbsorbingChain: index out of range");

  for (const auto& t : transitions) {
    if (t.from >= n || t.to >= n)
      throw std::invalid_argument("AbsorbingChain: transition out of range");
    if (t.from == t.to)
      throw std::invalid_argument("AbsorbingChain: self-loop on " +
                                  labels_[t.from]);
    if (t.from == absorbing_)
      throw std::invalid_argument(
          "AbsorbingChain: transition leaves the absorbing state");
    if (!(t.rate > 0.0) || !std::isfinite(t.rate))
      throw std::invalid_argument("AbsorbingChain: non-positive rate on " +
                                  labels_[t.from] + " -> " + labels_[t.to]);
  }
  std::sort(transitions.begin(), transitions.end(),
            [](const Transition& a, const Transition& b) {
              return a.from != b.from ? a.from < b.from : a.to < b.to;
            });
  for (const auto& t : transitions) {
    if (!transitions_.empty() && transitions_.back().from == t.from &&
        transitions_.back().to == t.to)
      transitions_.back().rate += t.rate;
    else
      transitions_.push_back(t);
  }

  offsets_.assign(n + 1, 0);
  out_rate_.assign(n, 0.0);
  for (const auto& t : transitions_) {
    ++offsets_[t.from + 1];
    out_rate_[t.from] += t.rate;
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

std::span<const Transition> AbsorbingChain::out_edges(std::size_t state) const {
  return {transitions_.data() + offsets_[state],
          transitions_.data() + offsets_[state + 1]};
}

double AbsorbingChain::absorbing_rate(std::size_t state) const {
  for (const auto& t : out_edges(state))
    if (t.to == absorbing_) return t.rate;
  return 0.0;
}

std::vector<std::size_t> AbsorbingChain::unreachable_states() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack{initial_};
  seen[initial_] = true;
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (const auto& t : out_edges(s))
      if (!seen[t.to]) {
        seen[t.to] = true;
        stack.push_back(t.to);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (!seen[i] && i != absorbing_) out.push_back(i);
  return out;
}

bool AbsorbingChain::is_acyclic() const {
  std::vector<std::size_t> indegree(size(), 0);
  for (const auto& t : transitions_) ++indegree[t.to];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < size(); ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const auto s = ready.back();
    ready.pop_back();
    ++visited;
    for (const auto& t : out_edges(s))
      if (--indegree[t.to] == 0) ready.push_back(t.to);
  }
  return visited == size();
}

void AbsorbingChain::dump(std::ostream& os) const {
  for (const auto& t : transitions_)
    os << fmt::format("{} -> {} : {}\n", labels_[t.from], labels_[t.to],
                      t.rate);
}

}  // namespace bsw
