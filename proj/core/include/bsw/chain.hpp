#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bsw {

struct Transition {
  std::size_t from = 0;
  std::size_t to = 0;
  double rate = 0.0;  ///< per second

  bool operator==(const Transition&) const = default;
};

/// Continuous-time Markov chain with a single absorbing state (delivery).
///
/// Transitions are held as a flat list sorted by (from, to) with parallel
/// edges merged by summing their rates. Construction rejects non-positive
/// rates, self-loops and edges leaving the absorbing state.
class AbsorbingChain {
 public:
  AbsorbingChain() = default;
  AbsorbingChain(std::vector<std::string> labels,
                 std::vector<Transition> transitions,
                 std::size_t absorbing_index, std::size_t initial_index);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  std::size_t absorbing_index() const { return absorbing_; }
  std::size_t initial_index() const { return initial_; }

  std::span<const Transition> out_edges(std::size_t state) const;
  /// Total exit rate of `state`.
  double out_rate(std::size_t state) const { return out_rate_[state]; }
  /// Rate of the direct edge into the absorbing state, 0 when absent.
  double absorbing_rate(std::size_t state) const;

  /// States not reachable from the initial state, absorbing state excluded.
  std::vector<std::size_t> unreachable_states() const;
  /// True when the transition graph has no directed cycle.
  bool is_acyclic() const;

  /// Writes "FROM -> TO : RATE" lines, one per transition.
  void dump(std::ostream& os) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> offsets_;
  std::vector<double> out_rate_;
  std::size_t absorbing_ = 0;
  std::size_t initial_ = 0;
};

}  // namespace bsw
