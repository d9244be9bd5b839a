#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsw/chain.hpp"
#include "bsw/limits.hpp"
#include "bsw/network.hpp"
#include "bsw/partitions.hpp"

namespace bsw {

inline constexpr int kMaxHeterogeneousExponent = 4;
inline constexpr std::size_t kMaxHeterogeneousNodes = 25;

/// Heterogeneous chain state: which node holds 2^exponent copies. Holders are
/// kept sorted by node, which is the canonical identity of the state.
class CopyMatrix {
 public:
  struct Holding {
    NodeId node;
    int exponent;
    auto operator<=>(const Holding&) const = default;
  };

  CopyMatrix() = default;
  /// Throws ConfigError when a node repeats, the destination holds copies,
  /// or the copies do not add up to `total_copies`.
  CopyMatrix(std::vector<Holding> holdings, std::size_t total_copies,
             NodeId destination);

  const std::vector<Holding>& holdings() const { return holdings_; }
  std::size_t holders() const { return holdings_.size(); }
  /// Holders at exactly 2^exponent copies.
  std::size_t holders_at(int exponent) const;
  /// Exponent held by `node`, -1 when it holds nothing.
  int exponent_of(NodeId node) const;
  std::uint64_t total() const;

  /// Label with one-based nodes and copy counts, e.g. "{1:2,3:2}".
  std::string label() const;

  auto operator<=>(const CopyMatrix&) const = default;

 private:
  friend struct HeterogeneousBuilder;
  std::vector<Holding> holdings_;
};

/// Counts holders per exponent; k is the largest exponent represented.
CopyPartition collapse(const CopyMatrix& state, int k);

struct HeterogeneousChain {
  AbsorbingChain chain;
  /// states[i] labels transient state i; absorbing state is the last index.
  std::vector<CopyMatrix> states;
};

/// Explores the states reachable from {source: 2^k} breadth-first. Throws
/// CeilingError beyond k = 4, 25 nodes or limits.max_states.
HeterogeneousChain build_heterogeneous_chain(const ContactRateView& view,
                                             const BuildLimits& limits = {});

/// Closed-form state count for L = 4 in a full-contact network, as stated
/// alongside the heterogeneous construction:
///   2 + (n - 2) (6 + (n - 3)(4n - 7)) / 6.
std::uint64_t count_states_L4(std::uint64_t n);

}  // namespace bsw
