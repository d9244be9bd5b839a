#pragma once

#include <cstddef>
#include <vector>

#include "bsw/chain.hpp"
#include "bsw/limits.hpp"
#include "bsw/network.hpp"
#include "bsw/partitions.hpp"

namespace bsw {

/// Chain over copy partitions. partitions[i] labels transient state i; the
/// absorbing state is the last index and the initial state {2^k} is index 0.
struct HomogeneousChain {
  AbsorbingChain chain;
  std::vector<CopyPartition> partitions;
  std::size_t node_count = 0;
  double rate = 0.0;
  bool direct_contact = true;
};

/// Builds the WDC chain for `nodes` nodes meeting pairwise at `rate`, with
/// 2^k copies. When 2^k >= nodes the partitions that cannot be reached are
/// pruned, otherwise every partition of 2^k is a state.
HomogeneousChain build_homogeneous_chain(std::size_t nodes, double rate, int k,
                                         const BuildLimits& limits = {});

/// Builds from a rate view whose pairs share one rate. A view without the
/// source-destination contact yields the NDC variant.
HomogeneousChain build_homogeneous_chain(const ContactRateView& view,
                                         const BuildLimits& limits = {});

/// Replaces each absorbing rate n_p * r by (n_p - 1) * r, dropping the ones
/// that become zero.
HomogeneousChain ndc_variant(const HomogeneousChain& wdc);

}  // namespace bsw
