#pragma once

#include <cstddef>

namespace bsw {

/// Safety ceilings applied by the chain builders.
struct BuildLimits {
  std::size_t max_states = 1'000'000;

  /// Default limits, with max_states overridden by BSW_MAX_STATES when set.
  static BuildLimits from_environment();
};

}  // namespace bsw
