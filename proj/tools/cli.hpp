#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsw/chain.hpp"
#include "bsw/limits.hpp"
#include "bsw/network.hpp"
#include "bsw/simulator.hpp"
#include "bsw/solver.hpp"

namespace bsw::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfigError = 2,
  kCeiling = 3,
  kComparisonFailed = 4,
};

struct RunReport {
  std::size_t state_count = 0;
  std::size_t transition_count = 0;
  std::optional<double> delivery_ratio_model;
  std::optional<double> delivery_ratio_sim;
  std::optional<double> ks_distance;
  std::map<std::string, double> wall_time_s;

  /// "key=value" lines; wall times only when `with_timing`.
  void write(std::ostream& os, bool with_timing = true) const;
};

struct BuiltChain {
  AbsorbingChain chain;
  bool heterogeneous = false;
};

/// Homogeneous builder when all pairs share one rate (source-destination pair
/// optional), heterogeneous builder otherwise or when forced.
BuiltChain build_chain(const ContactRateView& view, bool force_hetero,
                       const BuildLimits& limits);

/// Log grid for `view`; t_max defaults to 20 x the largest mean.
std::vector<double> grid_for(const ContactRateView& view, std::size_t points,
                             std::optional<double> t_max);

struct CompareOptions {
  bool force_hetero = false;
  std::size_t grid_points = 500;
  /// Last model grid time; defaults to the simulation horizon.
  std::optional<double> t_max;
  BuildLimits limits;
};

struct Comparison {
  DelayDistribution model;
  /// Step curve resolved at every delivered delay and model grid point.
  DelayDistribution sim;
  RunReport report;
};

/// Solves the chain, runs the simulator and measures their KS distance.
Comparison compare_model_with_simulation(const NetworkSpec& spec,
                                         const SimConfig& sim,
                                         const CompareOptions& options);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace bsw::cli
