#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bsw/chain.hpp"

namespace bsw {

/// How a DelayDistribution is read between its grid points.
enum class CdfShape {
  kLinear,  ///< solved curve, linear between points
  kStep,    ///< empirical curve, right-continuous steps
};

/// Delay law: cdf[i] = P(D <= grid[i], delivered).
struct DelayDistribution {
  std::vector<double> grid;
  std::vector<double> cdf;
  double delivery_ratio = 0.0;
  CdfShape shape = CdfShape::kLinear;

  /// Value at t. Flat beyond the last grid point and before the first.
  double at(double t) const;
  /// Limit from the left at t; equals at(t) for linear curves.
  double left_limit(double t) const;
};

struct SolverOptions {
  /// Bound on the probability mass lost to Poisson truncation at any point.
  double truncation = 1e-9;
};

/// Transient absorption probabilities by uniformisation. `grid` must be
/// strictly increasing and non-negative.
DelayDistribution solve_cdf(const AbsorbingChain& chain,
                            std::span<const double> grid,
                            const SolverOptions& options = {});

/// Probability of eventual absorption from the initial state.
double solve_delivery_ratio(const AbsorbingChain& chain);

/// Step CDF of delivered delays, normalised by all messages sent.
DelayDistribution empirical_cdf(std::span<const double> delivered_delays,
                                std::size_t n_total,
                                std::span<const double> grid);

/// Sup-distance between two delay curves over the union of their grids,
/// left limits of step curves included.
double ks_distance(const DelayDistribution& a, const DelayDistribution& b);

/// t = 0 followed by `points` log-spaced times from min_mean/100 to t_max.
std::vector<double> log_grid(double min_mean, double t_max,
                             std::size_t points = 500);

/// Default grid for a network: log_grid up to 20 x max_mean.
std::vector<double> default_grid(double min_mean, double max_mean,
                                 std::size_t points = 500);

}  // namespace bsw
