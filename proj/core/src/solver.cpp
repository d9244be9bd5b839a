#include "bsw/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bsw {
namespace {

// Largest uniformised jump mean per sub-step, keeps exp(-lambda) normal.
constexpr double kMaxJumpMean = 20.0;
constexpr std::size_t kMaxTerms = 100000;

class Uniformizer {
 public:
  explicit Uniformizer(const AbsorbingChain& chain) : chain_(chain) {
    for (std::size_t s = 0; s < chain.size(); ++s)
      q_ = std::max(q_, chain.out_rate(s));
    next_.resize(chain.size());
    term_.resize(chain.size());
    acc_.resize(chain.size());
  }

  double rate() const { return q_; }

  // p <- p exp(Q h), discarding at most `tail` probability mass.
  void advance(std::vector<double>& p, double h, double tail) {
    if (q_ == 0.0 || h == 0.0) return;
    const auto steps =
        static_cast<std::size_t>(std::ceil(q_ * h / kMaxJumpMean));
    const double sub = h / static_cast<double>(steps);
    const double sub_tail = tail / static_cast<double>(steps);
    for (std::size_t i = 0; i < steps; ++i) advance_once(p, sub, sub_tail);
  }

 private:
  void jump(const std::vector<double>& in, std::vector<double>& out) const {
    for (std::size_t s = 0; s < in.size(); ++s)
      out[s] = in[s] * (1.0 - chain_.out_rate(s) / q_);
    for (const auto& t : chain_.transitions())
      out[t.to] += in[t.from] * (t.rate / q_);
  }

  void advance_once(std::vector<double>& p, double h, double tail) {
    const double lambda = q_ * h;
    double weight = std::exp(-lambda);
    term_ = p;
    for (std::size_t s = 0; s < p.size(); ++s) acc_[s] = weight * p[s];
    for (std::size_t n = 1; n < kMaxTerms; ++n) {
      jump(term_, next_);
      std::swap(term_, next_);
      weight *= lambda / static_cast<double>(n);
      for (std::size_t s = 0; s < p.size(); ++s) acc_[s] += weight * term_[s];
      // Poisson tail beyond n, bounded by a geometric series once n + 2 > lambda.
      const double ratio = lambda / static_cast<double>(n + 2);
      if (ratio < 1.0 &&
          weight * (lambda / static_cast<double>(n + 1)) / (1.0 - ratio) <= tail)
        break;
    }
    std::swap(p, acc_);
  }

  const AbsorbingChain& chain_;
  double q_ = 0.0;
  std::vector<double> next_, term_, acc_;
};

void check_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i]))
      throw std::invalid_argument("grid: time points must be finite and >= 0");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("grid: time points must strictly increase");
  }
}

// Index of the last grid point <= t, or -1.
std::ptrdiff_t floor_index(const std::vector<double>& grid, double t) {
  auto it = std::upper_bound(grid.begin(), grid.end(), t);
  return static_cast<std::ptrdiff_t>(it - grid.begin()) - 1;
}

}  // namespace

double DelayDistribution::at(double t) const {
  if (grid.empty()) return 0.0;
  const auto i = floor_index(grid, t);
  if (i < 0) return shape == CdfShape::kStep ? 0.0 : cdf.front();
  const auto u = static_cast<std::size_t>(i);
  if (shape == CdfShape::kStep || u + 1 == grid.size()) return cdf[u];
  const double w = (t - grid[u]) / (grid[u + 1] - grid[u]);
  return cdf[u] + w * (cdf[u + 1] - cdf[u]);
}

double DelayDistribution::left_limit(double t) const {
  if (shape == CdfShape::kLinear || grid.empty()) return at(t);
  auto it = std::lower_bound(grid.begin(), grid.end(), t);
  if (it == grid.begin()) return 0.0;
  return cdf[static_cast<std::size_t>(it - grid.begin()) - 1];
}

DelayDistribution solve_cdf(const AbsorbingChain& chain,
                            std::span<const double> grid,
                            const SolverOptions& options) {
  if (chain.size() == 0) throw std::invalid_argument("solve_cdf: empty chain");
  check_grid(grid);

  DelayDistribution out;
  out.grid.assign(grid.begin(), grid.end());
  out.cdf.reserve(grid.size());
  out.shape = CdfShape::kLinear;

  Uniformizer uni(chain);
  std::vector<double> p(chain.size(), 0.0);
  p[chain.initial_index()] = 1.0;
  // Half the budget goes to Poisson truncation, split along the grid; the
  // other half bounds the mass still in motion when stepping stops early.
  const double tail = options.truncation / (2.0 * static_cast<double>(grid.size()));
  auto live_mass = [&] {
    double sum = 0.0;
    for (std::size_t s = 0; s < p.size(); ++s)
      if (s != chain.absorbing_index() && chain.out_rate(s) > 0.0) sum += p[s];
    return sum;
  };
  double now = 0.0;
  bool settled = false;
  for (double t : grid) {
    if (!settled) {
      uni.advance(p, t - now, tail);
      now = t;
      settled = live_mass() <= 0.5 * options.truncation;
    }
    // The exact curve is nondecreasing; truncation noise must not break that.
    double value = std::clamp(p[chain.absorbing_index()], 0.0, 1.0);
    if (!out.cdf.empty()) value = std::max(value, out.cdf.back());
    out.cdf.push_back(value);
  }
  out.delivery_ratio = solve_delivery_ratio(chain);
  return out;
}

double solve_delivery_ratio(const AbsorbingChain& chain) {
  const std::size_t n = chain.size();
  const std::size_t abs = chain.absorbing_index();
  std::vector<double> h(n, 0.0);
  h[abs] = 1.0;

  auto update = [&](std::size_t s) {
    if (s == abs) return 0.0;
    const double out = chain.out_rate(s);
    if (out == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& t : chain.out_edges(s)) sum += t.rate * h[t.to];
    const double value = sum / out;
    const double change = std::abs(value - h[s]);
    h[s] = value;
    return change;
  };

  if (chain.is_acyclic()) {
    // Reverse topological order gives the exact solution in one sweep.
    std::vector<std::size_t> indegree(n, 0), order;
    order.reserve(n);
    for (const auto& t : chain.transitions()) ++indegree[t.to];
    for (std::size_t s = 0; s < n; ++s)
      if (indegree[s] == 0) order.push_back(s);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (const auto& t : chain.out_edges(order[i]))
        if (--indegree[t.to] == 0) order.push_back(t.to);
    for (auto it = order.rbegin(); it != order.rend(); ++it) update(*it);
  } else {
    // Gauss-Seidel; the iteration is monotone from h = 0 on transient states.
    for (int sweep = 0; sweep < 1000000; ++sweep) {
      double change = 0.0;
      for (std::size_t s = 0; s < n; ++s) change = std::max(change, update(s));
      if (change < 1e-15) break;
    }
  }
  return std::clamp(h[chain.initial_index()], 0.0, 1.0);
}

DelayDistribution empirical_cdf(std::span<const double> delivered_delays,
                                std::size_t n_total,
                                std::span<const double> grid) {
  if (n_total == 0)
    throw std::invalid_argument("empirical_cdf: no messages");
  if (delivered_delays.size() > n_total)
    throw std::invalid_argument("empirical_cdf: more deliveries than messages");
  check_grid(grid);

  std::vector<double> sorted(delivered_delays.begin(), delivered_delays.end());
  std::sort(sorted.begin(), sorted.end());
  DelayDistribution out;
  out.grid.assign(grid.begin(), grid.end());
  out.shape = CdfShape::kStep;
  const double total = static_cast<double>(n_total);
  for (double t : grid) {
    const auto count = std::upper_bound(sorted.begin(), sorted.end(), t) -
                       sorted.begin();
    out.cdf.push_back(static_cast<double>(count) / total);
  }
  out.delivery_ratio = static_cast<double>(sorted.size()) / total;
  return out;
}

double ks_distance(const DelayDistribution& a, const DelayDistribution& b) {
  std::vector<double> points;
  points.reserve(a.grid.size() + b.grid.size());
  std::merge(a.grid.begin(), a.grid.end(), b.grid.begin(), b.grid.end(),
             std::back_inserter(points));
  points.erase(std::unique(points.begin(), points.end()), points.end());
  double worst = 0.0;
  for (double t : points) {
    worst = std::max(worst, std::abs(a.at(t) - b.at(t)));
    worst = std::max(worst, std::abs(a.left_limit(t) - b.left_limit(t)));
  }
  return worst;
}

std::vector<double> log_grid(double min_mean, double t_max,
                             std::size_t points) {
  if (!(min_mean > 0.0) || !(t_max > min_mean / 100.0) || points < 2)
    throw std::invalid_argument("log_grid: invalid range");
  const double lo = std::log(min_mean / 100.0);
  const double hi = std::log(t_max);
  std::vector<double> grid{0.0};
  grid.reserve(points + 1);
  for (std::size_t i = 0; i < points; ++i)
    grid.push_back(std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                     static_cast<double>(points - 1)));
  grid.back() = t_max;
  return grid;
}

std::vector<double> default_grid(double min_mean, double max_mean,
                                 std::size_t points) {
  return log_grid(min_mean, 20.0 * max_mean, points);
}

}  // namespace bsw
