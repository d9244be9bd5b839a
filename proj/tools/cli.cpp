#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "bsw/errors.hpp"
#include "bsw/heterogeneous.hpp"
#include "bsw/homogeneous.hpp"
#include "config.hpp"

namespace bsw::cli {
namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct Options {
  std::string config;
  std::string out_path;
  bool force_hetero = false;
  bool dump = false;
  std::size_t grid_points = 500;
  std::optional<double> t_max;
  std::size_t ne = 5000;
  std::uint64_t seed = 1;
  std::optional<double> horizon;
  double ks_threshold = 0.05;
  // gen-random
  RandomNetworkOptions random;
};

// Writes to --out when given, to `fallback` otherwise.
void emit(const Options& opt, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
  if (opt.out_path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(opt.out_path);
  if (!file) throw ConfigError("--out: cannot write " + opt.out_path);
  body(file);
}

void write_cdf(std::ostream& os, const DelayDistribution& d) {
  os << "t_seconds,cdf\n";
  for (std::size_t i = 0; i < d.grid.size(); ++i)
    os << fmt::format("{},{}\n", d.grid[i], d.cdf[i]);
  os << fmt::format("# delivery_ratio={}\n", d.delivery_ratio);
}

SimConfig sim_config(const Options& opt) {
  SimConfig cfg;
  cfg.n_messages = opt.ne;
  cfg.seed = opt.seed;
  cfg.horizon = opt.horizon;
  return cfg;
}

int cmd_build(const Options& opt, std::ostream& out, bool dump_only) {
  Stopwatch clock;
  const auto view = validate_spec(load_config(opt.config));
  const auto built = build_chain(view, opt.force_hetero,
                                 BuildLimits::from_environment());
  RunReport report;
  report.state_count = built.chain.size();
  report.transition_count = built.chain.transitions().size();
  report.wall_time_s["build"] = clock.lap();
  if (!dump_only) report.write(out);
  if (dump_only || opt.dump)
    emit(opt, out, [&](std::ostream& os) { built.chain.dump(os); });
  return kOk;
}

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto view = validate_spec(load_config(opt.config));
  const auto built = build_chain(view, opt.force_hetero,
                                 BuildLimits::from_environment());
  const auto grid = grid_for(view, opt.grid_points, opt.t_max);
  const auto dist = solve_cdf(built.chain, grid);
  emit(opt, out, [&](std::ostream& os) { write_cdf(os, dist); });
  err << fmt::format("states={} delivery_ratio={}\n", built.chain.size(),
                     dist.delivery_ratio);
  return kOk;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
  const auto spec = load_config(opt.config);
  validate_spec(spec);
  const auto outcomes = simulate(spec, sim_config(opt));
  emit(opt, out, [&](std::ostream& os) { write_outcomes(os, outcomes); });
  return kOk;
}

int cmd_trace(const Options& opt, std::ostream& out) {
  const auto spec = load_config(opt.config);
  validate_spec(spec);
  const auto events = replay_trace(spec, sim_config(opt));
  emit(opt, out, [&](std::ostream& os) { write_trace(os, events); });
  return kOk;
}

int cmd_compare(const Options& opt, std::ostream& out, std::ostream& err) {
  CompareOptions options;
  options.force_hetero = opt.force_hetero;
  options.grid_points = opt.grid_points;
  options.t_max = opt.t_max;
  options.limits = BuildLimits::from_environment();
  const auto result = compare_model_with_simulation(load_config(opt.config),
                                                    sim_config(opt), options);
  emit(opt, out, [&](std::ostream& os) {
    os << "t_seconds,cdf_model,cdf_sim\n";
    const auto& grid = result.model.grid;
    for (std::size_t i = 0; i < grid.size(); ++i)
      os << fmt::format("{},{},{}\n", grid[i], result.model.cdf[i],
                        result.sim.at(grid[i]));
  });
  result.report.write(err);
  return *result.report.ks_distance > opt.ks_threshold ? kComparisonFailed
                                                       : kOk;
}

int cmd_gen_random(const Options& opt, std::ostream& out) {
  const auto spec = random_network(opt.random);
  validate_spec(spec);
  emit(opt, out, [&](std::ostream& os) { os << to_json(spec).dump(2) << '\n'; });
  return kOk;
}

}  // namespace

void RunReport::write(std::ostream& os, bool with_timing) const {
  os << fmt::format("state_count={}\n", state_count);
  os << fmt::format("transition_count={}\n", transition_count);
  if (delivery_ratio_model)
    os << fmt::format("delivery_ratio_model={}\n", *delivery_ratio_model);
  if (delivery_ratio_sim)
    os << fmt::format("delivery_ratio_sim={}\n", *delivery_ratio_sim);
  if (ks_distance) os << fmt::format("ks_distance={}\n", *ks_distance);
  if (with_timing)
    for (const auto& [phase, seconds] : wall_time_s)
      os << fmt::format("wall_time_{}_s={:.3f}\n", phase, seconds);
}

Comparison compare_model_with_simulation(const NetworkSpec& spec,
                                         const SimConfig& cfg,
                                         const CompareOptions& options) {
  Stopwatch clock;
  const auto view = validate_spec(spec);
  Comparison result;
  auto& report = result.report;

  const auto built = build_chain(view, options.force_hetero, options.limits);
  report.state_count = built.chain.size();
  report.transition_count = built.chain.transitions().size();
  report.wall_time_s["build"] = clock.lap();

  const auto grid = grid_for(
      view, options.grid_points,
      options.t_max ? options.t_max
                    : std::optional(effective_horizon(spec, cfg)));
  result.model = solve_cdf(built.chain, grid);
  report.delivery_ratio_model = result.model.delivery_ratio;
  report.wall_time_s["solve"] = clock.lap();

  const auto outcomes = simulate(spec, cfg);
  const auto delays = delivered_delays(outcomes);
  report.wall_time_s["simulate"] = clock.lap();

  std::vector<double> points = delays;
  points.insert(points.end(), grid.begin(), grid.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  result.sim = empirical_cdf(delays, outcomes.size(), points);
  report.delivery_ratio_sim = result.sim.delivery_ratio;
  report.ks_distance = ks_distance(result.model, result.sim);
  return result;
}

BuiltChain build_chain(const ContactRateView& view, bool force_hetero,
                       const BuildLimits& limits) {
  if (!force_hetero && view.uniform_rate())
    return {build_homogeneous_chain(view, limits).chain, false};
  return {build_heterogeneous_chain(view, limits).chain, true};
}

std::vector<double> grid_for(const ContactRateView& view, std::size_t points,
                             std::optional<double> t_max) {
  // A network without contacts still gets a well-formed grid.
  const double lo = view.min_mean() > 0.0 ? view.min_mean() : 1.0;
  const double hi = view.max_mean() > 0.0 ? view.max_mean() : 1.0;
  if (t_max && !(*t_max > lo / 100.0))
    throw ConfigError("--t-max: must exceed the first grid point");
  return log_grid(lo, t_max.value_or(20.0 * hi), points);
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Delay distribution of binary spray and wait"};
  app.require_subcommand(1);
  Options opt;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("config", opt.config, "Network JSON config")->required();
    cmd->add_option("--out", opt.out_path, "Write output to this path");
  };
  auto add_chain = [&](CLI::App* cmd) {
    cmd->add_flag("--force-hetero", opt.force_hetero,
                  "Use the per-node chain even for homogeneous networks");
  };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--grid-points", opt.grid_points, "Log-spaced grid points")
        ->check(CLI::Range(2, 1000000));
    cmd->add_option("--t-max", opt.t_max, "Last grid time in seconds");
  };
  auto add_sim = [&](CLI::App* cmd) {
    cmd->add_option("--ne", opt.ne, "Messages to simulate")
        ->check(CLI::Range(1, 100000000));
    cmd->add_option("--seed", opt.seed, "Master seed");
    cmd->add_option("--horizon", opt.horizon, "Per-message cutoff in seconds");
  };

  auto* build = app.add_subcommand("build", "Build the chain and report its size");
  add_config(build);
  add_chain(build);
  build->add_flag("--dump", opt.dump, "Also write the transition list");

  auto* dump = app.add_subcommand("dump-chain", "Write the transition list");
  add_config(dump);
  add_chain(dump);

  auto* solve = app.add_subcommand("solve", "Delay CDF as CSV");
  add_config(solve);
  add_chain(solve);
  add_grid(solve);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo message outcomes");
  add_config(sim);
  add_sim(sim);

  auto* trace = app.add_subcommand("trace", "Contact trace of one replication");
  add_config(trace);
  add_sim(trace);

  auto* compare = app.add_subcommand("compare", "Model against simulation");
  add_config(compare);
  add_chain(compare);
  add_grid(compare);
  add_sim(compare);
  compare->add_option("--ks-threshold", opt.ks_threshold,
                      "Fail (exit 4) above this distance");

  auto* gen = app.add_subcommand("gen-random", "Random sparse network config");
  gen->add_option("--n", opt.random.nodes, "Node count");
  gen->add_option("--L", opt.random.copies, "Replication factor");
  gen->add_option("--seed", opt.random.seed, "Generator seed");
  gen->add_option("--min-diversity", opt.random.min_diversity);
  gen->add_option("--max-diversity", opt.random.max_diversity);
  gen->add_option("--min-mean", opt.random.min_mean);
  gen->add_option("--max-mean", opt.random.max_mean);
  gen->add_option("--out", opt.out_path, "Write output to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(opt, out, false);
    if (*dump) return cmd_build(opt, out, true);
    if (*solve) return cmd_solve(opt, out, err);
    if (*sim) return cmd_simulate(opt, out);
    if (*trace) return cmd_trace(opt, out);
    if (*compare) return cmd_compare(opt, out, err);
    if (*gen) return cmd_gen_random(opt, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const CeilingError& e) {
    err << "resource ceiling: " << e.what() << '\n';
    return kCeiling;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kConfigError;
  }
  return kUsage;
}

}  // namespace bsw::cli
