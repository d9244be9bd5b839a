#include "bsw/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bsw/errors.hpp"

namespace bsw {
namespace {

std::pair<NodeId, NodeId> ordered(NodeId i, NodeId j) {
  return i < j ? std::pair{i, j} : std::pair{j, i};
}

std::string pair_name(NodeId i, NodeId j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

NetworkSpec NetworkSpec::full_contact(std::size_t n, double mean_s,
                                      NodeId source, NodeId destination,
                                      std::size_t copies) {
  NetworkSpec spec;
  spec.node_count = n;
  spec.source = source;
  spec.destination = destination;
  spec.replication_factor = copies;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) spec.mean_intercontact[{i, j}] = mean_s;
  return spec;
}

void NetworkSpec::set_mean(NodeId i, NodeId j, double mean_s) {
  erase_pair(i, j);
  mean_intercontact[ordered(i, j)] = mean_s;
}

void NetworkSpec::erase_pair(NodeId i, NodeId j) {
  mean_intercontact.erase({i, j});
  mean_intercontact.erase({j, i});
}

std::optional<double> NetworkSpec::mean(NodeId i, NodeId j) const {
  if (auto it = mean_intercontact.find({i, j}); it != mean_intercontact.end())
    return it->second;
  if (auto it = mean_intercontact.find({j, i}); it != mean_intercontact.end())
    return it->second;
  return std::nullopt;
}

std::optional<int> exact_log2(std::size_t copies) {
  if (copies == 0 || (copies & (copies - 1)) != 0) return std::nullopt;
  int k = 0;
  while ((std::size_t{1} << k) != copies) ++k;
  return k;
}

ContactRateView validate_spec(const NetworkSpec& spec) {
  const std::size_t n = spec.node_count;
  if (n < 2)
    throw ConfigError("n: network needs at least 2 nodes, got " +
                      std::to_string(n));
  auto k = exact_log2(spec.replication_factor);
  if (!k)
    throw ConfigError("L: replication factor must be a power of two, got " +
                      std::to_string(spec.replication_factor));
  if (spec.source >= n)
    throw ConfigError("source: node index out of range");
  if (spec.destination >= n)
    throw ConfigError("destination: node index out of range");
  if (spec.source == spec.destination)
    throw ConfigError("destination: must differ from source");

  ContactRateView view;
  view.n_ = n;
  view.source_ = spec.source;
  view.destination_ = spec.destination;
  view.copies_ = spec.replication_factor;
  view.exponent_ = *k;
  view.rates_.assign(n * n, 0.0);
  view.means_.assign(n * n, 0.0);
  view.adj_.assign(n, {});
  view.min_mean_ = std::numeric_limits<double>::infinity();
  view.max_mean_ = 0.0;

  for (const auto& [key, mean] : spec.mean_intercontact) {
    const auto [i, j] = key;
    if (i >= n || j >= n)
      throw ConfigError("contacts: pair " + pair_name(i, j) +
                        " references a node outside the network");
    if (i == j)
      throw ConfigError("contacts: self-contact " + pair_name(i, j));
    if (!std::isfinite(mean) || mean <= 0.0)
      throw ConfigError("contacts: mean of pair " + pair_name(i, j) +
                        " must be positive and finite");
    if (auto it = spec.mean_intercontact.find({j, i});
        it != spec.mean_intercontact.end() && it->second != mean)
      throw ConfigError("contacts: asymmetric means for pair " +
                        pair_name(i, j));
    const double r = 1.0 / mean;
    view.rates_[i * n + j] = r;
    view.rates_[j * n + i] = r;
    view.means_[i * n + j] = mean;
    view.means_[j * n + i] = mean;
    view.min_mean_ = std::min(view.min_mean_, mean);
    view.max_mean_ = std::max(view.max_mean_, mean);
  }
  if (spec.mean_intercontact.empty()) view.min_mean_ = 0.0;

  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j)
      if (view.rates_[i * n + j] > 0.0) view.adj_[i].push_back(j);

  // Uniform rate over all pairs, the source-destination pair excepted.
  std::optional<double> common;
  bool uniform = true;
  for (NodeId i = 0; i < n && uniform; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const bool sd = (i == spec.source && j == spec.destination) ||
                      (j == spec.source && i == spec.destination);
      if (sd) continue;
      const double r = view.rates_[i * n + j];
      if (r <= 0.0 || (common && *common != r)) {
        uniform = false;
        break;
      }
      common = r;
    }
  }
  if (uniform) {
    const double sd = view.rate(spec.source, spec.destination);
    if (!common) {
      // Two-node network: the only pair is source-destination.
      uniform = sd > 0.0;
      common = sd;
    } else {
      uniform = sd == 0.0 || sd == *common;
    }
  }
  if (uniform) view.uniform_ = common;
  view.homogeneous_ =
      uniform && view.rate(spec.source, spec.destination) == *common;
  return view;
}

NetworkSpec ContactRateView::to_spec() const {
  NetworkSpec spec;
  spec.node_count = n_;
  spec.source = source_;
  spec.destination = destination_;
  spec.replication_factor = copies_;
  for (NodeId i = 0; i < n_; ++i)
    for (NodeId j = i + 1; j < n_; ++j)
      if (double m = means_[i * n_ + j]; m > 0.0)
        spec.mean_intercontact[{i, j}] = m;
  return spec;
}

}  // namespace bsw
