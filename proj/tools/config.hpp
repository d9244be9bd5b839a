#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "bsw/network.hpp"

namespace bsw::cli {

/// Parses the JSON network schema:
///   { "n": int, "L": int, "source": int, "destination": int,
///     "mean": number | null,
///     "contacts": [{"i": int, "j": int, "mean_s": number}] | null,
///     "direct_contact": bool | null }
/// Node indices are one-based. Exactly one of "mean" / "contacts" is given.
/// "direct_contact": false removes the source-destination pair.
/// Throws ConfigError naming the offending field.
NetworkSpec parse_config(const nlohmann::json& doc);
NetworkSpec load_config(const std::string& path);

/// Inverse of parse_config, always in "contacts" form.
nlohmann::json to_json(const NetworkSpec& spec);

struct RandomNetworkOptions {
  std::size_t nodes = 12;
  std::size_t copies = 4;
  std::size_t min_diversity = 2;
  std::size_t max_diversity = 8;
  double min_mean = 200.0;
  double max_mean = 1200.0;
  std::uint64_t seed = 1;
};

/// Random sparse network: each node draws a target neighbour count in
/// [min_diversity, max_diversity] and links to random peers until reached,
/// preferring peers still under their own target. Means are uniform in
/// [min_mean, max_mean]. Source is node 1 and destination node n.
NetworkSpec random_network(const RandomNetworkOptions& options);

}  // namespace bsw::cli
