#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "bsw/errors.hpp"

namespace bsw::cli {
namespace {

using nlohmann::json;

std::int64_t require_int(const json& doc, const char* field) {
  if (!doc.contains(field))
    throw ConfigError(std::string(field) + ": missing");
  const auto& v = doc.at(field);
  if (!v.is_number_integer())
    throw ConfigError(std::string(field) + ": expected an integer");
  return v.get<std::int64_t>();
}

NodeId node_index(std::int64_t one_based, std::int64_t n, const char* field) {
  if (one_based < 1 || one_based > n)
    throw ConfigError(std::string(field) + ": node " +
                      std::to_string(one_based) + " outside 1.." +
                      std::to_string(n));
  return static_cast<NodeId>(one_based - 1);
}

bool present(const json& doc, const char* field) {
  return doc.contains(field) && !doc.at(field).is_null();
}

}  // namespace

NetworkSpec parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  const auto n = require_int(doc, "n");
  const auto copies = require_int(doc, "L");
  if (n < 2) throw ConfigError("n: network needs at least 2 nodes");
  if (copies < 1)
    throw ConfigError("L: replication factor must be a power of two");

  NetworkSpec spec;
  spec.node_count = static_cast<std::size_t>(n);
  spec.replication_factor = static_cast<std::size_t>(copies);
  spec.source = node_index(require_int(doc, "source"), n, "source");
  spec.destination =
      node_index(require_int(doc, "destination"), n, "destination");

  const bool has_mean = present(doc, "mean");
  const bool has_contacts = present(doc, "contacts");
  if (has_mean == has_contacts)
    throw ConfigError("mean/contacts: give exactly one of the two");

  if (has_mean) {
    const auto& m = doc.at("mean");
    if (!m.is_number()) throw ConfigError("mean: expected a number");
    const double mean = m.get<double>();
    if (!(mean > 0.0)) throw ConfigError("mean: must be positive");
    spec = NetworkSpec::full_contact(spec.node_count, mean, spec.source,
                                     spec.destination, spec.replication_factor);
  } else {
    const auto& list = doc.at("contacts");
    if (!list.is_array()) throw ConfigError("contacts: expected an array");
    for (const auto& c : list) {
      if (!c.is_object()) throw ConfigError("contacts: expected objects");
      const NodeId i = node_index(require_int(c, "i"), n, "contacts.i");
      const NodeId j = node_index(require_int(c, "j"), n, "contacts.j");
      if (!c.contains("mean_s") || !c.at("mean_s").is_number())
        throw ConfigError("contacts.mean_s: expected a number");
      if (spec.mean_intercontact.contains({i, j}))
        throw ConfigError("contacts: pair (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") listed twice");
      spec.mean_intercontact[{i, j}] = c.at("mean_s").get<double>();
    }
  }

  if (present(doc, "direct_contact")) {
    const auto& d = doc.at("direct_contact");
    if (!d.is_boolean()) throw ConfigError("direct_contact: expected a bool");
    if (!d.get<bool>()) spec.erase_pair(spec.source, spec.destination);
  }
  return spec;
}

NetworkSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + path + " is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json to_json(const NetworkSpec& spec) {
  json contacts = json::array();
  for (const auto& [pair, mean] : spec.mean_intercontact)
    contacts.push_back({{"i", pair.first + 1},
                        {"j", pair.second + 1},
                        {"mean_s", mean}});
  return {{"n", spec.node_count},
          {"L", spec.replication_factor},
          {"source", spec.source + 1},
          {"destination", spec.destination + 1},
          {"contacts", contacts}};
}

NetworkSpec random_network(const RandomNetworkOptions& o) {
  if (o.nodes < 2) throw ConfigError("n: network needs at least 2 nodes");
  if (o.min_diversity < 1 || o.min_diversity > o.max_diversity)
    throw ConfigError("diversity: invalid range");
  if (!(o.min_mean > 0.0) || o.min_mean > o.max_mean)
    throw ConfigError("mean: invalid range");

  std::mt19937_64 rng(o.seed);
  const std::size_t n = o.nodes;
  const std::size_t cap = n - 1;
  std::uniform_int_distribution<std::size_t> diversity(
      std::min(o.min_diversity, cap), std::min(o.max_diversity, cap));
  std::uniform_real_distribution<double> mean(o.min_mean, o.max_mean);

  std::vector<std::size_t> target(n);
  for (auto& t : target) t = diversity(rng);
  std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
  std::vector<std::size_t> degree(n, 0);

  NetworkSpec spec;
  spec.node_count = n;
  spec.replication_factor = o.copies;
  spec.source = 0;
  spec.destination = n - 1;

  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (NodeId i : order) {
    while (degree[i] < target[i]) {
      std::vector<NodeId> open, any;
      for (NodeId j = 0; j < n; ++j) {
        if (j == i || linked[i][j]) continue;
        any.push_back(j);
        if (degree[j] < target[j]) open.push_back(j);
      }
      const auto& pool = open.empty() ? any : open;
      if (pool.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const NodeId j = pool[pick(rng)];
      linked[i][j] = linked[j][i] = true;
      ++degree[i];
      ++degree[j];
      spec.set_mean(i, j, mean(rng));
    }
  }
  return spec;
}

}  // namespace bsw::cli
