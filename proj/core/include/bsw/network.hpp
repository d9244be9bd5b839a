#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bsw {

/// Zero-based node index.
using NodeId = std::size_t;

/// Network under study. Node indices are zero-based here; configuration files
/// use one-based indices and are translated at the I/O boundary.
struct NetworkSpec {
  std::size_t node_count = 0;
  /// Mean inter-contact time in seconds. A pair may be listed in one or both
  /// orientations; both entries must then agree. An absent pair never meets.
  std::map<std::pair<NodeId, NodeId>, double> mean_intercontact;
  NodeId source = 0;
  NodeId destination = 1;
  std::size_t replication_factor = 1;

  /// Every pair present with the same mean.
  static NetworkSpec full_contact(std::size_t n, double mean_s, NodeId source,
                                  NodeId destination, std::size_t copies);

  void set_mean(NodeId i, NodeId j, double mean_s);
  void erase_pair(NodeId i, NodeId j);
  std::optional<double> mean(NodeId i, NodeId j) const;
};

/// Dense symmetric rate table derived from a validated NetworkSpec.
class ContactRateView {
 public:
  std::size_t node_count() const { return n_; }
  NodeId source() const { return source_; }
  NodeId destination() const { return destination_; }
  std::size_t replication_factor() const { return copies_; }
  /// log2 of the replication factor.
  int copy_exponent() const { return exponent_; }

  /// Contact rate in 1/s, 0 for pairs that never meet and on the diagonal.
  double rate(NodeId i, NodeId j) const { return rates_[i * n_ + j]; }
  /// Nodes with a positive rate to `i`, ascending.
  const std::vector<NodeId>& neighbours(NodeId i) const { return adj_[i]; }

  bool is_homogeneous() const { return homogeneous_; }
  bool has_direct_contact() const { return rate(source_, destination_) > 0.0; }
  /// Common rate when every pair other than source-destination is present
  /// with one value. Covers the homogeneous network and its NDC restriction.
  std::optional<double> uniform_rate() const { return uniform_; }

  double min_mean() const { return min_mean_; }
  double max_mean() const { return max_mean_; }

  /// Reconstructs the spec this view was derived from.
  NetworkSpec to_spec() const;

  bool operator==(const ContactRateView&) const = default;

 private:
  friend ContactRateView validate_spec(const NetworkSpec& spec);

  std::size_t n_ = 0;
  NodeId source_ = 0;
  NodeId destination_ = 0;
  std::size_t copies_ = 1;
  int exponent_ = 0;
  std::vector<double> rates_;
  std::vector<double> means_;
  std::vector<std::vector<NodeId>> adj_;
  bool homogeneous_ = false;
  std::optional<double> uniform_;
  double min_mean_ = 0.0;
  double max_mean_ = 0.0;
};

/// Checks every structural rule of a NetworkSpec and derives its rate view.
/// Throws ConfigError naming the offending field.
ContactRateView validate_spec(const NetworkSpec& spec);

/// Returns k when `copies` == 2^k, nullopt otherwise.
std::optional<int> exact_log2(std::size_t copies);

}  // namespace bsw
