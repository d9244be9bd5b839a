#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsw {

/// Largest exponent for which partitions are materialised (692004 states).
inline constexpr int kMaxEnumerationExponent = 8;
/// Largest exponent accepted by count_partitions.
inline constexpr int kMaxCountExponent = 30;

/// Homogeneous chain state: counts[j] nodes hold exactly 2^j copies.
struct CopyPartition {
  std::vector<std::uint32_t> counts;

  /// Number of holders.
  std::uint64_t holders() const;
  /// Total copies, sum of counts[j] * 2^j.
  std::uint64_t total() const;
  /// Multiset label, largest part first, e.g. "{2,1,1}".
  std::string label() const;

  auto operator<=>(const CopyPartition&) const = default;
};

/// Every partition of 2^k into powers of two, ordered lexicographically
/// decreasing on (a_k, ..., a_0); index 0 is always the single part {2^k}.
/// Throws CeilingError for k > kMaxEnumerationExponent.
std::vector<CopyPartition> enumerate_partitions(int k);

/// Number of partitions of 2^k into powers of two, computed without
/// materialising them. Exact for 0 <= k <= kMaxCountExponent.
boost::multiprecision::cpp_int count_partitions(int k);

}  // namespace bsw
