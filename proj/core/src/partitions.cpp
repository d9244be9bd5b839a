#include "bsw/partitions.hpp"

#include <stdexcept>

#include "bsw/errors.hpp"

namespace bsw {

using boost::multiprecision::cpp_int;

std::uint64_t CopyPartition::holders() const {
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

std::uint64_t CopyPartition::total() const {
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < counts.size(); ++j)
    sum += std::uint64_t{counts[j]} << j;
  return sum;
}

std::string CopyPartition::label() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t j = counts.size(); j-- > 0;) {
    for (std::uint32_t c = 0; c < counts[j]; ++c) {
      if (!first) out += ',';
      out += std::to_string(std::uint64_t{1} << j);
      first = false;
    }
  }
  return out + "}";
}

namespace {

void enumerate_from(int level, std::uint64_t remaining, CopyPartition& current,
                    std::vector<CopyPartition>& out) {
  if (level == 0) {
    current.counts[0] = static_cast<std::uint32_t>(remaining);
    out.push_back(current);
    return;
  }
  const std::uint64_t part = std::uint64_t{1} << level;
  for (std::uint64_t a = remaining / part + 1; a-- > 0;) {
    current.counts[level] = static_cast<std::uint32_t>(a);
    enumerate_from(level - 1, remaining - a * part, current, out);
  }
  current.counts[level] = 0;
}

// Values v[0..m-1] of an integer polynomial of degree < m, extended to
// `size` points through its forward-difference table.
std::vector<cpp_int> extrapolate(const std::vector<cpp_int>& v,
                                 std::size_t size) {
  std::vector<std::vector<cpp_int>> table{v};
  while (table.back().size() > 1) {
    const auto& prev = table.back();
    std::vector<cpp_int> diff(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i)
      diff[i] = prev[i + 1] - prev[i];
    table.push_back(std::move(diff));
  }
  // Last entry of each row, bottom row is constant.
  std::vector<cpp_int> tail(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) tail[r] = table[r].back();
  std::vector<cpp_int> out = v;
  while (out.size() < size) {
    for (std::size_t r = table.size() - 1; r-- > 0;) tail[r] += tail[r + 1];
    out.push_back(tail[0]);
  }
  return out;
}

}  // namespace

std::vector<CopyPartition> enumerate_partitions(int k) {
  if (k < 0) throw std::invalid_argument("enumerate_partitions: k < 0");
  if (k > kMaxEnumerationExponent)
    throw CeilingError("enumerate_partitions: k=" + std::to_string(k) +
                       " exceeds the enumeration ceiling k=" +
                       std::to_string(kMaxEnumerationExponent));
  std::vector<CopyPartition> out;
  CopyPartition current{std::vector<std::uint32_t>(k + 1, 0)};
  enumerate_from(k, std::uint64_t{1} << k, current, out);
  return out;
}

cpp_int count_partitions(int k) {
  if (k < 0) throw std::invalid_argument("count_partitions: k < 0");
  if (k > kMaxCountExponent)
    throw CeilingError("count_partitions: k=" + std::to_string(k) +
                       " exceeds " + std::to_string(kMaxCountExponent));
  if (k == 0) return 1;
  // level[t] = partitions of t * 2^j into parts <= 2^(j-1). It is a
  // polynomial of degree j-1 in t and satisfies
  //   next[t] = sum_{s=0}^{2t} level[s].
  std::vector<cpp_int> level{1};
  for (int j = 1; j < k; ++j) {
    const std::size_t points = static_cast<std::size_t>(j) + 1;
    auto extended = extrapolate(level, 2 * points - 1);
    std::vector<cpp_int> next(points);
    cpp_int running = 0;
    std::size_t s = 0;
    for (std::size_t t = 0; t < points; ++t) {
      for (; s <= 2 * t; ++s) running += extended[s];
      next[t] = running;
    }
    level = std::move(next);
  }
  // 2^k = either a single part 2^k or parts <= 2^(k-1).
  auto values = extrapolate(level, 2);
  return values[0] + values[1];
}

}  // namespace bsw
