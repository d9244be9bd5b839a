#include "bsw/partitions.hpp"

#include <set>

#include <gtest/gtest.h>

#include "bsw/errors.hpp"
#include "oracles.hpp"

namespace bsw {
namespace {

std::vector<std::uint64_t> parts_of(const CopyPartition& p) {
  std::vector<std::uint64_t> parts;
  for (std::size_t j = p.counts.size(); j-- > 0;)
    for (std::uint32_t c = 0; c < p.counts[j]; ++c)
      parts.push_back(std::uint64_t{1} << j);
  return parts;
}

TEST(EnumeratePartitions, SinglePartitionOfOne) {
  const auto all = enumerate_partitions(0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].counts, std::vector<std::uint32_t>{1});
  EXPECT_EQ(all[0].label(), "{1}");
}

TEST(EnumeratePartitions, FourCopiesInCanonicalOrder) {
  const auto all = enumerate_partitions(2);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0].label(), "{4}");
  EXPECT_EQ(all[1].label(), "{2,2}");
  EXPECT_EQ(all[2].label(), "{2,1,1}");
  EXPECT_EQ(all[3].label(), "{1,1,1,1}");
}

TEST(EnumeratePartitions, TableSizes) {
  EXPECT_EQ(enumerate_partitions(3).size(), 10u);
  EXPECT_EQ(enumerate_partitions(6).size(), 1828u);
}

TEST(EnumeratePartitions, RejectsAboveCeiling) {
  EXPECT_THROW(enumerate_partitions(9), CeilingError);
}

TEST(EnumeratePartitions, ConservedDistinctAndDecreasing) {
  for (int k = 0; k <= 7; ++k) {
    const auto all = enumerate_partitions(k);
    std::set<std::vector<std::uint32_t>> unique;
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(all[i].total(), std::uint64_t{1} << k);
      EXPECT_GE(all[i].holders(), 1u);
      unique.insert(all[i].counts);
      if (i > 0) {
        // Lexicographically decreasing on (a_k, ..., a_0).
        std::vector<std::uint32_t> prev(all[i - 1].counts.rbegin(),
                                        all[i - 1].counts.rend());
        std::vector<std::uint32_t> cur(all[i].counts.rbegin(),
                                       all[i].counts.rend());
        EXPECT_GT(prev, cur);
      }
    }
    EXPECT_EQ(unique.size(), all.size());
    EXPECT_EQ(all.front().counts[k], 1u);
  }
}

TEST(EnumeratePartitions, MatchesBruteForceOracle) {
  for (int k = 0; k <= 4; ++k) {
    std::set<std::vector<std::uint64_t>> expected;
    for (auto& p : oracle::binary_partitions(std::uint64_t{1} << k))
      expected.insert(p);
    std::set<std::vector<std::uint64_t>> actual;
    for (const auto& p : enumerate_partitions(k)) actual.insert(parts_of(p));
    EXPECT_EQ(actual, expected) << "k=" << k;
  }
}

TEST(CountPartitions, TableValues) {
  EXPECT_EQ(count_partitions(0), 1);
  EXPECT_EQ(count_partitions(1), 2);
  EXPECT_EQ(count_partitions(2), 4);
  EXPECT_EQ(count_partitions(3), 10);
  EXPECT_EQ(count_partitions(4), 36);
  EXPECT_EQ(count_partitions(5), 202);
  EXPECT_EQ(count_partitions(6), 1828);
  EXPECT_EQ(count_partitions(8), 692004);
}

TEST(CountPartitions, OneTwentyEightCopies) {
  // Established by both oracles below; one more than this is the state count.
  EXPECT_EQ(count_partitions(7), 27338);
}

TEST(CountPartitions, AgreesWithEnumeration) {
  for (int k = 0; k <= kMaxEnumerationExponent; ++k)
    EXPECT_EQ(count_partitions(k), enumerate_partitions(k).size()) << k;
}

TEST(CountPartitions, AgreesWithRecurrenceOracle) {
  using boost::multiprecision::cpp_int;
  const auto b = oracle::binary_partition_table<cpp_int>(std::uint64_t{1} << 16);
  for (int k = 0; k <= 16; ++k)
    EXPECT_EQ(count_partitions(k), b[std::uint64_t{1} << k]) << k;
}

TEST(CountPartitions, LargeExponentsNeedWideIntegers) {
  EXPECT_GT(count_partitions(14),
            boost::multiprecision::cpp_int(UINT64_MAX));
  EXPECT_GT(count_partitions(30), count_partitions(29));
  EXPECT_THROW(count_partitions(31), CeilingError);
}

}  // namespace
}  // namespace bsw
