#include "bsw/network.hpp"

#include <random>

#include <gtest/gtest.h>

#include "bsw/errors.hpp"

namespace bsw {
namespace {

NetworkSpec heterogeneous_case_one() {
  NetworkSpec spec;
  spec.node_count = 5;
  spec.source = 0;
  spec.destination = 4;
  spec.replication_factor = 4;
  for (NodeId i = 0; i < 5; ++i)
    for (NodeId j = i + 1; j < 5; ++j) spec.set_mean(i, j, 200.0);
  spec.set_mean(0, 1, 100.0);
  spec.set_mean(0, 2, 200.0);
  spec.set_mean(0, 3, 500.0);
  spec.erase_pair(0, 4);
  return spec;
}

TEST(ValidateSpec, HomogeneousSixNodes) {
  const auto view = validate_spec(NetworkSpec::full_contact(6, 50.0, 0, 5, 4));
  EXPECT_TRUE(view.is_homogeneous());
  EXPECT_TRUE(view.has_direct_contact());
  EXPECT_EQ(view.copy_exponent(), 2);
  for (NodeId i = 0; i < 6; ++i)
    for (NodeId j = 0; j < 6; ++j)
      EXPECT_DOUBLE_EQ(view.rate(i, j), i == j ? 0.0 : 0.02);
}

TEST(ValidateSpec, SmallestNetwork) {
  const auto view = validate_spec(NetworkSpec::full_contact(2, 1.0, 0, 1, 1));
  EXPECT_TRUE(view.is_homogeneous());
  EXPECT_EQ(view.rate(0, 1), 1.0);
  EXPECT_EQ(view.copy_exponent(), 0);
}

TEST(ValidateSpec, HeterogeneousWithoutDirectContact) {
  const auto view = validate_spec(heterogeneous_case_one());
  EXPECT_FALSE(view.is_homogeneous());
  EXPECT_FALSE(view.has_direct_contact());
  EXPECT_FALSE(view.uniform_rate());
  EXPECT_DOUBLE_EQ(view.rate(1, 0), 0.01);
  EXPECT_DOUBLE_EQ(view.rate(3, 0), 0.002);
  EXPECT_EQ(view.min_mean(), 100.0);
  EXPECT_EQ(view.max_mean(), 500.0);
}

TEST(ValidateSpec, HomogeneousWithoutDirectContactKeepsUniformRate) {
  auto spec = NetworkSpec::full_contact(6, 50.0, 0, 5, 4);
  spec.erase_pair(0, 5);
  const auto view = validate_spec(spec);
  EXPECT_FALSE(view.is_homogeneous());
  EXPECT_FALSE(view.has_direct_contact());
  ASSERT_TRUE(view.uniform_rate());
  EXPECT_DOUBLE_EQ(*view.uniform_rate(), 0.02);
}

TEST(ValidateSpec, Rejections) {
  auto base = NetworkSpec::full_contact(4, 10.0, 0, 3, 2);

  auto bad = base;
  bad.replication_factor = 3;
  EXPECT_THROW(validate_spec(bad), ConfigError);
  bad.replication_factor = 0;
  EXPECT_THROW(validate_spec(bad), ConfigError);

  bad = base;
  bad.node_count = 1;
  EXPECT_THROW(validate_spec(bad), ConfigError);

  bad = base;
  bad.destination = bad.source;
  EXPECT_THROW(validate_spec(bad), ConfigError);

  bad = base;
  bad.source = 7;
  EXPECT_THROW(validate_spec(bad), ConfigError);

  bad = base;
  bad.mean_intercontact[{1, 0}] = 11.0;  // (0,1) is 10
  EXPECT_THROW(validate_spec(bad), ConfigError);

  bad = base;
  bad.mean_intercontact[{1, 2}] = -1.0;
  EXPECT_THROW(validate_spec(bad), ConfigError);

  bad = base;
  bad.mean_intercontact[{2, 2}] = 1.0;
  EXPECT_THROW(validate_spec(bad), ConfigError);
}

TEST(ValidateSpec, ErrorNamesTheField) {
  auto spec = NetworkSpec::full_contact(4, 10.0, 0, 3, 6);
  try {
    validate_spec(spec);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("power of two"),
              std::string::npos);
  }
}

TEST(ValidateSpec, BothOrientationsAgreeingIsAccepted) {
  auto spec = NetworkSpec::full_contact(3, 10.0, 0, 2, 2);
  spec.mean_intercontact[{1, 0}] = 10.0;
  EXPECT_NO_THROW(validate_spec(spec));
}

// Random specs: rate * mean == 1 and validation is idempotent.
TEST(ValidateSpec, RateInvertsMeanAndIsIdempotent) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mean(0.5, 5000.0);
  std::bernoulli_distribution present(0.6);
  for (int trial = 0; trial < 200; ++trial) {
    NetworkSpec spec;
    spec.node_count = 2 + trial % 9;
    spec.source = 0;
    spec.destination = spec.node_count - 1;
    spec.replication_factor = std::size_t{1} << (trial % 5);
    for (NodeId i = 0; i < spec.node_count; ++i)
      for (NodeId j = i + 1; j < spec.node_count; ++j)
        if (present(rng)) spec.set_mean(i, j, mean(rng));
    const auto view = validate_spec(spec);
    for (NodeId i = 0; i < spec.node_count; ++i) {
      EXPECT_EQ(view.rate(i, i), 0.0);
      for (NodeId j = 0; j < spec.node_count; ++j) {
        EXPECT_EQ(view.rate(i, j), view.rate(j, i));
        if (auto m = spec.mean(i, j))
          EXPECT_NEAR(view.rate(i, j) * *m, 1.0, 1e-12);
        else
          EXPECT_EQ(view.rate(i, j), 0.0);
      }
    }
    if (view.is_homogeneous()) EXPECT_TRUE(view.has_direct_contact());
    EXPECT_EQ(validate_spec(view.to_spec()), view);
  }
}

}  // namespace
}  // namespace bsw
