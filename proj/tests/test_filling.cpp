#include <gtest/gtest.h>

#include "chargelab/errors.hpp"
#include "chargelab/filling.hpp"
#include "oracles.hpp"

using namespace chargelab;

namespace {
Filling columns(const LieType& type, std::initializer_list<const char*> cols) {
  Filling f{type, {}};
  for (const char* c : cols) f.columns.push_back(parse_column(c));
  return f;
}
}  // namespace

TEST(Filling, TypeAExample) {
  const LieType a4(Family::A, 4);
  const MuChain c = MuChain::build(a4, dominant_weight(a4, {3, 2, 1}));
  const Filling f = filling_map(c, {WeylElement::from_values(a4, {2, 1, 3, 4}), {3, 6, 7, 9, 10}});
  EXPECT_EQ(f, columns(a4, {"2", "1,2", "1,3,4"}));
  EXPECT_EQ(pretty(f), "2 1 1\n  2 3\n    4\n");
  EXPECT_EQ(shape(f), (Partition{3, 2, 1, 0}));
  EXPECT_TRUE(weights_equal(a4, content(f), {2, 2, 1, 1}));
}

TEST(Filling, TypeCExample) {
  const LieType c3(Family::C, 3);
  const MuChain c = MuChain::build(c3, dominant_weight(c3, {2, 1}));
  const Filling f = filling_map(c, {WeylElement::identity(c3), {3, 5, 6, 11, 12, 13}});
  EXPECT_EQ(f, columns(c3, {"1", "1", "2,-1", "1,-2"}));
  EXPECT_EQ(shape(f), (Partition{2, 1, 0}));
  EXPECT_EQ(column_heights(f), (Partition{2, 1}));
  EXPECT_EQ(content(f), (Weight{1, 0, 0}));
}

TEST(Filling, ContentParity) {
  const LieType c2(Family::C, 2);
  EXPECT_THROW(content(columns(c2, {"1", "2"})), ValidationError);
}

TEST(Filling, ValidationRejectsBadShapes) {
  const LieType a3(Family::A, 3), c2(Family::C, 2);
  EXPECT_THROW(validate_filling(columns(a3, {"1,2", "3"})), ValidationError);
  EXPECT_THROW(validate_filling(columns(a3, {"1,1"})), ValidationError);
  EXPECT_THROW(validate_filling(columns(a3, {"4"})), ValidationError);
  EXPECT_THROW(validate_filling(columns(c2, {"1"})), ValidationError);
  EXPECT_THROW(validate_filling(columns(c2, {"1", "1,2"})), ValidationError);
  EXPECT_NO_THROW(validate_filling(columns(c2, {"1", "-2", "1,2", "2,-1"})));
}

TEST(Filling, DescentsAndArmsOfTheTypeAExample) {
  const LieType a6(Family::A, 6);
  const Filling sigma = columns(a6, {"2", "4,2,1", "3,2,4", "3,5,6"});
  const auto des = descents(sigma);
  const std::vector<Cell> expected{{1, 1}, {2, 3}, {3, 2}, {3, 3}};
  EXPECT_EQ(des, expected);
  EXPECT_EQ(arm(sigma, {1, 1}), 1);
  EXPECT_EQ(arm(sigma, {3, 2}), 2);
  EXPECT_EQ(arm_statistic(sigma), 6);
}

TEST(Filling, TypeCDescentsOnlyCompareRightColumns) {
  const LieType c5(Family::C, 5);
  const Filling sigma = columns(c5, {"-2,1,3", "-3,1,2", "-4,-2,3", "-4,-3,2", "-5,-3,-2,-1", "-5,-3,-2,-1"});
  const std::vector<Cell> expected{{2, 2}, {2, 3}, {4, 3}};
  EXPECT_EQ(descents(sigma), expected);
  EXPECT_EQ(arm_statistic(sigma), 4);
}

TEST(Filling, ReconstructTypeAExample) {
  const LieType a6(Family::A, 6);
  const Filling tau = columns(a6, {"2", "1,2,4", "2,3,4", "3,5,6"});
  EXPECT_TRUE(in_b_mu(tau));
  EXPECT_EQ(reconstruct_sigma(tau), columns(a6, {"2", "4,2,1", "3,2,4", "3,5,6"}));
  EXPECT_EQ(ord(reconstruct_sigma(tau)), tau);
}

TEST(Filling, ImageViolations) {
  const LieType a3(Family::A, 3), c2(Family::C, 2);
  EXPECT_EQ(image_violation(columns(a3, {"1", "2,1"})), "first-column-increasing");
  EXPECT_EQ(image_violation(columns(a3, {"1", "1,2"})), "");
  EXPECT_EQ(image_violation(columns(a3, {"1,3", "3,2", "1,2"})), "condition-1");
  EXPECT_EQ(image_violation(columns(c2, {"1", "2"})), "kn-split");
}

class BMuSweep : public ::testing::TestWithParam<std::pair<Family, int>> {};

TEST_P(BMuSweep, SizeMatchesColumnProduct) {
  const LieType type(GetParam().first, GetParam().second);
  const int max_parts = type.is_a() ? type.n() - 1 : type.n();
  for (const auto& parts : oracle::partitions_up_to(4, max_parts)) {
    const auto b_mu = enumerate_b_mu(type, dominant_weight(type, parts));
    EXPECT_EQ(static_cast<std::int64_t>(b_mu.size()), oracle::b_mu_size(type, parts));
    for (const auto& tau : b_mu) {
      EXPECT_TRUE(in_b_mu(tau));
      EXPECT_EQ(ord(reconstruct_sigma(tau)), tau);
      EXPECT_EQ(image_violation(reconstruct_sigma(tau)), "");
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, BMuSweep,
                         ::testing::Values(std::pair{Family::A, 3}, std::pair{Family::A, 4}, std::pair{Family::C, 2},
                                           std::pair{Family::C, 3}));
