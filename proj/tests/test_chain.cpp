#include <gtest/gtest.h>

#include <map>

#include "chargelab/chain.hpp"
#include "chargelab/errors.hpp"
#include "oracles.hpp"

using namespace chargelab;

TEST(Chain, TypeAExample) {
  const LieType a4(Family::A, 4);
  const MuChain c = MuChain::build(a4, dominant_weight(a4, {3, 2, 1}));
  EXPECT_EQ(to_string(c), "((1,4),(1,3),(1,2) | (1,4),(1,3),(2,4),(2,3) | (1,4),(2,4),(3,4))");
  EXPECT_EQ(c.size(), 10);
  EXPECT_EQ(c.root(6), RootLabel::diff(2, 4));
  EXPECT_EQ(c.level(6), 1);
  EXPECT_EQ(c.level(8), 3);
  EXPECT_EQ(c.column_heights(), (Partition{3, 2, 1}));
}

TEST(Chain, TypeCExample) {
  const LieType c3(Family::C, 3);
  const MuChain c = MuChain::build(c3, dominant_weight(c3, {2, 1}));
  EXPECT_EQ(to_string(c),
            "( | (1,2̄),(1,3̄),(1,1̄),(1,3),(1,2) || (1,2̄) | (1,3̄),(1,1̄),(1,3),(1,2̄),(2,3̄),(2,2̄),(2,3))");
  EXPECT_EQ(c.size(), 13);
  const ChainPart& right1 = c.part(1, PartKind::Right);
  EXPECT_EQ(right1.first, 6);
  EXPECT_EQ(right1.last, 6);
  EXPECT_EQ(c.find(c.part(1, PartKind::Left), RootLabel::twice(2)), 12);
  EXPECT_EQ(c.find(c.part(1, PartKind::Left), RootLabel::twice(3)), 0);
}

TEST(Chain, OmegaChainLengths) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      EXPECT_EQ(static_cast<int>(omega_chain(LieType(Family::A, n), k).size()), k * (n - k));
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      const LieType c(Family::C, n);
      EXPECT_EQ(static_cast<int>(omega_chain(c, k).size()), 2 * k * n - k * k);
      EXPECT_EQ(omega_chain_right(c, k).size(), static_cast<std::size_t>(k * (k - 1) / 2));
    }
}

TEST(Chain, DominantWeightValidation) {
  const LieType a4(Family::A, 4), c2(Family::C, 2);
  EXPECT_EQ(dominant_weight(a4, {2, 1}), (Weight{2, 1, 0, 0}));
  EXPECT_EQ(dominant_weight(a4, {2, 1, 0}), (Weight{2, 1, 0, 0}));
  EXPECT_THROW(dominant_weight(a4, {1, 2}), ValidationError);
  EXPECT_THROW(dominant_weight(a4, {1, 1, 1, 1}), ValidationError);
  EXPECT_THROW(dominant_weight(a4, {2, -1}), ValidationError);
  EXPECT_EQ(dominant_weight(c2, {1, 1}), (Weight{1, 1}));
  EXPECT_THROW(dominant_weight(c2, {1, 1, 1}), ValidationError);
  try {
    dominant_weight(a4, {1, 2});
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.condition(), "dominance");
  }
}

TEST(Chain, Conjugate) {
  EXPECT_EQ(conjugate({3, 2, 1}), (Partition{3, 2, 1}));
  EXPECT_EQ(conjugate({4, 1}), (Partition{2, 1, 1, 1}));
  EXPECT_EQ(parse_int_list("3, 2,1"), (std::vector<int>{3, 2, 1}));
  EXPECT_THROW(parse_int_list("3,,x"), ValidationError);
}

// Shi's description of alcoves: integers k_α with k_α + k_β <= k_{α+β} <= k_α + k_β + 1,
// read on the coroot system since the walls are ⟨x, α∨⟩ = k.
bool shi_alcove(const LieType& type, const std::map<RootLabel, int>& k) {
  auto coroot = [&](RootLabel r) {
    Weight v(static_cast<std::size_t>(type.n()), 0);
    v[static_cast<std::size_t>(r.i - 1)] += 1;
    if (r.kind == RootKind::Diff) v[static_cast<std::size_t>(r.j - 1)] -= 1;
    if (r.kind == RootKind::Sum) v[static_cast<std::size_t>(r.j - 1)] += 1;
    return v;
  };
  const auto roots = positive_roots(type);
  for (RootLabel a : roots)
    for (RootLabel b : roots)
      for (RootLabel c : roots) {
        Weight sum = coroot(a);
        const Weight vb = coroot(b);
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += vb[t];
        if (sum != coroot(c)) continue;
        const int gap = k.at(c) - k.at(a) - k.at(b);
        if (gap < 0 || gap > 1) return false;
      }
  return true;
}

class ChainSweep : public ::testing::TestWithParam<std::pair<Family, int>> {};

TEST_P(ChainSweep, ReducedAlcovePathToTranslate) {
  const LieType type(GetParam().first, GetParam().second);
  const int max_parts = type.is_a() ? type.n() - 1 : type.n();
  for (const auto& parts : oracle::partitions_up_to(6, max_parts)) {
    const Weight mu = dominant_weight(type, parts);
    const MuChain chain = MuChain::build(type, mu);
    std::map<RootLabel, int> k;
    for (RootLabel r : positive_roots(type)) k[r] = 0;
    for (int pos = 1; pos <= chain.size(); ++pos) {
      const RootLabel r = chain.root(pos);
      EXPECT_EQ(chain.level(pos), ++k[r]);
      EXPECT_TRUE(shi_alcove(type, k)) << "position " << pos;
    }
    // the straight segment from A° to A° + μ crosses ⟨μ,α∨⟩ walls of each direction
    for (RootLabel r : positive_roots(type)) EXPECT_EQ(k[r], coroot_pairing(type, mu, r)) << to_string(r);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, ChainSweep,
                         ::testing::Values(std::pair{Family::A, 3}, std::pair{Family::A, 4}, std::pair{Family::A, 5},
                                           std::pair{Family::C, 2}, std::pair{Family::C, 3}, std::pair{Family::C, 4}));

TEST(Chain, FromRootsKeepsLevels) {
  const LieType a3(Family::A, 3);
  const MuChain c = MuChain::from_roots(a3, {3, 1, 0},
                                        {RootLabel::diff(1, 3), RootLabel::diff(1, 2), RootLabel::diff(1, 3),
                                         RootLabel::diff(2, 3), RootLabel::diff(1, 3), RootLabel::diff(1, 2)});
  EXPECT_EQ(c.size(), 6);
  EXPECT_EQ(c.level(5), 3);
  EXPECT_EQ(c.level(6), 2);
}
