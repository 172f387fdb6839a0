#include <gtest/gtest.h>

#include "chargelab/qbg.hpp"
#include "oracles.hpp"

using namespace chargelab;

TEST(Qbg, ExampleEdges) {
  const LieType a3(Family::A, 3), c2(Family::C, 2);
  EXPECT_EQ(edge_by_length(WeylElement::from_values(a3, {1, 2, 3}), RootLabel::diff(1, 2)), EdgeKind::Up);
  EXPECT_EQ(edge_by_length(WeylElement::from_values(a3, {1, 2, 3}), RootLabel::diff(1, 3)), std::nullopt);
  EXPECT_EQ(edge_by_length(WeylElement::from_values(a3, {2, 1, 3}), RootLabel::diff(1, 3)), EdgeKind::Up);
  EXPECT_EQ(edge_by_length(WeylElement::from_values(a3, {3, 2, 1}), RootLabel::diff(1, 3)), EdgeKind::Quantum);
  EXPECT_EQ(edge_by_length(WeylElement::from_values(c2, {-2, -1}), RootLabel::diff(1, 2)), EdgeKind::Up);
  EXPECT_EQ(edge_by_length(WeylElement::from_values(c2, {-1, -2}), RootLabel::diff(1, 2)), EdgeKind::Quantum);
  EXPECT_EQ(edge_by_criterion(WeylElement::from_values(c2, {-1, -2}), RootLabel::diff(1, 2)), EdgeKind::Quantum);
}

class QbgSweep : public ::testing::TestWithParam<std::pair<Family, int>> {};

TEST_P(QbgSweep, EdgesMatchBruhatCoversAndQuantumDrops) {
  const LieType type(GetParam().first, GetParam().second);
  const auto dist = oracle::bfs_lengths(type);
  for (const auto& w : all_elements(type))
    for (RootLabel r : positive_roots(type)) {
      const WeylElement v = w.times(r);
      const int lw = dist.at(w.window()), lv = dist.at(v.window());
      std::optional<EdgeKind> expected;
      if (lv == lw + 1 && oracle::bruhat_leq(w, v)) expected = EdgeKind::Up;
      else if (lv == lw - 2 * rho_pairing(type, r) + 1) expected = EdgeKind::Quantum;
      EXPECT_EQ(edge_by_length(w, r), expected) << to_string(w) << " " << to_string(r);
      EXPECT_EQ(edge_by_criterion(w, r), expected) << to_string(w) << " " << to_string(r);
      if (type.is_c() && r.kind == RootKind::Sum) {
        EXPECT_NE(edge_by_criterion(w, r), EdgeKind::Quantum);
      }
    }
}

TEST_P(QbgSweep, EdgeListingMatchesPointwiseTests) {
  const LieType type(GetParam().first, GetParam().second);
  for (const auto& w : all_elements(type)) {
    std::size_t expected = 0;
    for (RootLabel r : positive_roots(type)) expected += edge_by_length(w, r).has_value();
    EXPECT_EQ(qbg_edges(w).size(), expected);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, QbgSweep,
                         ::testing::Values(std::pair{Family::A, 2}, std::pair{Family::A, 3}, std::pair{Family::A, 4},
                                           std::pair{Family::C, 1}, std::pair{Family::C, 2}, std::pair{Family::C, 3}));

TEST(Qbg, DotExport) {
  const std::string dot = qbg_to_dot(LieType(Family::A, 3));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("\"123\" -> \"213\""), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n') > 6, true);
}
