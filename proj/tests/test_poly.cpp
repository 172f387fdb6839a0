#include <gtest/gtest.h>

#include "chargelab/chain.hpp"
#include "chargelab/errors.hpp"
#include "chargelab/macdonald.hpp"
#include "oracles.hpp"

using namespace chargelab;

namespace {

LaurentPoly from_qpoly(const oracle::QPoly& q, int nvars, const std::vector<int>& x) {
  LaurentPoly out(nvars);
  for (std::size_t d = 0; d < q.size(); ++d)
    if (q[d]) out.add_term(static_cast<int>(d), x, q[d]);
  return out;
}

void compositions(int remaining, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int p = 0; p <= remaining; ++p) {
    cur.push_back(p);
    compositions(remaining - p, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(Poly, Arithmetic) {
  const LaurentPoly x = LaurentPoly::monomial(2, 0, {1, 0});
  const LaurentPoly y = LaurentPoly::monomial(2, 0, {0, 1});
  const LaurentPoly q = LaurentPoly::monomial(2, 1, {0, 0});
  const LaurentPoly p = (x + y) * (x - y);
  EXPECT_EQ(to_string(p), "x1^2 - x2^2");
  EXPECT_EQ(to_string(q * x + x), "x1 + q*x1");
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(to_string(LaurentPoly(2)), "0");
  EXPECT_EQ(p.coefficient(0, {2, 0}), 1);
  EXPECT_EQ(p.coefficient(0, {1, 1}), 0);
  EXPECT_EQ(to_string(LaurentPoly::monomial(1, 0, {-2}, 3)), "3*x1^-2");
  EXPECT_EQ(evaluate_at_ones(specialize_q(q * q + x, 2)), 5);
  EXPECT_EQ((q * q + x).max_q_degree(), 2);
  EXPECT_EQ(to_string((q * q + x).q_part(2)), "1");
}

TEST(Poly, VariableCountMismatchIsRejected) {
  LaurentPoly p(2);
  EXPECT_ANY_THROW(p.add_term(0, {1, 2, 3}, 1));
}

TEST(Poly, ExactDivision) {
  const LaurentPoly x = LaurentPoly::monomial(2, 0, {1, 0});
  const LaurentPoly y = LaurentPoly::monomial(2, 0, {0, 1});
  EXPECT_EQ(exact_divide(x * x - y * y, x - y), x + y);
  EXPECT_THROW(exact_divide(x * x + y, x - y), InternalError);
}

TEST(Poly, WeylAction) {
  const LieType c2(Family::C, 2);
  const LaurentPoly x = LaurentPoly::monomial(2, 0, {1, 0});
  const WeylElement w = parse_weyl_element(c2, "2b1");
  EXPECT_EQ(x.act(w), LaurentPoly::monomial(2, 0, {0, -1}));
}

TEST(Macdonald, SmallExamples) {
  const LieType a3(Family::A, 3), c2(Family::C, 2), c1(Family::C, 1);
  const LaurentPoly pa = ram_yip_t0(a3, dominant_weight(a3, {2, 1}));
  EXPECT_EQ(pa, weyl_character(a3, {2, 1, 0}) + weyl_character(a3, {1, 1, 1}) * LaurentPoly::monomial(3, 1, {0, 0, 0}));
  const LaurentPoly pc = ram_yip_t0(c2, dominant_weight(c2, {2, 1}));
  EXPECT_EQ(pc, weyl_character(c2, {2, 1}) + weyl_character(c2, {1, 0}) * LaurentPoly::monomial(2, 1, {0, 0}));
  EXPECT_EQ(to_string(ram_yip_t0(c1, {1})), "x1 + x1^-1");
}

TEST(Macdonald, DominanceValidation) {
  const LieType a3(Family::A, 3), c2(Family::C, 2);
  EXPECT_THROW(weyl_character(a3, {1, 2, 0}), ValidationError);
  EXPECT_THROW(weyl_character(c2, {1, -1}), ValidationError);
  EXPECT_THROW(dominant_weight(a3, {1, 2}), ValidationError);
}

class RowShapes : public ::testing::TestWithParam<int> {};

TEST_P(RowShapes, CoefficientsAreQMultinomials) {
  const int n = GetParam();
  const LieType type(Family::A, n);
  for (int r = 1; r <= 4; ++r) {
    LaurentPoly expected(n);
    std::vector<int> cur;
    std::vector<std::vector<int>> alphas;
    compositions(r, n, cur, alphas);
    for (const auto& alpha : alphas) expected += from_qpoly(oracle::qmultinomial(alpha), n, alpha);
    EXPECT_EQ(ram_yip_t0(type, dominant_weight(type, {r})), expected) << "r=" << r;
    EXPECT_EQ(charge_formula_t0(type, dominant_weight(type, {r})), expected) << "r=" << r;
  }
}

INSTANTIATE_TEST_SUITE_P(Ranks, RowShapes, ::testing::Values(2, 3, 4));

TEST(Macdonald, RankOneClosedForm) {
  const LieType c1(Family::C, 1);
  for (int m = 1; m <= 6; ++m) {
    LaurentPoly expected(1);
    for (int k = 0; k <= m; ++k) expected += from_qpoly(oracle::qbinomial(m, k), 1, {m - 2 * k});
    EXPECT_EQ(ram_yip_t0(c1, {m}), expected) << "m=" << m;
    EXPECT_EQ(charge_formula_t0(c1, {m}), expected) << "m=" << m;
  }
}

class Characters : public ::testing::TestWithParam<std::pair<Family, int>> {};

TEST_P(Characters, WeylCharacterMatchesIndependentFormulas) {
  const LieType type(GetParam().first, GetParam().second);
  for (const auto& parts : oracle::partitions_up_to(4, type.n())) {
    Weight padded(parts.begin(), parts.end());
    padded.resize(static_cast<std::size_t>(type.n()), 0);
    const LaurentPoly chi = weyl_character(type, padded);
    EXPECT_EQ(evaluate_at_ones(chi), oracle::weyl_dimension(type, parts));
    EXPECT_TRUE(is_weyl_invariant(type, chi));
    if (type.is_a()) {
      EXPECT_EQ(chi, oracle::schur(parts, type.n()));
    }
  }
}

TEST_P(Characters, BothFormulasAgreeAndSpecializeToTheCharacter) {
  const LieType type(GetParam().first, GetParam().second);
  const int max_parts = type.is_a() ? type.n() - 1 : type.n();
  for (const auto& parts : oracle::partitions_up_to(3, max_parts)) {
    const Weight mu = dominant_weight(type, parts);
    const LaurentPoly p = ram_yip_t0(type, mu);
    EXPECT_EQ(p, charge_formula_t0(type, mu, 3));
    EXPECT_EQ(specialize_q(p, 0), weyl_character(type, mu));
    EXPECT_EQ(evaluate_at_ones(specialize_q(p, 1)), oracle::b_mu_size(type, parts));
    EXPECT_TRUE(is_weyl_invariant(type, p));
    for (const auto& [key, c] : p.terms()) EXPECT_GT(c, 0);

    LaurentPoly reassembled(type.n());
    bool top_found = false;
    for (const CharacterTerm& t : character_decomposition(type, p)) {
      for (const auto& [key, c] : t.multiplicity.terms()) EXPECT_GT(c, 0);
      reassembled += weyl_character(type, t.lambda) * t.multiplicity;
      if (weights_equal(type, t.lambda, mu)) {
        top_found = true;
        EXPECT_EQ(t.multiplicity, LaurentPoly::monomial(type.n(), 0, Weight(static_cast<std::size_t>(type.n()), 0)));
      }
    }
    EXPECT_TRUE(top_found);
    EXPECT_EQ(reassembled, p);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, Characters,
                         ::testing::Values(std::pair{Family::A, 2}, std::pair{Family::A, 3}, std::pair{Family::A, 4},
                                           std::pair{Family::C, 1}, std::pair{Family::C, 2}, std::pair{Family::C, 3}));
