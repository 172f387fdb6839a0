#include <gtest/gtest.h>

#include <set>

#include "chargelab/errors.hpp"
#include "chargelab/macdonald.hpp"
#include "chargelab/serialize.hpp"

using namespace chargelab;

TEST(Serialize, ChainDocument) {
  const LieType a4(Family::A, 4);
  const MuChain c = MuChain::build(a4, dominant_weight(a4, {3, 2, 1}));
  const Json doc = chain_json(c);
  EXPECT_EQ(doc["schema"], "chargelab.chain/1");
  EXPECT_EQ(doc["type"], "A");
  ASSERT_EQ(doc["roots"].size(), 10u);
  EXPECT_EQ(doc["roots"][0]["label"], "(1,4)");
  EXPECT_EQ(doc["roots"][5]["position"], 6);
  EXPECT_EQ(doc["roots"][5]["label"], "(2,4)");
  EXPECT_EQ(doc["roots"][5]["level"], 1);
  EXPECT_EQ(doc["parts"].size(), 3u);
  EXPECT_EQ(doc["text"], to_string(c));
}

TEST(Serialize, FoldingPairDocument) {
  const LieType a4(Family::A, 4);
  const MuChain c = MuChain::build(a4, dominant_weight(a4, {3, 2, 1}));
  const Json doc = folding_pair_json(c, {WeylElement::from_values(a4, {2, 1, 3, 4}), {3, 6, 7, 9, 10}});
  EXPECT_EQ(doc["w"], Json({2, 1, 3, 4}));
  EXPECT_EQ(doc["Jplus"], Json({3, 7, 9, 10}));
  EXPECT_EQ(doc["Jminus"], Json({6}));
  EXPECT_EQ(doc["level"], 1);
}

TEST(Serialize, PolyDocument) {
  const LieType c1(Family::C, 1);
  const Json doc = poly_json(ram_yip_t0(c1, {2}));
  EXPECT_EQ(doc["schema"], "chargelab.poly/1");
  EXPECT_EQ(doc["nvars"], 1);
  EXPECT_EQ(doc["terms"].size(), 4u);
  EXPECT_EQ(doc["text"], "x1^2 + 1 + x1^-2 + q");
}

TEST(Serialize, QbgDocument) {
  const LieType a2(Family::A, 2);
  const Json doc = qbg_json(a2);
  EXPECT_EQ(doc["schema"], "chargelab.qbg/1");
  std::set<std::string> labels;
  for (const auto& node : doc["nodes"]) labels.insert(node["label"].get<std::string>());
  EXPECT_EQ(labels.size(), 2u);
  for (const auto& e : doc["edges"]) {
    EXPECT_TRUE(labels.count(e["from"].get<std::string>()));
    EXPECT_TRUE(labels.count(e["to"].get<std::string>()));
  }
}

TEST(Serialize, FillingRoundTrip) {
  const LieType c3(Family::C, 3);
  const Filling f{c3, {parse_column("1"), parse_column("1"), parse_column("2,-1"), parse_column("1,-2")}};
  const Json doc = filling_json(f, true);
  EXPECT_EQ(doc["shape"], Json({2, 1, 0}));
  EXPECT_EQ(filling_from_json(doc, LieType(Family::A, 2)), f);
}

TEST(Serialize, FillingFromKnColumns) {
  const Json doc = Json::parse(R"({"type": "C", "n": 3, "split": false, "columns": [["1"], ["2", "2b"]]})");
  const LieType c3(Family::C, 3);
  const Filling expected{c3, {parse_column("1"), parse_column("1"), parse_column("2,-1"), parse_column("1,-2")}};
  EXPECT_EQ(filling_from_json(doc, LieType(Family::A, 2)), expected);
}

TEST(Serialize, FillingUsesFallbackType) {
  const Json doc = Json::parse(R"({"columns": [[2], [1, 2]]})");
  const LieType a3(Family::A, 3);
  EXPECT_EQ(filling_from_json(doc, a3), (Filling{a3, {parse_column("2"), parse_column("1,2")}}));
}

TEST(Serialize, MalformedDocuments) {
  const LieType a3(Family::A, 3);
  for (const char* text : {R"({"rows": []})", R"({"columns": [[true]]})", R"({"columns": 3})"}) {
    try {
      filling_from_json(Json::parse(text), a3);
      FAIL() << text;
    } catch (const ValidationError& e) {
      EXPECT_EQ(e.condition(), "json") << text;
    }
  }
}
