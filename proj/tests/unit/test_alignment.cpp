#include <gtest/gtest.h>

#include <random>

#include "kagaskit/alignment.hpp"
#include "test_support.hpp"

using namespace kagaskit;
using align::OpKind;
using align::Tokens;
namespace kt = kagaskit::testing;

namespace {

double unit_sub(const std::string&, const std::string&) { return 1.0; }

}  // namespace

TEST(Alignment, Tokenize) {
  EXPECT_EQ(align::tokenize("  저는  학교에 갔어요 . "), (Tokens{"저는", "학교에", "갔어요", "."}));
  EXPECT_TRUE(align::tokenize("").empty());
}

TEST(Alignment, SimpleOps) {
  auto a = align::align({"a", "b", "c"}, {"a", "c"}, unit_sub);
  EXPECT_DOUBLE_EQ(a.cost, 1.0);
  a = align::align({"a", "b"}, {"b", "a"}, unit_sub);
  EXPECT_DOUBLE_EQ(a.cost, 1.0);
  ASSERT_EQ(a.ops.size(), 1u);
  EXPECT_EQ(a.ops[0].kind, OpKind::kTranspose);
  a = align::align({}, {}, unit_sub);
  EXPECT_DOUBLE_EQ(a.cost, 0.0);
  EXPECT_TRUE(a.ops.empty());
}

TEST(Alignment, TiesPreferSubstitution) {
  auto a = align::align({"x"}, {"y"}, unit_sub);
  ASSERT_EQ(a.ops.size(), 1u);
  EXPECT_EQ(a.ops[0].kind, OpKind::kSubstitute);
}

TEST(Alignment, OpsCoverBothSides) {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto o = kt::random_sentence(rng, 7);
    auto c = kt::perturb(rng, o, 7);
    auto a = align::align(o, c, unit_sub);
    std::size_t oi = 0, ci = 0;
    for (const auto& op : a.ops) {
      ASSERT_EQ(op.o_start, oi);
      ASSERT_EQ(op.c_start, ci);
      oi = op.o_end;
      ci = op.c_end;
    }
    EXPECT_EQ(oi, o.size());
    EXPECT_EQ(ci, c.size());
    EXPECT_NEAR(align::alignment_cost(a.ops, o, c, unit_sub), a.cost, 1e-9);
  }
}

TEST(Alignment, MatchesBruteForceUnitCost) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto o = kt::random_sentence(rng, 6);
    auto c = kt::perturb(rng, o, 6);
    ASSERT_NEAR(align::align(o, c, unit_sub).cost, kt::brute_force_alignment_cost(o, c, unit_sub),
                1e-9);
  }
}

TEST(Alignment, MatchesBruteForceLinguisticCost) {
  kt::BundledAnnotator b;
  auto sub = b.annotator.cost_model().as_function();
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto o = kt::random_sentence(rng, 6);
    auto c = kt::perturb(rng, o, 6);
    ASSERT_NEAR(align::align(o, c, sub).cost, kt::brute_force_alignment_cost(o, c, sub), 1e-9);
  }
}

TEST(CostModel, Components) {
  kt::BundledAnnotator b;
  auto& cm = b.annotator.cost_model();
  // same tags, different lemma
  auto c = cm.components("학교에", "친구에");
  EXPECT_DOUBLE_EQ(c.pos, 0.0);
  EXPECT_DOUBLE_EQ(c.lemma, 0.5);
  // same content lemma, different particle
  c = cm.components("학교에", "학교에서");
  EXPECT_DOUBLE_EQ(c.lemma, 0.0);
  EXPECT_GT(c.jamo, 0.0);
  EXPECT_LE(c.jamo, 1.0);
  for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{
           {"저는", "."}, {"학교에", "갔어요"}, {"이", "옷은"}}) {
    auto k = cm.components(x, y);
    EXPECT_TRUE(k.pos == 0.0 || k.pos == 0.25 || k.pos == 0.5);
    EXPECT_GE(k.jamo, 0.0);
    EXPECT_LE(k.jamo, 1.0);
    EXPECT_NEAR(cm.substitution_cost(x, y), k.total(), 1e-12);
    EXPECT_NEAR(cm.substitution_cost(x, y), cm.substitution_cost(y, x), 1e-12);
  }
}

TEST(Edits, WordSpacingAndOrder) {
  EXPECT_TRUE(align::is_word_spacing({"이옷은"}, {"이", "옷은"}));
  EXPECT_TRUE(align::is_word_spacing({"학교", "에"}, {"학교에"}));
  EXPECT_FALSE(align::is_word_spacing({"학교에"}, {"학교에"}));
  EXPECT_FALSE(align::is_word_spacing({"학교에"}, {"학교", "로"}));
  EXPECT_TRUE(align::is_word_order({"더", "한국어를"}, {"한국어를", "더"}));
  EXPECT_FALSE(align::is_word_order({"더"}, {"더"}));
  EXPECT_FALSE(align::is_word_order({"a", "b"}, {"a", "b"}));
}

TEST(Edits, MergesSpacing) {
  Tokens o{"이옷은", "더러워요", "."};
  Tokens c{"이", "옷은", "더러워요", "."};
  auto a = align::align(o, c, unit_sub);
  auto edits = align::extract_edits(a.ops, o, c);
  ASSERT_EQ(edits.size(), 1u);
  EXPECT_EQ(edits[0].o_start, 0u);
  EXPECT_EQ(edits[0].o_end, 1u);
  EXPECT_EQ(edits[0].c_toks, (Tokens{"이", "옷은"}));
  ASSERT_TRUE(edits[0].type);
  EXPECT_EQ(*edits[0].type, ErrorType::kWs);
}

TEST(Edits, RoundTrip) {
  kt::BundledAnnotator b;
  auto sub = b.annotator.cost_model().as_function();
  std::mt19937 rng(41);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    auto o = kt::random_sentence(rng, 8);
    auto c = i % 2 ? kt::perturb(rng, o, 8) : kt::random_sentence(rng, 8);
    auto a = align::align(o, c, sub);
    auto edits = align::extract_edits(a.ops, o, c);
    if (align::apply_edits(o, edits) != c) ++failures;
    for (std::size_t k = 1; k < edits.size(); ++k) {
      ASSERT_LE(edits[k - 1].o_end, edits[k].o_start);
    }
  }
  EXPECT_EQ(failures, 0);
}
