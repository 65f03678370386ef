#include <gtest/gtest.h>

#include <random>

#include "kagaskit/m2.hpp"
#include "kagaskit/preprocess.hpp"
#include "kagaskit/utf8.hpp"
#include "test_support.hpp"

using namespace kagaskit;
using m2::SystemEdit;
namespace kt = kagaskit::testing;

namespace {

const char* kTwoAnnotators =
    "S 이옷은 더러워요 .\n"
    "A 0 1|||WS|||이 옷은|||REQUIRED|||-NONE-|||0\n"
    "A 2 3|||PUNCT|||-NONE-|||REQUIRED|||-NONE-|||0\n"
    "A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||1\n"
    "\n"
    "S 저는 학교에 갔어요\n"
    "A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n"
    "\n";

}  // namespace

TEST(M2, ParseAndFormatRoundTrip) {
  auto docs = m2::parse_m2(kTwoAnnotators);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].source.size(), 3u);
  EXPECT_EQ(docs[0].annotators(), (std::vector<int>{0, 1}));
  auto e0 = docs[0].edits_of(0);
  ASSERT_EQ(e0.size(), 2u);
  EXPECT_EQ(e0[0].correction, "이 옷은");
  EXPECT_EQ(e0[1].correction, "");  // deletion
  EXPECT_TRUE(docs[0].edits_of(1).empty());
  // deletions are written with an empty correction
  std::string expected = kTwoAnnotators;
  expected.replace(expected.find("PUNCT|||-NONE-"), 14, "PUNCT|||");
  EXPECT_EQ(m2::format_documents(docs), expected);
  EXPECT_EQ(m2::parse_m2(m2::format_documents(docs)), docs);
}

TEST(M2, ParseErrors) {
  EXPECT_THROW(m2::parse_m2("A 0 1|||X|||y|||REQUIRED|||-NONE-|||0\n"), m2::ParseError);
  EXPECT_THROW(m2::parse_m2("S a b\nA 0 1|||X\n\n"), m2::ParseError);
  EXPECT_THROW(m2::parse_m2("S a b\nA x 1|||X|||y|||REQUIRED|||-NONE-|||0\n\n"), m2::ParseError);
  EXPECT_THROW(m2::parse_m2("S a b\nA 2 1|||X|||y|||REQUIRED|||-NONE-|||0\n\n"), m2::ParseError);
  EXPECT_THROW(m2::parse_m2("S a b\nA 0 5|||X|||y|||REQUIRED|||-NONE-|||0\n\n"), m2::ParseError);
  try {
    m2::parse_m2("S a\n\nS b\nQ nonsense\n");
    FAIL();
  } catch (const m2::ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(M2, ApplyAnnotations) {
  auto docs = m2::parse_m2(kTwoAnnotators);
  EXPECT_EQ(m2::apply_annotations(docs[0], 0), (align::Tokens{"이", "옷은", "더러워요"}));
  EXPECT_EQ(m2::apply_annotations(docs[0], 1), docs[0].source);
}

TEST(M2, EmitAndReapply) {
  kt::BundledAnnotator b;
  m2::SentencePairs pairs;
  for (const auto& r : kt::read_tsv(kt::fixture_path("golden_types.tsv"))) pairs.emplace_back(r[1], r[2]);
  auto docs = m2::parse_m2(m2::emit_m2(b.annotator, pairs));
  ASSERT_EQ(docs.size(), pairs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    EXPECT_EQ(text::join(m2::apply_annotations(docs[i], 0)),
              text::join(align::tokenize(preprocess::normalize_punct_spacing(pairs[i].second))));
  }
}

TEST(M2, NoEditsGiveNoop) {
  auto d = m2::make_document({"a", "b"}, {});
  ASSERT_EQ(d.annotations.size(), 1u);
  EXPECT_TRUE(d.annotations[0].is_noop());
  EXPECT_EQ(m2::format_document(d), "S a b\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n\n");
}

TEST(Scorer, FBetaIdentity) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = u(rng), r = u(rng);
    worst = std::max(worst, std::abs(m2::f_beta(p, r) - kt::direct_f_beta(p, r, 0.5)));
  }
  EXPECT_LT(worst, 1e-12);
  EXPECT_EQ(m2::f_beta(0.0, 0.0), 0.0);
  EXPECT_NEAR(m2::f_beta(0.5, 1.0), 0.5555555, 1e-6);
  EXPECT_EQ(m2::percent(m2::f_beta(0.5, 1.0)), "55.56");
}

TEST(Scorer, Conventions) {
  auto s = m2::make_scores({});
  EXPECT_EQ(s.precision, 1.0);
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.f_half, 0.0);
  s = m2::make_scores({0, 0, 3});
  EXPECT_EQ(s.precision, 1.0);
  EXPECT_EQ(s.recall, 0.0);
}

TEST(Scorer, HalfPrecisionFullRecall) {
  auto gold = m2::parse_m2(
      "S a b c\nA 0 1|||NOUN|||x|||REQUIRED|||-NONE-|||0\n\n");
  std::vector<std::vector<SystemEdit>> sys = {{{0, 1, "x", "NOUN"}, {2, 3, "z", "PART"}}};
  auto r = m2::score_edits(sys, gold);
  EXPECT_EQ(r.overall.counts, (m2::Counts{1, 1, 0}));
  EXPECT_EQ(m2::percent(r.overall.f_half), "55.56");
  EXPECT_EQ(r.per_type.at("NOUN").counts, (m2::Counts{1, 0, 0}));
  EXPECT_EQ(r.per_type.at("PART").counts, (m2::Counts{0, 1, 0}));
}

TEST(Scorer, TypeAgnosticMatch) {
  auto gold = m2::parse_m2("S a b\nA 0 1|||NOUN|||x|||REQUIRED|||-NONE-|||0\n\n");
  auto r = m2::score_edits({{{0, 1, "x", "VERB"}}}, gold);
  EXPECT_EQ(r.overall.counts, (m2::Counts{1, 0, 0}));
  EXPECT_EQ(r.per_type.at("NOUN").counts.tp, 1u);  // credited to the gold type
}

TEST(Scorer, BestAnnotator) {
  auto gold = m2::parse_m2(
      "S a b c\n"
      "A 0 1|||NOUN|||x|||REQUIRED|||-NONE-|||0\n"
      "A 1 2|||NOUN|||y|||REQUIRED|||-NONE-|||0\n"
      "A 2 3|||NOUN|||z|||REQUIRED|||-NONE-|||1\n\n");
  auto r = m2::score_edits({{{2, 3, "z", "NOUN"}}}, gold);
  EXPECT_EQ(r.overall.counts, (m2::Counts{1, 0, 0}));
  // nothing proposed: both annotators give F 0; fewer FN wins
  r = m2::score_edits({{}}, gold);
  EXPECT_EQ(r.overall.counts, (m2::Counts{0, 0, 1}));
}

TEST(Scorer, SelfScore) {
  kt::BundledAnnotator b;
  m2::SentencePairs pairs;
  std::vector<std::string> sources;
  for (const auto& r : kt::read_tsv(kt::fixture_path("golden_types.tsv"))) {
    pairs.emplace_back(r[1], r[2]);
  }
  auto gold = m2::parse_m2(m2::emit_m2(b.annotator, pairs));
  for (const auto& d : gold) sources.push_back(text::join(d.source));
  auto r = m2::score(b.annotator, sources, gold);
  EXPECT_EQ(m2::percent(r.overall.precision), "100.00");
  EXPECT_EQ(m2::percent(r.overall.recall), "0.00");
  EXPECT_EQ(m2::percent(r.overall.f_half), "0.00");
  EXPECT_EQ(r.overall.counts.fn, 14u);
}

TEST(Scorer, PerfectHypothesis) {
  kt::BundledAnnotator b;
  m2::SentencePairs pairs;
  std::vector<std::string> hyps;
  for (const auto& r : kt::read_tsv(kt::fixture_path("golden_types.tsv"))) {
    pairs.emplace_back(r[1], r[2]);
    hyps.push_back(r[2]);
  }
  auto gold = m2::parse_m2(m2::emit_m2(b.annotator, pairs));
  auto r = m2::score(b.annotator, hyps, gold);
  EXPECT_EQ(r.overall.counts, (m2::Counts{14, 0, 0}));
  EXPECT_THROW(m2::score(b.annotator, {"x"}, gold), m2::InputError);
}

TEST(Scorer, ReportLayout) {
  m2::ScoreReport r;
  r.per_type["NOUN"] = m2::make_scores({1, 1, 0});
  r.overall = m2::make_scores({1, 1, 0});
  EXPECT_EQ(m2::format_report(r),
            "type\ttp\tfp\tfn\tP\tR\tF0.5\n"
            "NOUN\t1\t1\t0\t50.00\t100.00\t55.56\n"
            "overall\t1\t1\t0\t50.00\t100.00\t55.56\n");
}
