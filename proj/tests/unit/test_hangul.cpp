#include <gtest/gtest.h>

#include <random>

#include "kagaskit/hangul.hpp"
#include "kagaskit/utf8.hpp"
#include "test_support.hpp"

using namespace kagaskit;
namespace kt = kagaskit::testing;

TEST(Hangul, RoundTripEverySyllable) {
  int failures = 0;
  for (char32_t c = hangul::kSyllableBase; c <= hangul::kSyllableLast; ++c) {
    auto d = hangul::decompose_syllable(c);
    const auto* s = std::get_if<hangul::Syllable>(&d);
    if (!s || hangul::compose_syllable(*s) != c) ++failures;
  }
  EXPECT_EQ(failures, 0);
  EXPECT_EQ(hangul::kSyllableCount, 11172);
}

TEST(Hangul, DecomposeMatchesArithmetic) {
  for (char32_t c = hangul::kSyllableBase; c <= hangul::kSyllableLast; c += 7) {
    auto s = std::get<hangul::Syllable>(hangul::decompose_syllable(c));
    auto o = kt::oracle_slots(c);
    ASSERT_EQ(s.choseong, o.l);
    ASSERT_EQ(s.jungseong, o.v);
    ASSERT_EQ(s.jongseong, o.t);
  }
}

TEST(Hangul, NonHangulPassesThrough) {
  auto d = hangul::decompose_syllable(U'a');
  ASSERT_TRUE(std::holds_alternative<hangul::NonHangul>(d));
  EXPECT_EQ(std::get<hangul::NonHangul>(d).cp, U'a');
  EXPECT_EQ(hangul::from_decomposed(hangul::to_decomposed("한국어 ABC 123.")), "한국어 ABC 123.");
}

TEST(Hangul, ComposeRejectsOutOfRange) {
  EXPECT_THROW(hangul::compose_syllable({19, 0, 0}), hangul::InvalidJamoError);
  EXPECT_THROW(hangul::compose_syllable({0, 21, 0}), hangul::InvalidJamoError);
  EXPECT_THROW(hangul::compose_syllable({0, 0, 28}), hangul::InvalidJamoError);
  EXPECT_THROW(hangul::compose_syllable({-1, 0, 0}), hangul::InvalidJamoError);
}

TEST(Hangul, LetterTables) {
  EXPECT_EQ(hangul::choseong_letter(0), U'ㄱ');
  EXPECT_EQ(hangul::jungseong_letter(hangul::jung::kWa), U'ㅘ');
  EXPECT_EQ(hangul::jongseong_letter(0), 0u);
  EXPECT_EQ(hangul::jongseong_letter(hangul::jong::kBieup), U'ㅂ');
  EXPECT_EQ(hangul::jongseong_index(U'ㅆ'), hangul::jong::kSsangSiot);
  EXPECT_EQ(hangul::choseong_index(U'ㅇ'), hangul::cho::kIeung);
}

TEST(Hangul, JamoRoundTrip) {
  for (std::string s : {"", "갔어요", "들어왔어요.", "1993년 , 겨울", "ㅋㅋ abc"}) {
    EXPECT_EQ(hangul::from_jamo(hangul::to_jamo(s)), s) << s;
  }
}

TEST(JamoDistance, SingleSlotIsOneThird) {
  EXPECT_EQ(hangul::jamo_distance_thirds("가", "각"), 1);  // jong
  EXPECT_EQ(hangul::jamo_distance_thirds("가", "거"), 1);  // jung
  EXPECT_EQ(hangul::jamo_distance_thirds("가", "나"), 1);  // cho
  EXPECT_DOUBLE_EQ(hangul::jamo_distance("가", "각"), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(hangul::jamo_distance("쳐요", "춰요"), 1.0 / 3.0);
  EXPECT_EQ(hangul::jamo_distance_thirds("가", "넉"), 3);
  EXPECT_EQ(hangul::jamo_distance_thirds("가", "a"), 3);
  EXPECT_EQ(hangul::jamo_distance_thirds("", "가나"), 6);
}

TEST(JamoDistance, MatchesOracle) {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto a = kt::random_hangul(rng, 6);
    auto b = kt::random_hangul(rng, 6);
    ASSERT_EQ(hangul::jamo_distance_thirds(a, b),
              kt::oracle_jamo_thirds(kt::oracle_decode(a), kt::oracle_decode(b)))
        << a << " / " << b;
  }
}

TEST(JamoDistance, MetricAxioms) {
  std::mt19937 rng(2024);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    auto a = kt::random_hangul(rng, 5);
    auto b = kt::random_hangul(rng, 5);
    auto c = kt::random_hangul(rng, 5);
    const int ab = hangul::jamo_distance_thirds(a, b);
    const int ba = hangul::jamo_distance_thirds(b, a);
    const int bc = hangul::jamo_distance_thirds(b, c);
    const int ac = hangul::jamo_distance_thirds(a, c);
    if (ab != ba) ++violations;
    if (hangul::jamo_distance_thirds(a, a) != 0) ++violations;
    if ((ab == 0) != (a == b)) ++violations;
    if (ac > ab + bc) ++violations;
  }
  EXPECT_EQ(violations, 0);
}
