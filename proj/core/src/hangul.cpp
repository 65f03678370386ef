#include "kagaskit/hangul.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "kagaskit/utf8.hpp"

namespace kagaskit::hangul {

namespace {

constexpr std::array<char32_t, kChoseongCount> kChoseongLetters = {
    U'ㄱ', U'ㄲ', U'ㄴ', U'ㄷ', U'ㄸ', U'ㄹ', U'ㅁ', U'ㅂ', U'ㅃ', U'ㅅ',
    U'ㅆ', U'ㅇ', U'ㅈ', U'ㅉ', U'ㅊ', U'ㅋ', U'ㅌ', U'ㅍ', U'ㅎ'};

constexpr std::array<char32_t, kJungseongCount> kJungseongLetters = {
    U'ㅏ', U'ㅐ', U'ㅑ', U'ㅒ', U'ㅓ', U'ㅔ', U'ㅕ', U'ㅖ', U'ㅗ', U'ㅘ', U'ㅙ',
    U'ㅚ', U'ㅛ', U'ㅜ', U'ㅝ', U'ㅞ', U'ㅟ', U'ㅠ', U'ㅡ', U'ㅢ', U'ㅣ'};

constexpr std::array<char32_t, kJongseongCount> kJongseongLetters = {
    0,     U'ㄱ', U'ㄲ', U'ㄳ', U'ㄴ', U'ㄵ', U'ㄶ', U'ㄷ', U'ㄹ', U'ㄺ',
    U'ㄻ', U'ㄼ', U'ㄽ', U'ㄾ', U'ㄿ', U'ㅀ', U'ㅁ', U'ㅂ', U'ㅄ', U'ㅅ',
    U'ㅆ', U'ㅇ', U'ㅈ', U'ㅊ', U'ㅋ', U'ㅌ', U'ㅍ', U'ㅎ'};

template <std::size_t N>
int index_of(const std::array<char32_t, N>& table, char32_t letter) {
  if (letter == 0) return -1;
  const auto it = std::find(table.begin(), table.end(), letter);
  return it == table.end() ? -1 : static_cast<int>(it - table.begin());
}

int differing_slots(const Syllable& a, const Syllable& b) {
  return (a.choseong != b.choseong) + (a.jungseong != b.jungseong) + (a.jongseong != b.jongseong);
}

// Substitution cost in thirds.
int substitution_thirds(char32_t a, char32_t b) {
  if (a == b) return 0;
  if (is_syllable(a) && is_syllable(b)) {
    return differing_slots(std::get<Syllable>(decompose_syllable(a)),
                           std::get<Syllable>(decompose_syllable(b)));
  }
  return 3;
}

}  // namespace

Decomposed decompose_syllable(char32_t c) {
  if (!is_syllable(c)) return NonHangul{c};
  const int offset = static_cast<int>(c - kSyllableBase);
  return Syllable{offset / (kJungseongCount * kJongseongCount),
                  (offset / kJongseongCount) % kJungseongCount, offset % kJongseongCount};
}

char32_t compose_syllable(const Syllable& s) {
  if (s.choseong < 0 || s.choseong >= kChoseongCount || s.jungseong < 0 ||
      s.jungseong >= kJungseongCount || s.jongseong < 0 || s.jongseong >= kJongseongCount) {
    throw InvalidJamoError("jamo index out of range: (" + std::to_string(s.choseong) + ", " +
                           std::to_string(s.jungseong) + ", " + std::to_string(s.jongseong) + ")");
  }
  return kSyllableBase +
         static_cast<char32_t>((s.choseong * kJungseongCount + s.jungseong) * kJongseongCount +
                               s.jongseong);
}

char32_t choseong_letter(int index) { return kChoseongLetters.at(static_cast<std::size_t>(index)); }
char32_t jungseong_letter(int index) { return kJungseongLetters.at(static_cast<std::size_t>(index)); }
char32_t jongseong_letter(int index) { return kJongseongLetters.at(static_cast<std::size_t>(index)); }

int choseong_index(char32_t letter) { return index_of(kChoseongLetters, letter); }
int jungseong_index(char32_t letter) { return index_of(kJungseongLetters, letter); }
int jongseong_index(char32_t letter) { return index_of(kJongseongLetters, letter); }

JamoSequence to_jamo(std::string_view text) {
  JamoSequence out;
  for (char32_t cp : text::decode(text)) {
    const auto d = decompose_syllable(cp);
    if (const auto* s = std::get_if<Syllable>(&d)) {
      out.push_back({JamoSlot::kChoseong, static_cast<char32_t>(s->choseong)});
      out.push_back({JamoSlot::kJungseong, static_cast<char32_t>(s->jungseong)});
      if (s->has_final()) out.push_back({JamoSlot::kJongseong, static_cast<char32_t>(s->jongseong)});
    } else {
      out.push_back({JamoSlot::kOther, cp});
    }
  }
  return out;
}

std::string from_jamo(const JamoSequence& jamo) {
  std::string out;
  std::size_t i = 0;
  while (i < jamo.size()) {
    const JamoUnit& u = jamo[i];
    if (u.slot == JamoSlot::kChoseong && i + 1 < jamo.size() &&
        jamo[i + 1].slot == JamoSlot::kJungseong) {
      Syllable s{static_cast<int>(u.value), static_cast<int>(jamo[i + 1].value), 0};
      i += 2;
      if (i < jamo.size() && jamo[i].slot == JamoSlot::kJongseong) {
        s.jongseong = static_cast<int>(jamo[i].value);
        ++i;
      }
      text::append(out, compose_syllable(s));
      continue;
    }
    // Dangling jamo are rendered as compatibility letters.
    switch (u.slot) {
      case JamoSlot::kChoseong: text::append(out, choseong_letter(static_cast<int>(u.value))); break;
      case JamoSlot::kJungseong: text::append(out, jungseong_letter(static_cast<int>(u.value))); break;
      case JamoSlot::kJongseong: text::append(out, jongseong_letter(static_cast<int>(u.value))); break;
      case JamoSlot::kOther: text::append(out, u.value); break;
    }
    ++i;
  }
  return out;
}

std::vector<Decomposed> to_decomposed(std::string_view text) {
  std::vector<Decomposed> out;
  for (char32_t cp : text::decode(text)) out.push_back(decompose_syllable(cp));
  return out;
}

std::string from_decomposed(const std::vector<Decomposed>& units) {
  std::string out;
  for (const auto& u : units) {
    if (const auto* s = std::get_if<Syllable>(&u)) {
      text::append(out, compose_syllable(*s));
    } else {
      text::append(out, std::get<NonHangul>(u).cp);
    }
  }
  return out;
}

int jamo_distance_thirds(std::u32string_view a, std::u32string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<int> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(3 * j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(3 * i);
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = std::min({prev[j] + 3, cur[j - 1] + 3,
                         prev[j - 1] + substitution_thirds(a[i - 1], b[j - 1])});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

int jamo_distance_thirds(std::string_view a, std::string_view b) {
  return jamo_distance_thirds(text::decode(a), text::decode(b));
}

double jamo_distance(std::string_view a, std::string_view b) {
  return jamo_distance_thirds(a, b) / 3.0;
}

}  // namespace kagaskit::hangul
