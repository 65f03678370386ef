#pragma once

// Hangul syllable arithmetic, jamo sequences and the jamo-level edit distance.
//
// A precomposed syllable in U+AC00..U+D7A3 is
//   0xAC00 + ((choseong * 21) + jungseong) * 28 + jongseong
// with jongseong 0 meaning "no final consonant". Compatibility jamo (U+3130
// block) are ordinary non-Hangul characters here; only precomposed syllables
// decompose.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kagaskit::hangul {

inline constexpr char32_t kSyllableBase = 0xAC00;
inline constexpr char32_t kSyllableLast = 0xD7A3;
inline constexpr int kChoseongCount = 19;
inline constexpr int kJungseongCount = 21;
inline constexpr int kJongseongCount = 28;
inline constexpr int kSyllableCount = kChoseongCount * kJungseongCount * kJongseongCount;

class InvalidJamoError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Syllable {
  int choseong = 0;
  int jungseong = 0;
  int jongseong = 0;  // 0 = none

  bool has_final() const { return jongseong != 0; }
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct NonHangul {
  char32_t cp = 0;
  friend bool operator==(const NonHangul&, const NonHangul&) = default;
};

using Decomposed = std::variant<Syllable, NonHangul>;

inline bool is_syllable(char32_t c) { return c >= kSyllableBase && c <= kSyllableLast; }

Decomposed decompose_syllable(char32_t c);

// Throws InvalidJamoError when an index is outside its documented range.
char32_t compose_syllable(const Syllable& s);

// Compatibility-jamo letters for display and for tagger morphemes such as "ㄴ".
char32_t choseong_letter(int index);
char32_t jungseong_letter(int index);
char32_t jongseong_letter(int index);  // index 0 -> 0
// Reverse lookups; -1 when the letter cannot fill the slot.
int choseong_index(char32_t letter);
int jungseong_index(char32_t letter);
int jongseong_index(char32_t letter);

// Named indices used by the contraction rules.
namespace cho {
inline constexpr int kGiyeok = 0, kNieun = 2, kDigeut = 3, kRieul = 5, kMieum = 6, kBieup = 7,
                     kSsangSiot = 10, kIeung = 11, kJieut = 12, kChieut = 14, kPieup = 17;
}
namespace jung {
inline constexpr int kA = 0, kAe = 1, kYa = 2, kEo = 4, kE = 5, kYeo = 6, kO = 8, kWa = 9,
                     kU = 13, kWo = 14, kEu = 18, kI = 20;
}
namespace jong {
inline constexpr int kNone = 0, kNieun = 4, kRieul = 8, kMieum = 16, kBieup = 17, kSsangSiot = 20;
}

enum class JamoSlot : std::uint8_t { kChoseong, kJungseong, kJongseong, kOther };

struct JamoUnit {
  JamoSlot slot = JamoSlot::kOther;
  // Slot index for jamo units, the raw code point for kOther.
  char32_t value = 0;
  friend bool operator==(const JamoUnit&, const JamoUnit&) = default;
};

using JamoSequence = std::vector<JamoUnit>;

JamoSequence to_jamo(std::string_view text);
std::string from_jamo(const JamoSequence& jamo);

// Syllable-level view used by rule engines.
std::vector<Decomposed> to_decomposed(std::string_view text);
std::string from_decomposed(const std::vector<Decomposed>& units);

// Character-level Levenshtein where a substitution between two Hangul
// syllables costs (number of differing jamo slots) / 3 and every other
// insertion, deletion or substitution costs 1.
double jamo_distance(std::string_view a, std::string_view b);
// Same distance expressed exactly, in thirds.
int jamo_distance_thirds(std::string_view a, std::string_view b);
int jamo_distance_thirds(std::u32string_view a, std::u32string_view b);

}  // namespace kagaskit::hangul
