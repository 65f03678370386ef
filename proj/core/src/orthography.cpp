#include "kagaskit/orthography.hpp"

#include <algorithm>
#include <optional>

namespace kagaskit::orthography {

namespace {

using hangul::Decomposed;
using hangul::Syllable;
namespace cho = hangul::cho;
namespace jung = hangul::jung;
namespace jong = hangul::jong;

constexpr std::array<ContractionRule, 4> kRules = {{
    {RuleId::kR18_6, "R18-6", "stem-final ㅂ turns into ㅜ before 아/어 and is written contracted"},
    {RuleId::kR36, "R36", "ㅣ followed by -어 is written as ㅕ"},
    {RuleId::kR35, "R35", "ㅗ/ㅜ followed by -아/-어 is written as ㅘ/ㅝ"},
    {RuleId::kR34, "R34", "a stem ending in ㅏ/ㅓ absorbs a harmonizing -아/-어"},
}};

// Regular ㅂ-final stems that keep their ㅂ (잡아, 입어, ...).
constexpr std::array<char32_t, 8> kRegularBieupStems = {U'잡', U'입', U'씹', U'뽑',
                                                        U'좁', U'업', U'접', U'집'};

struct PairResult {
  RuleId rule;
  Syllable left;
  std::optional<Syllable> right;  // empty when the pair merged into one syllable
};

bool open_vowel_onset(const Syllable& s) { return s.choseong == cho::kIeung; }

std::optional<PairResult> try_rules(const Syllable& l, const Syllable& r) {
  if (!open_vowel_onset(r)) return std::nullopt;

  // R18-6
  if (l.jongseong == jong::kBieup && (r.jungseong == jung::kEo || r.jungseong == jung::kA) &&
      std::find(kRegularBieupStems.begin(), kRegularBieupStems.end(),
                hangul::compose_syllable(l)) == kRegularBieupStems.end()) {
    Syllable left = l;
    left.jongseong = jong::kNone;
    Syllable right = r;
    // 돕다/곱다 keep vowel harmony (도와); everything else is written 워.
    right.jungseong = (r.jungseong == jung::kA && l.jungseong == jung::kO) ? jung::kWa : jung::kWo;
    return PairResult{RuleId::kR18_6, left, right};
  }
  if (l.has_final()) return std::nullopt;

  // R36
  if (l.jungseong == jung::kI && r.jungseong == jung::kEo) {
    return PairResult{RuleId::kR36, Syllable{l.choseong, jung::kYeo, r.jongseong}, std::nullopt};
  }
  // R35
  if (l.jungseong == jung::kO && r.jungseong == jung::kA) {
    return PairResult{RuleId::kR35, Syllable{l.choseong, jung::kWa, r.jongseong}, std::nullopt};
  }
  if (l.jungseong == jung::kU && r.jungseong == jung::kEo) {
    return PairResult{RuleId::kR35, Syllable{l.choseong, jung::kWo, r.jongseong}, std::nullopt};
  }
  // R34
  if ((l.jungseong == jung::kA && r.jungseong == jung::kA) ||
      (l.jungseong == jung::kEo && r.jungseong == jung::kEo)) {
    return PairResult{RuleId::kR34, Syllable{l.choseong, l.jungseong, r.jongseong}, std::nullopt};
  }
  return std::nullopt;
}

std::size_t syllable_count(const std::vector<Decomposed>& units) {
  return static_cast<std::size_t>(std::count_if(units.begin(), units.end(), [](const auto& u) {
    return std::holds_alternative<Syllable>(u);
  }));
}

std::vector<RuleId> apply_pass(std::vector<Decomposed>& units) {
  std::vector<RuleId> applied;
  std::size_t i = 0;
  while (i + 1 < units.size()) {
    const auto* l = std::get_if<Syllable>(&units[i]);
    const auto* r = std::get_if<Syllable>(&units[i + 1]);
    if (l && r) {
      if (auto res = try_rules(*l, *r)) {
        applied.push_back(res->rule);
        units[i] = res->left;
        if (res->right) {
          units[i + 1] = *res->right;
        } else {
          units.erase(units.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        }
      }
    }
    ++i;
  }
  return applied;
}

}  // namespace

const std::array<ContractionRule, 4>& rules() { return kRules; }

std::string_view rule_name(RuleId id) {
  for (const auto& r : kRules) {
    if (r.id == id) return r.name;
  }
  return "?";
}

RuleApplication apply_rules_once(const hangul::JamoSequence& jamo) {
  auto units = hangul::to_decomposed(hangul::from_jamo(jamo));
  RuleApplication out;
  out.applied = apply_pass(units);
  out.jamo = hangul::to_jamo(hangul::from_decomposed(units));
  return out;
}

std::string merge_morphemes(std::span<const std::string> morphemes) {
  if (morphemes.empty()) throw EmptyInputError("merge_morphemes: empty morpheme list");
  std::string joined;
  for (const auto& m : morphemes) joined += m;

  auto units = hangul::to_decomposed(joined);
  const std::size_t cap = std::max<std::size_t>(1, syllable_count(units));
  for (std::size_t pass = 0; pass < cap; ++pass) {
    if (apply_pass(units).empty()) return hangul::from_decomposed(units);
  }
  if (!apply_pass(units).empty()) {
    throw std::logic_error("merge_morphemes: contraction rules did not reach a fixpoint");
  }
  return hangul::from_decomposed(units);
}

std::string merge_morphemes(std::initializer_list<std::string> morphemes) {
  return merge_morphemes(std::span<const std::string>(morphemes.begin(), morphemes.size()));
}

}  // namespace kagaskit::orthography
