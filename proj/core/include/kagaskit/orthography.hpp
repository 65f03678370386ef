#pragma once

// Korean orthography contraction rules used to turn morpheme-level
// annotations back into surface words, e.g. 들어오 + 았 + 어요 -> 들어왔어요.

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kagaskit/hangul.hpp"

namespace kagaskit::orthography {

enum class RuleId {
  kR18_6,  // stem-final ㅂ becomes ㅜ before 아/어 (written as 워/와)
  kR34,    // ㅏ/ㅓ stem absorbs a harmonizing 아/어
  kR35,    // ㅗ/ㅜ + 아/어 -> ㅘ/ㅝ
  kR36,    // ㅣ + 어 -> ㅕ
};

struct ContractionRule {
  RuleId id;
  std::string_view name;
  std::string_view description;
};

// In the order they are tried at each position.
const std::array<ContractionRule, 4>& rules();
std::string_view rule_name(RuleId id);

struct RuleApplication {
  hangul::JamoSequence jamo;
  std::vector<RuleId> applied;
};

// One left-to-right pass; at each adjacent syllable pair the first applicable
// rule fires. A pair produced by a merge is not re-examined in the same pass.
RuleApplication apply_rules_once(const hangul::JamoSequence& jamo);

class EmptyInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Concatenates the morphemes and applies the contraction rules to a fixpoint.
// Throws EmptyInputError for an empty list, std::logic_error if the fixpoint
// is not reached within (syllable count) passes.
std::string merge_morphemes(std::span<const std::string> morphemes);
std::string merge_morphemes(std::initializer_list<std::string> morphemes);

}  // namespace kagaskit::orthography
