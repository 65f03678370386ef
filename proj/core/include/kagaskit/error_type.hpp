#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace kagaskit {

enum class ErrorType {
  kIns,
  kDel,
  kWs,
  kWo,
  kSpell,
  kPunct,
  kShort,
  kVerb,
  kAdj,
  kNoun,
  kPart,
  kEnd,
  kMod,
  kConj,
  kUnk,
};

inline constexpr std::array<ErrorType, 15> kAllErrorTypes = {
    ErrorType::kIns,  ErrorType::kDel,  ErrorType::kWs,   ErrorType::kWo,  ErrorType::kSpell,
    ErrorType::kPunct, ErrorType::kShort, ErrorType::kVerb, ErrorType::kAdj, ErrorType::kNoun,
    ErrorType::kPart, ErrorType::kEnd,  ErrorType::kMod,  ErrorType::kConj, ErrorType::kUnk};

std::string_view error_type_name(ErrorType t);
std::optional<ErrorType> parse_error_type(std::string_view name);

}  // namespace kagaskit
