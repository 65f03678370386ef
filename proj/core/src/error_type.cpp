#include "kagaskit/error_type.hpp"

namespace kagaskit {

namespace {
constexpr std::array<std::string_view, 15> kNames = {
    "INS", "DEL", "WS", "WO", "SPELL", "PUNCT", "SHORT", "VERB",
    "ADJ", "NOUN", "PART", "END", "MOD", "CONJ", "UNK"};
}

std::string_view error_type_name(ErrorType t) { return kNames[static_cast<std::size_t>(t)]; }

std::optional<ErrorType> parse_error_type(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<ErrorType>(i);
  }
  return std::nullopt;
}

}  // namespace kagaskit
