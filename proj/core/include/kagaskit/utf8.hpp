#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kagaskit::text {

// Invalid byte sequences decode to U+FFFD; decoding never throws.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view codepoints);
void append(std::string& out, char32_t cp);

// Number of code points.
std::size_t length(std::string_view utf8);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_latin(char32_t cp);

// ASCII punctuation/symbols plus the common Unicode punctuation blocks
// (general punctuation, CJK symbols, fullwidth forms).
bool is_punctuation(char32_t cp);

// Splits on runs of whitespace; never yields empty tokens.
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

}  // namespace kagaskit::text
