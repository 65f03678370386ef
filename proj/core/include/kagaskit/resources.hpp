#pragma once

// Locating the bundled data files (lexicons, noise words, tagset).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kagaskit::resources {

inline constexpr std::string_view kDataDirEnv = "KAGASKIT_DATA_DIR";
inline constexpr std::string_view kMorphLexiconFile = "morph_lexicon.tsv";
inline constexpr std::string_view kSpellLexiconFile = "spell_lexicon.txt";
inline constexpr std::string_view kNoiseWordsFile = "noise_words.txt";
inline constexpr std::string_view kTagsetFile = "tagset.tsv";

// Candidate directories in lookup order: $KAGASKIT_DATA_DIR, <exe>/../share/kagaskit,
// the install prefix, the source tree.
std::vector<std::filesystem::path> data_dir_candidates();

// First candidate that exists; nullopt when none does.
std::optional<std::filesystem::path> data_dir();

// data_dir() / name, or nullopt when the file is not there.
std::optional<std::filesystem::path> data_file(std::string_view name);

// Non-empty, non-comment lines, trimmed.
std::vector<std::string> read_word_list(const std::filesystem::path& path);

}  // namespace kagaskit::resources
