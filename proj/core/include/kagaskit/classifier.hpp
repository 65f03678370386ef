#pragma once

// Error-type classification of aligned edits.

#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kagaskit/alignment.hpp"
#include "kagaskit/error_type.hpp"
#include "kagaskit/pos.hpp"

namespace kagaskit::classify {

class SpellLexicon {
 public:
  // One surface per line; '#' comments and blank lines ignored.
  static SpellLexicon parse(std::istream& in);
  static SpellLexicon load(const std::filesystem::path& path);

  void add(std::string word) { words_.insert(std::move(word)); }
  bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

struct MorphemeDiff {
  pos::Analysis deleted;
  pos::Analysis inserted;
};

// Levenshtein over morphemes. Morphemes are equal when lemma and tag agree;
// a substitution costs the length-normalized jamo distance of the surfaces.
// Both halves of a substitution are reported.
MorphemeDiff morpheme_diff(const pos::Analysis& original, const pos::Analysis& corrected);

// Maps a single PosGroup to its error type; OTHER gives UNK.
ErrorType type_for_group(pos::PosGroup g);

class Annotator {
 public:
  Annotator(pos::Tagger& tagger, const SpellLexicon& spell);
  Annotator(const Annotator&) = delete;
  Annotator& operator=(const Annotator&) = delete;

  // Edits between two token lists with their error types filled in.
  std::vector<align::Edit> annotate(const align::Tokens& original,
                                    const align::Tokens& corrected);
  // Normalizes punctuation spacing and tokenizes both sentences first.
  std::vector<align::Edit> annotate(std::string_view original, std::string_view corrected);

  // Uses edit.type only as the provisional WS/WO mark from extract_edits.
  ErrorType classify(const align::Edit& edit);

  MorphemeDiff diff_words(const align::Tokens& original, const align::Tokens& corrected);
  const pos::Analysis& analysis(std::string_view word) { return tagger_.analysis(word); }
  align::CostModel& cost_model() { return cost_; }

 private:
  pos::Analysis analyze_tokens(const align::Tokens& toks);

  pos::CachedTagger tagger_;
  align::CostModel cost_;
  const SpellLexicon& spell_;
};

}  // namespace kagaskit::classify
