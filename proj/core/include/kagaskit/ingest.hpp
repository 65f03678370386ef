#pragma once

// NIKL learner-corpus XML: morpheme-level proofreading annotations turned
// into word-level (original, corrected) sentence pairs.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kagaskit::ingest {

class XmlError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MorphAnnotation {
  enum class Kind { kProofread, kPreserved };
  Kind kind = Kind::kPreserved;
  std::string text;
  std::optional<std::string> pos;
  std::optional<std::string> error_area;
  std::optional<std::string> error_pattern;
  bool word_start = false;
  int subsequence = 0;  // 0 when missing or not a number
  int text_elements = 0;  // Proofread + Preserved children seen
};

struct WordAnnotation {
  std::string original;  // <w> text
  std::vector<MorphAnnotation> morphs;
  std::optional<std::size_t> token_index;  // position in the sentence, if found
};

struct LearnerSentence {
  std::string source;
  std::vector<WordAnnotation> words;
};

struct LearnerDocument {
  std::vector<LearnerSentence> sentences;
  bool spoken = false;
};

struct ParseResult {
  std::vector<LearnerDocument> documents;
  std::vector<std::string> warnings;
};

// Throws XmlError on malformed XML.
ParseResult parse_learner_xml(std::string_view xml);

inline constexpr std::string_view kDiscardReasons[] = {
    "spoken", "control-marker", "inconsistent", "empty-edit", "word-not-found", "no-edit"};

struct Reconstruction {
  std::optional<std::pair<std::string, std::string>> pair;
  std::string discard_reason;  // empty when pair is set
};

// Corrected word = merge_morphemes over the morphs in subsequence order, with
// wordStart="Start" opening a new output word.
Reconstruction reconstruct_pair(const LearnerSentence& sentence, bool spoken = false);

std::string reconstruct_word(const WordAnnotation& word);

struct IngestReport {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::string, std::size_t> discards;
  std::vector<std::string> warnings;
};

IngestReport ingest_learner_xml(std::string_view xml);
void merge_into(IngestReport& total, IngestReport&& part);

}  // namespace kagaskit::ingest
