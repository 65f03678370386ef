#pragma once

// M2 annotation files and the edit-matching M2 scorer.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kagaskit/alignment.hpp"
#include "kagaskit/classifier.hpp"

namespace kagaskit::m2 {

inline constexpr std::string_view kNoopType = "noop";
inline constexpr std::string_view kNone = "-NONE-";

struct Annotation {
  long start = -1;
  long end = -1;
  std::string type;
  std::string correction;  // empty for a deletion
  int annotator = 0;

  bool is_noop() const { return start == -1 && end == -1 && type == kNoopType; }
  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Document {
  align::Tokens source;
  std::vector<Annotation> annotations;

  // Annotator ids in ascending order, including ones with only a noop line.
  std::vector<int> annotators() const;
  // Real edits of one annotator, sorted by span.
  std::vector<Annotation> edits_of(int annotator) const;
  friend bool operator==(const Document&, const Document&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Annotation noop_annotation(int annotator = 0);

// Edits become A lines; a sentence without edits gets the noop sentinel.
Document make_document(const align::Tokens& source, const std::vector<align::Edit>& edits,
                       int annotator = 0);

// One S line, its A lines, then a blank line.
std::string format_document(const Document& doc);
std::string format_documents(const std::vector<Document>& docs);

std::vector<Document> parse_m2(std::string_view text);

using SentencePairs = std::vector<std::pair<std::string, std::string>>;

// Punctuation-normalizes, annotates and formats every pair.
std::string emit_m2(classify::Annotator& annotator, const SentencePairs& pairs);

// Applies one annotator's edits to the source.
align::Tokens apply_annotations(const Document& doc, int annotator);

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct Scores {
  Counts counts;
  double precision = 1.0;
  double recall = 0.0;
  double f_half = 0.0;
};

// 1.25 P R / (0.25 P + R), 0 when the denominator is 0.
double f_beta(double precision, double recall, double beta = 0.5);

// P = 1 when nothing was proposed; R = 0 when there is nothing to find.
Scores make_scores(const Counts& c);

struct ScoreReport {
  Scores overall;
  std::map<std::string, Scores> per_type;
};

struct SystemEdit {
  long start = 0;
  long end = 0;
  std::string correction;
  std::string type;
};

// Core matcher. For every sentence the gold annotator maximizing sentence
// F0.5 is used (ties: more TP, fewer FP, fewer FN, lower id).
ScoreReport score_edits(const std::vector<std::vector<SystemEdit>>& system,
                        const std::vector<Document>& gold);

std::vector<SystemEdit> system_edits(const std::vector<align::Edit>& edits);

// System edits come from annotating (gold source, hypothesis). Throws
// InputError when the counts differ.
ScoreReport score(classify::Annotator& annotator, const std::vector<std::string>& hypotheses,
                  const std::vector<Document>& gold);

// TSV rows: type, tp, fp, fn, P, R, F0.5 (scores x100, two decimals), then
// an overall row.
std::string format_report(const ScoreReport& report);

std::string percent(double value);

}  // namespace kagaskit::m2
