#pragma once

// Corpus-level drivers: parallel annotation with ordered output, and the
// summary statistics reported next to an M2 file.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kagaskit/classifier.hpp"
#include "kagaskit/m2.hpp"
#include "kagaskit/pos.hpp"

namespace kagaskit::pipeline {

// Runs fn(worker, index) for every index in [0, count) on `workers` threads.
// Each worker id is in [0, workers). The first exception thrown is rethrown.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t worker, std::size_t index)>& fn);

// One tagger and annotator per worker; documents come back in input order.
std::vector<m2::Document> annotate_corpus(const m2::SentencePairs& pairs,
                                          const pos::TaggerFactory& make_tagger,
                                          const classify::SpellLexicon& spell,
                                          std::size_t workers = 1);

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t edits = 0;
  std::size_t source_tokens = 0;
  std::size_t source_chars = 0;    // characters over all source tokens
  std::size_t changed_tokens = 0;  // source tokens covered by an edit
  std::map<std::string, std::size_t> type_counts;

  double edits_per_sentence() const;
  double tokens_per_edit() const;
  double changed_token_ratio() const;
  double average_token_length() const;
  double coverage() const;  // share of edits not labeled UNK
};

// Uses the lowest annotator id of each document.
CorpusStats corpus_stats(const std::vector<m2::Document>& docs);

// Key/value lines followed by a type/count/percent table.
std::string format_stats(const CorpusStats& stats);

}  // namespace kagaskit::pipeline
