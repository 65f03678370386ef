#include "kagaskit/pipeline.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "kagaskit/preprocess.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::pipeline {

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(0, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(w, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<m2::Document> annotate_corpus(const m2::SentencePairs& pairs,
                                          const pos::TaggerFactory& make_tagger,
                                          const classify::SpellLexicon& spell,
                                          std::size_t workers) {
  workers = std::max<std::size_t>(1, std::min(workers, pairs.size()));
  std::vector<std::unique_ptr<pos::Tagger>> taggers;
  std::vector<std::unique_ptr<classify::Annotator>> annotators;
  for (std::size_t w = 0; w < workers; ++w) {
    taggers.push_back(make_tagger());
    annotators.push_back(std::make_unique<classify::Annotator>(*taggers.back(), spell));
  }
  std::vector<m2::Document> docs(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t w, std::size_t i) {
    auto src = align::tokenize(preprocess::normalize_punct_spacing(pairs[i].first));
    auto cor = align::tokenize(preprocess::normalize_punct_spacing(pairs[i].second));
    docs[i] = m2::make_document(src, annotators[w]->annotate(src, cor));
  });
  return docs;
}

double CorpusStats::edits_per_sentence() const {
  return sentences ? static_cast<double>(edits) / static_cast<double>(sentences) : 0.0;
}

double CorpusStats::tokens_per_edit() const {
  return edits ? static_cast<double>(changed_tokens) / static_cast<double>(edits) : 0.0;
}

double CorpusStats::changed_token_ratio() const {
  return source_tokens ? static_cast<double>(changed_tokens) / static_cast<double>(source_tokens)
                       : 0.0;
}

double CorpusStats::average_token_length() const {
  return source_tokens ? static_cast<double>(source_chars) / static_cast<double>(source_tokens)
                       : 0.0;
}

double CorpusStats::coverage() const {
  if (!edits) return 0.0;
  auto it = type_counts.find("UNK");
  const std::size_t unk = it == type_counts.end() ? 0 : it->second;
  return static_cast<double>(edits - unk) / static_cast<double>(edits);
}

CorpusStats corpus_stats(const std::vector<m2::Document>& docs) {
  CorpusStats s;
  for (const auto& d : docs) {
    ++s.sentences;
    s.source_tokens += d.source.size();
    for (const auto& t : d.source) s.source_chars += text::length(t);
    const auto ids = d.annotators();
    if (ids.empty()) continue;
    for (const auto& a : d.edits_of(ids.front())) {
      ++s.edits;
      s.changed_tokens += static_cast<std::size_t>(a.end - a.start);
      ++s.type_counts[a.type];
    }
  }
  return s;
}

std::string format_stats(const CorpusStats& s) {
  auto fixed = [](double v) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(2);
    o << v;
    return o.str();
  };
  std::ostringstream out;
  out << "sentences\t" << s.sentences << '\n'
      << "edits\t" << s.edits << '\n'
      << "edits_per_sentence\t" << fixed(s.edits_per_sentence()) << '\n'
      << "tokens_per_edit\t" << fixed(s.tokens_per_edit()) << '\n'
      << "changed_tokens_pct\t" << m2::percent(s.changed_token_ratio()) << '\n'
      << "avg_token_length\t" << fixed(s.average_token_length()) << '\n'
      << "coverage_pct\t" << m2::percent(s.coverage()) << '\n'
      << "type\tcount\tpercent\n";
  std::set<std::string> done;
  auto row = [&](const std::string& name, std::size_t n) {
    const double share = s.edits ? static_cast<double>(n) / static_cast<double>(s.edits) : 0.0;
    out << name << '\t' << n << '\t' << m2::percent(share) << '\n';
    done.insert(name);
  };
  for (ErrorType t : kAllErrorTypes) {
    const std::string name(error_type_name(t));
    auto it = s.type_counts.find(name);
    row(name, it == s.type_counts.end() ? 0 : it->second);
  }
  for (const auto& [name, n] : s.type_counts) {
    if (!done.count(name)) row(name, n);
  }
  return out.str();
}

}  // namespace kagaskit::pipeline
