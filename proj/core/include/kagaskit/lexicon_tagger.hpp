#pragma once

// Bundled dictionary tagger: lattice search over a surface/lemma/tag lexicon
// with a small morphotactic grammar and inverse contraction splits.

#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kagaskit/pos.hpp"

namespace kagaskit::pos {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MorphLexicon {
 public:
  struct Entry {
    std::string lemma;
    std::string tag;
  };

  // TSV: surface<TAB>lemma<TAB>tag, '#' comments and blank lines ignored.
  // An empty lemma column means lemma == surface.
  static MorphLexicon parse(std::istream& in, std::string_view source_name = "<stream>");
  static MorphLexicon load(const std::filesystem::path& path);

  void add(std::string surface, std::string lemma, std::string tag);
  // nullptr when the surface is not listed. Entries keep file order.
  const std::vector<Entry>* find(std::string_view surface) const;
  std::size_t size() const { return size_; }

 private:
  std::map<std::string, std::vector<Entry>, std::less<>> entries_;
  std::size_t size_ = 0;
};

class LexiconTagger final : public Tagger {
 public:
  explicit LexiconTagger(std::shared_ptr<const MorphLexicon> lexicon);

  Analysis tag_word(std::string_view word) override { return analyze(word); }
  // Thread-safe.
  Analysis analyze(std::string_view word) const;

  const MorphLexicon& lexicon() const { return *lexicon_; }

 private:
  std::shared_ptr<const MorphLexicon> lexicon_;
};

TaggerFactory lexicon_tagger_factory(std::shared_ptr<const MorphLexicon> lexicon);

}  // namespace kagaskit::pos
