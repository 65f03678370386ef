#pragma once

// Morpheme-level POS tags (Kkma-style tagset), the tag -> PosGroup
// granularity table and the pluggable tagger interface.

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kagaskit::pos {

enum class PosGroup { kNoun, kVerb, kAdj, kPart, kEnd, kMod, kPunct, kOther };

std::string_view group_name(PosGroup g);

using GroupSet = std::set<PosGroup>;

inline constexpr std::string_view kUnknownTag = "UNKNOWN";

// Every code the toolkit knows about, in tagset order.
std::span<const std::string_view> declared_tagset();

// Total: tags outside the declared tagset map to kOther.
PosGroup group_of(std::string_view tag);

bool is_content_tag(std::string_view tag);

struct TaggedMorpheme {
  std::string surface;
  std::string lemma;
  std::string tag;

  PosGroup group() const { return group_of(tag); }
  bool is_unknown() const { return tag == kUnknownTag; }
  friend bool operator==(const TaggedMorpheme&, const TaggedMorpheme&) = default;
};

using Analysis = std::vector<TaggedMorpheme>;

GroupSet groups_of(std::span<const TaggedMorpheme> morphemes);

// True when the morpheme surfaces, re-merged with the contraction rules,
// spell `word`. Compatibility-jamo consonants ("ㄴ", "ㅂ니다") attach to the
// preceding syllable as its final consonant first.
bool reconstructs(std::string_view word, std::span<const TaggedMorpheme> morphemes);

// The whole word as a single UNKNOWN morpheme.
Analysis unknown_analysis(std::string_view word);

class Tagger {
 public:
  virtual ~Tagger() = default;
  // Never empty. Words the tagger cannot segment come back as one UNKNOWN
  // morpheme.
  virtual Analysis tag_word(std::string_view word) = 0;
};

// One tagger per worker thread.
using TaggerFactory = std::function<std::unique_ptr<Tagger>()>;

GroupSet pos_groups(Tagger& tagger, std::string_view word);

}  // namespace kagaskit::pos

namespace kagaskit::pos {

// Memoizes another tagger's analyses. Not thread-safe; one per worker.
class CachedTagger final : public Tagger {
 public:
  explicit CachedTagger(Tagger& inner) : inner_(inner) {}
  Analysis tag_word(std::string_view word) override { return analysis(word); }
  const Analysis& analysis(std::string_view word);

 private:
  Tagger& inner_;
  std::map<std::string, Analysis, std::less<>> cache_;
};

}  // namespace kagaskit::pos
