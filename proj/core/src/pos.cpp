#include "kagaskit/pos.hpp"

#include <algorithm>
#include <array>

#include "kagaskit/hangul.hpp"
#include "kagaskit/orthography.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::pos {

namespace {

struct TagRow {
  std::string_view tag;
  PosGroup group;
};

using G = PosGroup;

// Kkma tagset plus UNKNOWN.
constexpr std::array<TagRow, 59> kTagTable = {{
    {"NNG", G::kNoun}, {"NNP", G::kNoun}, {"NNB", G::kNoun}, {"NNM", G::kNoun},
    {"NR", G::kOther}, {"NP", G::kNoun},  {"VV", G::kVerb},  {"VA", G::kAdj},
    {"VXV", G::kVerb}, {"VXA", G::kAdj},  {"VCP", G::kVerb}, {"VCN", G::kVerb},
    {"MDT", G::kMod},  {"MDN", G::kMod},  {"MAG", G::kMod},  {"MAC", G::kMod},
    {"IC", G::kPunct}, {"JKS", G::kPart}, {"JKC", G::kPart}, {"JKG", G::kPart},
    {"JKO", G::kPart}, {"JKM", G::kPart}, {"JKI", G::kPart}, {"JKQ", G::kPart},
    {"JX", G::kPart},  {"JC", G::kPart},  {"EPH", G::kEnd},  {"EPT", G::kEnd},
    {"EPP", G::kEnd},  {"EFN", G::kEnd},  {"EFQ", G::kEnd},  {"EFO", G::kEnd},
    {"EFA", G::kEnd},  {"EFI", G::kEnd},  {"EFR", G::kEnd},  {"ECE", G::kEnd},
    {"ECD", G::kEnd},  {"ECS", G::kEnd},  {"ETN", G::kEnd},  {"ETD", G::kEnd},
    {"XPN", G::kNoun}, {"XPV", G::kVerb}, {"XSN", G::kNoun}, {"XSV", G::kVerb},
    {"XSA", G::kAdj},  {"XR", G::kNoun},  {"UN", G::kNoun},  {"SF", G::kPunct},
    {"SP", G::kPunct}, {"SS", G::kPunct}, {"SE", G::kPunct}, {"SO", G::kPunct},
    {"SW", G::kPunct}, {"OH", G::kOther}, {"OL", G::kOther}, {"ON", G::kOther},
    {"UV", G::kOther}, {"UE", G::kOther}, {"UNKNOWN", G::kOther},
}};

constexpr std::array<std::string_view, 16> kContentTags = {
    "NNG", "NNP", "NNB", "NNM", "NR", "NP", "VV", "VA",
    "VXV", "VXA", "VCP", "VCN", "MDT", "MDN", "MAG", "MAC"};

std::array<std::string_view, kTagTable.size()> make_tag_list() {
  std::array<std::string_view, kTagTable.size()> out{};
  for (std::size_t i = 0; i < kTagTable.size(); ++i) out[i] = kTagTable[i].tag;
  return out;
}

const std::array<std::string_view, kTagTable.size()> kTagList = make_tag_list();

// 하 + ㄴ -> 한 before the contraction rules see the text.
std::string attach_final_consonants(std::span<const TaggedMorpheme> morphemes) {
  std::u32string out;
  for (const auto& m : morphemes) {
    auto cps = text::decode(m.surface);
    std::size_t k = 0;
    if (!cps.empty() && !out.empty() && hangul::is_syllable(out.back())) {
      int jong = hangul::jongseong_index(cps.front());
      auto prev = std::get<hangul::Syllable>(hangul::decompose_syllable(out.back()));
      if (jong > 0 && !prev.has_final()) {
        prev.jongseong = jong;
        out.back() = hangul::compose_syllable(prev);
        k = 1;
      }
    }
    out.append(cps.begin() + static_cast<std::ptrdiff_t>(k), cps.end());
  }
  return text::encode(out);
}

}  // namespace

std::string_view group_name(PosGroup g) {
  switch (g) {
    case PosGroup::kNoun: return "NOUN";
    case PosGroup::kVerb: return "VERB";
    case PosGroup::kAdj: return "ADJ";
    case PosGroup::kPart: return "PART";
    case PosGroup::kEnd: return "END";
    case PosGroup::kMod: return "MOD";
    case PosGroup::kPunct: return "PUNCT";
    case PosGroup::kOther: return "OTHER";
  }
  return "OTHER";
}

std::span<const std::string_view> declared_tagset() { return kTagList; }

PosGroup group_of(std::string_view tag) {
  for (const auto& row : kTagTable) {
    if (row.tag == tag) return row.group;
  }
  return PosGroup::kOther;
}

bool is_content_tag(std::string_view tag) {
  return std::find(kContentTags.begin(), kContentTags.end(), tag) != kContentTags.end();
}

GroupSet groups_of(std::span<const TaggedMorpheme> morphemes) {
  GroupSet out;
  for (const auto& m : morphemes) out.insert(m.group());
  return out;
}

bool reconstructs(std::string_view word, std::span<const TaggedMorpheme> morphemes) {
  if (morphemes.empty()) return false;
  for (const auto& m : morphemes) {
    if (m.surface.empty()) return false;
  }
  const std::string attached = attach_final_consonants(morphemes);
  if (attached == word) return true;
  return orthography::merge_morphemes({attached}) == word;
}

Analysis unknown_analysis(std::string_view word) {
  return {TaggedMorpheme{std::string(word), std::string(word), std::string(kUnknownTag)}};
}

GroupSet pos_groups(Tagger& tagger, std::string_view word) {
  return groups_of(tagger.tag_word(word));
}

}  // namespace kagaskit::pos

namespace kagaskit::pos {

const Analysis& CachedTagger::analysis(std::string_view word) {
  auto it = cache_.find(word);
  if (it == cache_.end()) it = cache_.emplace(std::string(word), inner_.tag_word(word)).first;
  return it->second;
}

}  // namespace kagaskit::pos
