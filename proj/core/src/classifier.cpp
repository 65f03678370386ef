#include "kagaskit/classifier.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include "kagaskit/hangul.hpp"
#include "kagaskit/preprocess.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::classify {

SpellLexicon SpellLexicon::parse(std::istream& in) {
  SpellLexicon lex;
  std::string line;
  while (std::getline(in, line)) {
    auto word = text::trim(line);
    if (word.empty() || word.front() == '#') continue;
    lex.add(std::string(word));
  }
  return lex;
}

SpellLexicon SpellLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open spell lexicon: " + path.string());
  return parse(in);
}

namespace {

bool same_morpheme(const pos::TaggedMorpheme& a, const pos::TaggedMorpheme& b) {
  return a.lemma == b.lemma && a.tag == b.tag;
}

double morpheme_sub_cost(const pos::TaggedMorpheme& a, const pos::TaggedMorpheme& b) {
  const double len =
      static_cast<double>(std::max(text::length(a.surface), text::length(b.surface)));
  if (len == 0) return 0.0;
  return std::clamp(hangul::jamo_distance(a.surface, b.surface) / len, 0.0, 1.0);
}

using pos::PosGroup;

bool is_conjugation(const pos::GroupSet& g) {
  return g == pos::GroupSet{PosGroup::kVerb, PosGroup::kEnd} ||
         g == pos::GroupSet{PosGroup::kAdj, PosGroup::kEnd};
}

const pos::GroupSet kPunctOnly = {PosGroup::kPunct};

}  // namespace

MorphemeDiff morpheme_diff(const pos::Analysis& o, const pos::Analysis& c) {
  const std::size_t n = o.size();
  const std::size_t m = c.size();
  constexpr double kEps = 1e-9;
  enum Step : unsigned char { kNone, kKeep, kSub, kDel, kIns };
  std::vector<std::vector<double>> d(n + 1, std::vector<double>(m + 1, 0.0));
  std::vector<std::vector<Step>> step(n + 1, std::vector<Step>(m + 1, kNone));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      double best = std::numeric_limits<double>::infinity();
      Step how = kNone;
      if (i > 0 && j > 0) {
        const bool eq = same_morpheme(o[i - 1], c[j - 1]);
        best = d[i - 1][j - 1] + (eq ? 0.0 : morpheme_sub_cost(o[i - 1], c[j - 1]));
        how = eq ? kKeep : kSub;
      }
      if (i > 0 && d[i - 1][j] + 1.0 < best - kEps) {
        best = d[i - 1][j] + 1.0;
        how = kDel;
      }
      if (j > 0 && d[i][j - 1] + 1.0 < best - kEps) {
        best = d[i][j - 1] + 1.0;
        how = kIns;
      }
      d[i][j] = best;
      step[i][j] = how;
    }
  }
  MorphemeDiff out;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    switch (step[i][j]) {
      case kKeep: --i; --j; break;
      case kSub:
        out.deleted.push_back(o[--i]);
        out.inserted.push_back(c[--j]);
        break;
      case kDel: out.deleted.push_back(o[--i]); break;
      case kIns: out.inserted.push_back(c[--j]); break;
      case kNone: i = j = 0; break;
    }
  }
  std::reverse(out.deleted.begin(), out.deleted.end());
  std::reverse(out.inserted.begin(), out.inserted.end());
  return out;
}

ErrorType type_for_group(PosGroup g) {
  switch (g) {
    case PosGroup::kNoun: return ErrorType::kNoun;
    case PosGroup::kVerb: return ErrorType::kVerb;
    case PosGroup::kAdj: return ErrorType::kAdj;
    case PosGroup::kPart: return ErrorType::kPart;
    case PosGroup::kEnd: return ErrorType::kEnd;
    case PosGroup::kMod: return ErrorType::kMod;
    case PosGroup::kPunct: return ErrorType::kPunct;
    case PosGroup::kOther: return ErrorType::kUnk;
  }
  return ErrorType::kUnk;
}

Annotator::Annotator(pos::Tagger& tagger, const SpellLexicon& spell)
    : tagger_(tagger), cost_(tagger_), spell_(spell) {}

std::vector<align::Edit> Annotator::annotate(const align::Tokens& original,
                                             const align::Tokens& corrected) {
  auto alignment = align::align(original, corrected, cost_.as_function());
  auto edits = align::extract_edits(alignment.ops, original, corrected);
  for (auto& e : edits) e.type = classify(e);
  return edits;
}

std::vector<align::Edit> Annotator::annotate(std::string_view original,
                                             std::string_view corrected) {
  return annotate(align::tokenize(preprocess::normalize_punct_spacing(original)),
                  align::tokenize(preprocess::normalize_punct_spacing(corrected)));
}

pos::Analysis Annotator::analyze_tokens(const align::Tokens& toks) {
  pos::Analysis out;
  for (const auto& t : toks) {
    const auto& a = tagger_.analysis(t);
    out.insert(out.end(), a.begin(), a.end());
  }
  return out;
}

MorphemeDiff Annotator::diff_words(const align::Tokens& original,
                                   const align::Tokens& corrected) {
  return morpheme_diff(analyze_tokens(original), analyze_tokens(corrected));
}

ErrorType Annotator::classify(const align::Edit& edit) {
  if (edit.o_toks.empty()) return ErrorType::kIns;
  if (edit.c_toks.empty()) return ErrorType::kDel;
  if (edit.type == ErrorType::kWs) return ErrorType::kWs;
  if (edit.type == ErrorType::kWo) return ErrorType::kWo;

  const bool orig_oov = std::none_of(edit.o_toks.begin(), edit.o_toks.end(),
                                     [&](const std::string& t) { return spell_.contains(t); });
  const bool corr_known = std::all_of(edit.c_toks.begin(), edit.c_toks.end(),
                                      [&](const std::string& t) { return spell_.contains(t); });
  if (orig_oov && corr_known) return ErrorType::kSpell;

  const pos::Analysis o = analyze_tokens(edit.o_toks);
  const pos::Analysis c = analyze_tokens(edit.c_toks);
  if (o.size() == c.size() && std::equal(o.begin(), o.end(), c.begin(), same_morpheme) &&
      edit.o_toks != edit.c_toks) {
    return ErrorType::kShort;
  }

  auto unknown = [](const pos::TaggedMorpheme& m) { return m.is_unknown(); };
  if (std::any_of(o.begin(), o.end(), unknown) || std::any_of(c.begin(), c.end(), unknown)) {
    return ErrorType::kUnk;
  }

  const MorphemeDiff diff = morpheme_diff(o, c);
  const pos::GroupSet inserted = pos::groups_of(diff.inserted);
  pos::GroupSet all = pos::groups_of(diff.deleted);
  all.insert(inserted.begin(), inserted.end());

  if (all == kPunctOnly || inserted == kPunctOnly) return ErrorType::kPunct;
  if (all.size() == 1) return type_for_group(*all.begin());
  if (is_conjugation(all)) return ErrorType::kConj;
  // Mixed diffs fall back to what the correction introduced.
  if (inserted.size() == 1) return type_for_group(*inserted.begin());
  if (is_conjugation(inserted)) return ErrorType::kConj;
  return ErrorType::kUnk;
}

}  // namespace kagaskit::classify
