#include "kagaskit/lexicon_tagger.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>

#include "kagaskit/hangul.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::pos {

MorphLexicon MorphLexicon::parse(std::istream& in, std::string_view source_name) {
  MorphLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (;;) {
      auto tab = line.find('\t', start);
      cols.emplace_back(text::trim(std::string_view(line).substr(start, tab - start)));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 3 || cols[0].empty() || cols[2].empty()) {
      std::ostringstream msg;
      msg << source_name << ":" << lineno << ": expected surface<TAB>lemma<TAB>tag";
      throw LexiconError(msg.str());
    }
    if (cols[1].empty()) cols[1] = cols[0];
    lex.add(std::move(cols[0]), std::move(cols[1]), std::move(cols[2]));
  }
  return lex;
}

MorphLexicon MorphLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot open morpheme lexicon: " + path.string());
  return parse(in, path.string());
}

void MorphLexicon::add(std::string surface, std::string lemma, std::string tag) {
  auto& bucket = entries_[std::move(surface)];
  for (const auto& e : bucket) {
    if (e.lemma == lemma && e.tag == tag) return;
  }
  bucket.push_back(Entry{std::move(lemma), std::move(tag)});
  ++size_;
}

const std::vector<MorphLexicon::Entry>* MorphLexicon::find(std::string_view surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

// Morphotactic classes for the lattice grammar.
enum Cls : int {
  kStart,
  kNoun,
  kGuess,
  kPart,
  kStem,
  kPre,
  kConn,
  kFinal,
  kNominal,
  kAdnominal,
  kMod,
  kPrefix,
  kClsCount
};

bool one_of(std::string_view tag, std::initializer_list<std::string_view> tags) {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

Cls class_of(std::string_view tag) {
  if (tag.starts_with("J")) return kPart;
  if (tag.starts_with("EP")) return kPre;
  if (tag.starts_with("EC")) return kConn;
  if (tag.starts_with("EF")) return kFinal;
  if (tag == "ETN") return kNominal;
  if (tag == "ETD") return kAdnominal;
  if (tag == "XPN") return kPrefix;
  if (one_of(tag, {"VV", "VA", "VXV", "VXA", "VCP", "VCN", "XSV", "XSA", "XPV"})) return kStem;
  if (one_of(tag, {"MAG", "MAC", "MDT", "MDN", "IC"})) return kMod;
  return kNoun;
}

bool can_end(int c) {
  switch (c) {
    case kNoun: case kGuess: case kPart: case kConn: case kFinal:
    case kNominal: case kAdnominal: case kMod:
      return true;
    default:
      return false;
  }
}

bool can_start(std::string_view tag) {
  switch (class_of(tag)) {
    case kNoun: return tag != "XSN";
    case kStem: return !one_of(tag, {"XSV", "XSA", "VCP"});
    case kMod: case kPrefix: return true;
    default: return false;
  }
}

bool can_follow(int prev, std::string_view tag) {
  const Cls next = class_of(tag);
  switch (prev) {
    case kStart: return can_start(tag);
    case kNoun: return next == kPart || next == kNoun || one_of(tag, {"VCP", "XSV", "XSA"});
    case kGuess: return next == kPart || one_of(tag, {"VCP", "XSN", "XSV", "XSA"});
    case kPart: return next == kPart;
    case kStem:
    case kPre:
      return next == kPre || next == kConn || next == kFinal || next == kNominal ||
             next == kAdnominal;
    case kConn: return tag == "JX" || one_of(tag, {"VV", "VXV", "VXA"});
    case kFinal: return tag == "JX";
    case kNominal: return next == kPart;
    case kMod: return next == kPart;
    case kPrefix: return next == kNoun && tag != "XSN";
    default: return false;
  }
}

// Compared lexicographically: unknown characters first, then how many extra
// words had to be assumed inside the token, then morpheme and split counts.
struct Score {
  int unknown = 0;
  int breaks = 0;
  int morphs = 0;
  int splits = 0;
  auto operator<=>(const Score&) const = default;
};

struct Split {
  std::u32string left;
  std::u32string right;
};

std::vector<Split> splits_of(char32_t c) {
  namespace cho = hangul::cho;
  namespace jung = hangul::jung;
  namespace jong = hangul::jong;
  std::vector<Split> out;
  const auto s = std::get<hangul::Syllable>(hangul::decompose_syllable(c));
  auto syl = [](int a, int b, int d) {
    return std::u32string(1, hangul::compose_syllable(hangul::Syllable{a, b, d}));
  };
  // 한 -> 하 + ㄴ
  if (s.jongseong == jong::kNieun || s.jongseong == jong::kRieul ||
      s.jongseong == jong::kMieum || s.jongseong == jong::kBieup) {
    out.push_back({syl(s.choseong, s.jungseong, 0),
                   std::u32string(1, hangul::jongseong_letter(s.jongseong))});
  }
  // inverse of the vowel contractions: 갔 -> 가 + 았, 왔 -> 오 + 았, 였 -> 이 + 었
  if ((s.jungseong == jung::kA || s.jungseong == jung::kEo) && s.choseong != cho::kIeung) {
    out.push_back({syl(s.choseong, s.jungseong, 0), syl(cho::kIeung, s.jungseong, s.jongseong)});
  } else if (s.jungseong == jung::kWa) {
    out.push_back({syl(s.choseong, jung::kO, 0), syl(cho::kIeung, jung::kA, s.jongseong)});
  } else if (s.jungseong == jung::kWo) {
    out.push_back({syl(s.choseong, jung::kU, 0), syl(cho::kIeung, jung::kEo, s.jongseong)});
  } else if (s.jungseong == jung::kYeo) {
    out.push_back({syl(s.choseong, jung::kI, 0), syl(cho::kIeung, jung::kEo, s.jongseong)});
  }
  return out;
}

constexpr int kMaxMorphemeSyllables = 8;
constexpr int kMaxSplits = 2;
constexpr int kPrefixSlots = kMaxSplits + 1;

struct Node {
  bool reached = false;
  Score score;
  int prev = -1;
  std::string surface;
  std::string lemma;
  std::string tag;
};

class RunLattice {
 public:
  RunLattice(const MorphLexicon& lex, const std::u32string& syllables, Cls initial)
      : lex_(lex), syl_(syllables), n_(static_cast<int>(syllables.size())), initial_(initial) {
    splits_.reserve(syllables.size());
    for (char32_t c : syllables) splits_.push_back(splits_of(c));
    nodes_.resize(static_cast<std::size_t>((n_ + 1) * kPrefixSlots * kClsCount));
  }

  std::optional<std::pair<Score, Analysis>> solve() {
    Node& start = nodes_[index(0, 0, initial_)];
    start.reached = true;
    for (int i = 0; i <= n_; ++i) {
      // Residue states at position i feed the plain state at i, so they go first.
      for (int p = 1; p < kPrefixSlots; ++p) expand_position(i, p);
      expand_position(i, 0);
    }
    int best = -1;
    for (int c = 0; c < kClsCount; ++c) {
      const int k = index(n_, 0, c);
      const Node& node = nodes_[k];
      if (!node.reached || k == index(0, 0, initial_) || !can_end(c)) continue;
      if (best < 0 || node.score < nodes_[best].score) best = k;
    }
    if (best < 0) return std::nullopt;
    Analysis out;
    for (int k = best; nodes_[k].prev >= 0; k = nodes_[k].prev) {
      out.push_back(TaggedMorpheme{nodes_[k].surface, nodes_[k].lemma, nodes_[k].tag});
    }
    std::reverse(out.begin(), out.end());
    return std::make_pair(nodes_[best].score, std::move(out));
  }

 private:
  int index(int pos, int prefix, int cls) const {
    return (pos * kPrefixSlots + prefix) * kClsCount + cls;
  }

  void expand_position(int i, int p) {
    if (p > 0 && (i == 0 || p - 1 >= static_cast<int>(splits_[i - 1].size()))) return;
    const std::u32string prefix = p > 0 ? splits_[i - 1][p - 1].right : std::u32string();
    for (int c = 0; c < kClsCount; ++c) {
      const int from = index(i, p, c);
      if (!nodes_[from].reached) continue;
      for (int j = i; j <= std::min(n_, i + kMaxMorphemeSyllables); ++j) {
        const std::u32string base = prefix + syl_.substr(i, j - i);
        if (!base.empty()) try_lexicon(from, c, base, j, 0, 0);
        if (j < n_) {
          const auto& sp = splits_[j];
          for (int k = 0; k < static_cast<int>(sp.size()); ++k) {
            try_lexicon(from, c, base + sp[k].left, j + 1, k + 1, 1);
          }
        }
      }
      if (p != 0) continue;
      // Unknown leading span, e.g. an unlisted stem before a particle.
      if (c == kStart && i == 0) {
        for (int j = 1; j < n_; ++j) relax_guess(from, syl_.substr(0, j), j);
      }
      // Unknown residue after a noun.
      if (c == kNoun && i < n_) relax_guess(from, syl_.substr(i), n_);
    }
  }

  void try_lexicon(int from, int cls, const std::u32string& surface, int to_pos, int to_prefix,
                   int split_inc) {
    const std::string key = text::encode(surface);
    const auto* entries = lex_.find(key);
    if (!entries) return;
    for (const auto& e : *entries) {
      int brk = 0;
      if (!can_follow(cls, e.tag)) {
        if (cls == kStart || !can_end(cls) || !can_start(e.tag)) continue;
        brk = 1;
      }
      Score s = nodes_[from].score;
      s.breaks += brk;
      s.morphs += 1;
      s.splits += split_inc;
      relax(from, index(to_pos, to_prefix, class_of(e.tag)), s, key, e.lemma, e.tag);
    }
  }

  void relax_guess(int from, const std::u32string& surface, int to_pos) {
    Score s = nodes_[from].score;
    s.unknown += static_cast<int>(surface.size());
    s.morphs += 1;
    const std::string key = text::encode(surface);
    relax(from, index(to_pos, 0, kGuess), s, key, key, "NNP");
  }

  void relax(int from, int to, const Score& s, const std::string& surface,
             const std::string& lemma, const std::string& tag) {
    Node& node = nodes_[to];
    if (node.reached && !(s < node.score)) return;
    node.reached = true;
    node.score = s;
    node.prev = from;
    node.surface = surface;
    node.lemma = lemma;
    node.tag = tag;
  }

  const MorphLexicon& lex_;
  const std::u32string& syl_;
  int n_;
  Cls initial_;
  std::vector<std::vector<Split>> splits_;
  std::vector<Node> nodes_;
};

std::string punctuation_tag(char32_t c) {
  switch (c) {
    case U'.': case U'?': case U'!': case U'。': case U'！': case U'？':
      return "SF";
    case U',': case U'·': case U'/': case U':': case U';': case U'、': case U'，':
      return "SP";
    case U'(': case U')': case U'[': case U']': case U'{': case U'}': case U'<': case U'>':
    case U'"': case U'\'': case U'`': case U'‘': case U'’': case U'“': case U'”':
    case U'「': case U'」': case U'『': case U'』': case U'〈': case U'〉': case U'《':
    case U'》': case U'【': case U'】': case U'«': case U'»':
      return "SS";
    case U'…':
      return "SE";
    case U'-': case U'~': case U'∼': case U'―': case U'–': case U'—':
      return "SO";
    default:
      return "SW";
  }
}

bool is_hanja(char32_t c) { return (c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF); }

enum class RunKind { kHangul, kDigit, kLatin, kHanja, kPunct, kOther };

RunKind kind_of(char32_t c) {
  if (hangul::is_syllable(c)) return RunKind::kHangul;
  if (text::is_digit(c)) return RunKind::kDigit;
  if (text::is_latin(c)) return RunKind::kLatin;
  if (is_hanja(c)) return RunKind::kHanja;
  if (text::is_punctuation(c)) return RunKind::kPunct;
  return RunKind::kOther;
}

}  // namespace

LexiconTagger::LexiconTagger(std::shared_ptr<const MorphLexicon> lexicon)
    : lexicon_(std::move(lexicon)) {
  if (!lexicon_) throw std::invalid_argument("LexiconTagger: null lexicon");
}

Analysis LexiconTagger::analyze(std::string_view word) const {
  const std::u32string cps = text::decode(word);
  if (cps.empty()) return unknown_analysis(word);

  Analysis out;
  Cls next_state = kStart;
  std::size_t i = 0;
  while (i < cps.size()) {
    const RunKind kind = kind_of(cps[i]);
    std::size_t j = i + 1;
    if (kind != RunKind::kPunct) {
      while (j < cps.size() && kind_of(cps[j]) == kind) ++j;
    }
    const std::u32string run = cps.substr(i, j - i);
    const std::string run_utf8 = text::encode(run);
    switch (kind) {
      case RunKind::kHangul: {
        auto res = RunLattice(*lexicon_, run, next_state).solve();
        if (!res) {
          const auto* entries = lexicon_->find(run_utf8);
          if (!entries) return unknown_analysis(word);
          out.push_back(TaggedMorpheme{run_utf8, entries->front().lemma, entries->front().tag});
        } else {
          for (auto& m : res->second) out.push_back(std::move(m));
        }
        next_state = kStart;
        break;
      }
      case RunKind::kDigit:
        out.push_back(TaggedMorpheme{run_utf8, run_utf8, "NR"});
        next_state = kNoun;
        break;
      case RunKind::kLatin:
        out.push_back(TaggedMorpheme{run_utf8, run_utf8, "OL"});
        next_state = kNoun;
        break;
      case RunKind::kHanja:
        out.push_back(TaggedMorpheme{run_utf8, run_utf8, "OH"});
        next_state = kNoun;
        break;
      case RunKind::kPunct:
        out.push_back(TaggedMorpheme{run_utf8, run_utf8, punctuation_tag(run.front())});
        next_state = kStart;
        break;
      case RunKind::kOther:
        out.push_back(TaggedMorpheme{run_utf8, run_utf8, "SW"});
        next_state = kStart;
        break;
    }
    i = j;
  }
  return out;
}

TaggerFactory lexicon_tagger_factory(std::shared_ptr<const MorphLexicon> lexicon) {
  return [lexicon]() -> std::unique_ptr<Tagger> { return std::make_unique<LexiconTagger>(lexicon); };
}

}  // namespace kagaskit::pos
