#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kagaskit/classifier.hpp"
#include "kagaskit/lexicon_tagger.hpp"

#ifndef KAGASKIT_TEST_DATA_DIR
#error "KAGASKIT_TEST_DATA_DIR must be defined"
#endif
#ifndef KAGASKIT_TEST_FIXTURE_DIR
#error "KAGASKIT_TEST_FIXTURE_DIR must be defined"
#endif

namespace kagaskit::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(KAGASKIT_TEST_DATA_DIR) / name;
}

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(KAGASKIT_TEST_FIXTURE_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (;;) {
      auto tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    rows.push_back(std::move(cols));
  }
  return rows;
}

inline std::shared_ptr<const pos::MorphLexicon> bundled_lexicon() {
  static auto lex = std::make_shared<const pos::MorphLexicon>(
      pos::MorphLexicon::load(data_path("morph_lexicon.tsv")));
  return lex;
}

inline const classify::SpellLexicon& bundled_spell() {
  static const auto spell = classify::SpellLexicon::load(data_path("spell_lexicon.txt"));
  return spell;
}

// Tagger + annotator over the bundled resources.
struct BundledAnnotator {
  pos::LexiconTagger tagger{bundled_lexicon()};
  classify::Annotator annotator{tagger, bundled_spell()};
};

// ---- oracles ----

// Syllable slots straight from the Unicode arithmetic.
struct Slots {
  int l, v, t;
};
inline bool oracle_is_syllable(char32_t c) { return c >= 0xAC00 && c <= 0xD7A3; }
inline Slots oracle_slots(char32_t c) {
  const int s = static_cast<int>(c) - 0xAC00;
  return {s / (21 * 28), (s % (21 * 28)) / 28, s % 28};
}

// Memoized recursion over characters; costs in thirds.
inline int oracle_jamo_thirds(const std::u32string& a, const std::u32string& b) {
  std::map<std::pair<std::size_t, std::size_t>, int> memo;
  std::function<int(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> int {
    if (i == a.size()) return static_cast<int>(3 * (b.size() - j));
    if (j == b.size()) return static_cast<int>(3 * (a.size() - i));
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int sub;
    if (a[i] == b[j]) {
      sub = 0;
    } else if (oracle_is_syllable(a[i]) && oracle_is_syllable(b[j])) {
      auto x = oracle_slots(a[i]);
      auto y = oracle_slots(b[j]);
      sub = (x.l != y.l) + (x.v != y.v) + (x.t != y.t);
    } else {
      sub = 3;
    }
    int best = std::min({go(i + 1, j) + 3, go(i, j + 1) + 3, go(i + 1, j + 1) + sub});
    memo[key] = best;
    return best;
  };
  return go(0, 0);
}

// Exhaustive search over every edit script (no memo): match, substitute,
// delete, insert, and block transpositions of 2..max_k tokens.
inline double brute_force_alignment_cost(
    const std::vector<std::string>& o, const std::vector<std::string>& c,
    const std::function<double(const std::string&, const std::string&)>& sub,
    std::size_t max_k = 3) {
  std::function<double(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == o.size() && j == c.size()) return 0.0;
    double best = INFINITY;
    if (i < o.size()) best = std::min(best, 1.0 + go(i + 1, j));
    if (j < c.size()) best = std::min(best, 1.0 + go(i, j + 1));
    if (i < o.size() && j < c.size()) {
      best = std::min(best, (o[i] == c[j] ? 0.0 : sub(o[i], c[j])) + go(i + 1, j + 1));
    }
    for (std::size_t k = 2; k <= max_k && i + k <= o.size() && j + k <= c.size(); ++k) {
      std::vector<std::string> x(o.begin() + i, o.begin() + i + k);
      std::vector<std::string> y(c.begin() + j, c.begin() + j + k);
      if (x == y) continue;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x == y) best = std::min(best, static_cast<double>(k - 1) + go(i + k, j + k));
    }
    return best;
  };
  return go(0, 0);
}

inline std::vector<std::string> random_sentence(std::mt19937& rng, std::size_t max_len) {
  static const std::vector<std::string> vocab = {"저는",   "학교에", "학교에서", "갔어요", "갔다",
                                                "친구",   "친구가", "더",       "한국어를", "배우고",
                                                ".",      "이",     "옷은"};
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, vocab.size() - 1);
  std::vector<std::string> t(len(rng));
  for (auto& w : t) w = vocab[pick(rng)];
  return t;
}

// Corrected side derived from the original by a few random perturbations,
// so that matches and reorderings show up often.
inline std::vector<std::string> perturb(std::mt19937& rng, std::vector<std::string> t,
                                        std::size_t max_len) {
  std::uniform_int_distribution<int> op(0, 4);
  const int steps = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int s = 0; s < steps; ++s) {
    const auto extra = random_sentence(rng, 1);
    switch (op(rng)) {
      case 0:
        if (!t.empty()) t.erase(t.begin() + static_cast<long>(rng() % t.size()));
        break;
      case 1:
        if (t.size() < max_len && !extra.empty()) {
          t.insert(t.begin() + static_cast<long>(rng() % (t.size() + 1)), extra[0]);
        }
        break;
      case 2:
        if (!t.empty() && !extra.empty()) t[rng() % t.size()] = extra[0];
        break;
      default:
        if (t.size() >= 2) {
          auto i = rng() % (t.size() - 1);
          std::swap(t[i], t[i + 1]);
        }
    }
  }
  return t;
}

inline double direct_f_beta(double p, double r, double beta) {
  const double b2 = beta * beta;
  if (p + r == 0.0) return 0.0;
  return (1.0 + b2) * p * r / (b2 * p + r);
}

// Random Hangul string of 0..max_len syllables drawn from a small alphabet so
// that near-misses are common.
inline std::string random_hangul(std::mt19937& rng, std::size_t max_len) {
  static const int cho[] = {0, 2, 3, 11};
  static const int jung[] = {0, 4, 8, 20};
  static const int jong[] = {0, 4, 8};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> pick3(0, 2);
  std::u32string s;
  for (std::size_t n = len(rng); n > 0; --n) {
    s.push_back(static_cast<char32_t>(0xAC00 + (cho[pick(rng)] * 21 + jung[pick(rng)]) * 28 +
                                      jong[pick3(rng)]));
  }
  std::string out;
  for (char32_t ch : s) {
    // three-byte UTF-8; all syllables are in the BMP above U+0800
    out.push_back(static_cast<char>(0xE0 | (ch >> 12)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  }
  return out;
}

inline std::u32string oracle_decode(const std::string& s) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    const auto b = static_cast<unsigned char>(s[i]);
    if (b < 0x80) {
      out.push_back(b);
      i += 1;
    } else if ((b >> 5) == 6) {
      out.push_back(((b & 0x1F) << 6) | (s[i + 1] & 0x3F));
      i += 2;
    } else if ((b >> 4) == 14) {
      out.push_back(((b & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F));
      i += 3;
    } else {
      out.push_back(((b & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) | ((s[i + 2] & 0x3F) << 6) |
                    (s[i + 3] & 0x3F));
      i += 4;
    }
  }
  return out;
}

// Hand-rule contraction oracle for the four merging cases; works syllable by
// syllable on the slot arithmetic, independently of the library.
inline std::string oracle_contract(const std::string& left, const std::string& right) {
  auto l = oracle_decode(left);
  auto r = oracle_decode(right);
  auto last = oracle_slots(l.back());
  auto first = oracle_slots(r.front());
  const int ieung = 11, a = 0, eo = 4, o = 8, wa = 9, yeo = 6, i = 20;
  int v = -1;
  if (last.t == 0 && first.l == ieung) {
    if (last.v == a && first.v == a) v = a;         // 가+았
    if (last.v == eo && first.v == eo) v = eo;
    if (last.v == o && first.v == a) v = wa;        // 오+았
    if (last.v == i && first.v == eo) v = yeo;      // 이+었
  }
  std::u32string out = l;
  if (v >= 0) {
    out.back() = static_cast<char32_t>(0xAC00 + (last.l * 21 + v) * 28 + first.t);
    out += r.substr(1);
  } else {
    out += r;
  }
  std::string s;
  for (char32_t ch : out) {
    if (ch < 0x80) {
      s.push_back(static_cast<char>(ch));
    } else {
      s.push_back(static_cast<char>(0xE0 | (ch >> 12)));
      s.push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
      s.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
    }
  }
  return s;
}

// Deterministic corpus built from the golden rows with random context words
// and occasional extra edits.
inline std::vector<std::pair<std::string, std::string>> synthetic_pairs(std::size_t n,
                                                                        unsigned seed = 7) {
  const auto rows = read_tsv(fixture_path("golden_types.tsv"));
  static const std::vector<std::string> context = {"정말", "오늘은", "그래서", "저는", "친구와",
                                                   "학교에", "너무", "어제", "다시", "."};
  std::mt19937 rng(seed);
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i % rows.size()];
    std::string o = row[1], c = row[2];
    const std::string& w = context[rng() % context.size()];
    switch (rng() % 4) {
      case 0: o = w + " " + o; c = w + " " + c; break;
      case 1: o += " " + w; c += " " + w; break;
      case 2: o = w + " " + o; c = c + " " + w; break;
      default: break;
    }
    out.emplace_back(std::move(o), std::move(c));
  }
  return out;
}

}  // namespace kagaskit::testing
