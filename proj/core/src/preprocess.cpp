#include "kagaskit/preprocess.hpp"

#include <algorithm>
#include <set>

#include "kagaskit/alignment.hpp"
#include "kagaskit/hangul.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::preprocess {

namespace {

std::u32string collapse_spaces(const std::u32string& in) {
  std::u32string out;
  for (char32_t c : in) {
    if (text::is_space(c)) {
      if (!out.empty() && out.back() != U' ') out.push_back(U' ');
    } else {
      out.push_back(c);
    }
  }
  if (!out.empty() && out.back() == U' ') out.pop_back();
  return out;
}

bool is_squashable(char32_t c) {
  switch (c) {
    case U' ': case U'!': case U';': case U'?': case U'~': case U'>':
    case U'^': case U'+': case U'ㅠ': case U'ㅜ': case U'ㅋ':
      return true;
    default:
      return false;
  }
}

char32_t closer_for(char32_t c) {
  switch (c) {
    case U'(': return U')';
    case U'{': return U'}';
    case U'<': return U'>';
    case U'[': return U']';
    default: return 0;
  }
}

bool is_closer(char32_t c) { return c == U')' || c == U'}' || c == U'>' || c == U']'; }

bool allowed_script(char32_t c) {
  if (hangul::is_syllable(c)) return true;
  if (c >= 0x3131 && c <= 0x318E) return true;  // compatibility jamo
  if (c >= 0x1100 && c <= 0x11FF) return true;  // conjoining jamo
  if (c < 0x80) return true;                    // ASCII letters, digits, symbols
  return text::is_space(c) || text::is_latin(c) || text::is_punctuation(c);
}

bool is_ascii_word(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](unsigned char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z');
  });
}

bool contains_noise(const std::vector<std::string>& tokens, const std::string& text,
                    const std::vector<std::string>& noise_words) {
  for (const auto& w : noise_words) {
    if (w.empty()) continue;
    if (is_ascii_word(w)) {
      const std::string lw = text::to_lower_ascii(w);
      for (const auto& t : tokens) {
        if (text::to_lower_ascii(t) == lw) return true;
      }
    } else if (text.find(w) != std::string::npos) {
      return true;
    }
  }
  return false;
}

// Per-op token groups of a plain unit-cost token diff.
std::vector<std::pair<align::Tokens, align::Tokens>> changed_groups(std::string_view a,
                                                                    std::string_view b) {
  const auto ta = align::tokenize(normalize_punct_spacing(a));
  const auto tb = align::tokenize(normalize_punct_spacing(b));
  auto unit = [](const std::string&, const std::string&) { return 1.0; };
  const auto alignment = align::align(ta, tb, unit);
  std::vector<std::pair<align::Tokens, align::Tokens>> out;
  for (const auto& e : align::extract_edits(alignment.ops, ta, tb)) {
    out.emplace_back(e.o_toks, e.c_toks);
  }
  return out;
}

std::u32string strip_punctuation(std::string_view s) {
  std::u32string out;
  for (char32_t c : text::decode(s)) {
    out.push_back(text::is_punctuation(c) ? U' ' : c);
  }
  return collapse_spaces(out);
}

constexpr std::u32string_view kNumeralSyllables =
    U"영공일이삼사오육륙칠팔구십백천만억조하나둘셋넷다섯여일곱덟아홉열스물서른마흔쉰한두세네";

bool has_digit(const align::Tokens& toks) {
  return std::any_of(toks.begin(), toks.end(), [](const std::string& t) {
    const auto cps = text::decode(t);
    return std::any_of(cps.begin(), cps.end(), text::is_digit);
  });
}

// Digits, numeral syllables and spaces removed.
std::u32string without_numerals(const align::Tokens& toks) {
  std::u32string out;
  for (const auto& t : toks) {
    for (char32_t c : text::decode(t)) {
      if (!text::is_digit(c) && kNumeralSyllables.find(c) == std::u32string_view::npos) {
        out.push_back(c);
      }
    }
  }
  return out;
}

// "5시에" vs "다섯 시에": only the way a number is written differs.
bool is_numeric_change(const align::Tokens& o, const align::Tokens& c) {
  if (!has_digit(o) && !has_digit(c)) return false;
  return without_numerals(o) == without_numerals(c);
}

}  // namespace

std::string normalize_punct_spacing(std::string_view in) {
  std::u32string out;
  for (char32_t c : text::decode(in)) {
    if (text::is_punctuation(c)) {
      out.push_back(U' ');
      out.push_back(c);
      out.push_back(U' ');
    } else {
      out.push_back(c);
    }
  }
  return text::encode(collapse_spaces(out));
}

std::string squash_repeats(std::string_view in) {
  std::u32string out;
  for (char32_t c : text::decode(in)) {
    if (is_squashable(c) && !out.empty() && out.back() == c) continue;
    out.push_back(c);
  }
  return text::encode(out);
}

std::string strip_brackets(std::string_view in) {
  std::u32string out;
  std::vector<std::pair<char32_t, std::size_t>> open;
  for (char32_t c : text::decode(in)) {
    if (char32_t close = closer_for(c)) {
      open.emplace_back(close, out.size());
      out.push_back(c);
    } else if (is_closer(c) && !open.empty() && open.back().first == c) {
      out.resize(open.back().second);
      open.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return text::encode(out);
}

std::string lang8_clean(std::string_view in) {
  return normalize_punct_spacing(squash_repeats(strip_brackets(in)));
}

std::size_t lcs_length(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

PairStats compute_pair_stats(std::string_view original, std::string_view corrected) {
  PairStats s;
  s.n_t_pre = text::split_whitespace(original).size();
  s.n_t_post = text::split_whitespace(corrected).size();
  s.r_t = s.n_t_pre > 0 ? static_cast<double>(s.n_t_post) / static_cast<double>(s.n_t_pre) : 0.0;
  const auto a = text::decode(original);
  const auto b = text::decode(corrected);
  s.r_l = a.empty() ? 0.0 : static_cast<double>(b.size()) / static_cast<double>(a.size());
  s.lcs_chars = lcs_length(a, b);
  s.jamo_dist = hangul::jamo_distance(original, corrected);
  return s;
}

std::vector<RuleVerdict> evaluate_lang8_rules(std::string_view original,
                                              std::string_view corrected,
                                              const Lang8Config& cfg) {
  const std::string o(text::trim(original));
  const std::string c(text::trim(corrected));
  const auto to = text::split_whitespace(o);
  const auto tc = text::split_whitespace(c);
  const PairStats st = compute_pair_stats(o, c);
  const auto co = text::decode(o);
  const auto cc = text::decode(c);

  auto longest_token = [](const std::vector<std::string>& toks) {
    std::size_t m = 0;
    for (const auto& t : toks) m = std::max(m, text::length(t));
    return m;
  };
  auto script_ok = [](const std::u32string& s) { return std::all_of(s.begin(), s.end(), allowed_script); };

  std::vector<RuleVerdict> v;
  v.push_back({"token-length", std::max(to.size(), tc.size()) * cfg.subword_factor <= cfg.max_tokens});
  v.push_back({"script", script_ok(co) && script_ok(cc)});
  v.push_back({"long-token", std::max(longest_token(to), longest_token(tc)) <= cfg.max_token_chars});
  v.push_back({"noise-word", !contains_noise(to, o, cfg.noise_words) &&
                                 !contains_noise(tc, c, cfg.noise_words)});
  v.push_back({"not-pair", !o.empty() && !c.empty()});
  v.push_back({"too-short", co.size() >= cfg.min_chars && cc.size() >= cfg.min_chars});
  v.push_back({"token-ratio", st.n_t_pre > 0 && st.r_t > cfg.r_t_low && st.r_t < cfg.r_t_high});
  v.push_back({"length-ratio", !co.empty() && st.r_l > cfg.r_l_low && st.r_l < cfg.r_l_high});
  v.push_back({"min-tokens", std::min(st.n_t_pre, st.n_t_post) > cfg.min_tokens_exclusive});
  v.push_back({"lcs", st.lcs_chars > cfg.lcs_exclusive});
  v.push_back({"jamo-distance", st.jamo_dist < cfg.jamo_limit});
  v.push_back({"no-edit", o != c});
  return v;
}

Lang8Result lang8_filter(std::string_view original, std::string_view corrected,
                         const Lang8Config& cfg) {
  Lang8Result r;
  r.stats = compute_pair_stats(text::trim(original), text::trim(corrected));
  for (const auto& v : evaluate_lang8_rules(original, corrected, cfg)) {
    if (!v.passed) {
      r.decision = FilterDecision{false, std::string(v.rule)};
      return r;
    }
  }
  return r;
}

CorpusFilterResult lang8_pipeline(const Pairs& pairs, const Lang8Config& cfg) {
  CorpusFilterResult out;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::string o = lang8_clean(pairs[i].first);
    std::string c = lang8_clean(pairs[i].second);
    Lang8Result r = lang8_filter(o, c, cfg);
    if (r.decision.keep && !seen.emplace(o, c).second) {
      r.decision = FilterDecision{false, std::string(kDuplicateRule)};
    }
    if (r.decision.keep) out.kept.emplace_back(std::move(o), std::move(c));
    ++out.rule_counts[r.decision.rule];
    out.log.push_back(DecisionRow{i + 1, r.decision, r.stats});
  }
  return out;
}

void Gazetteer::add(std::string entry) {
  auto t = text::trim(entry);
  if (!t.empty()) entries_.emplace(t);
}

bool Gazetteer::matches_prefix(std::string_view token) const {
  for (std::size_t len = token.size(); len > 0; --len) {
    if (entries_.count(token.substr(0, len))) return true;
  }
  return false;
}

bool is_numeric_token(std::string_view token) {
  const auto cps = text::decode(token);
  if (cps.empty()) return false;
  if (std::any_of(cps.begin(), cps.end(), text::is_digit)) return true;
  return kNumeralSyllables.find(cps.front()) != std::u32string_view::npos;
}

std::pair<std::vector<std::string>, std::vector<std::string>> changed_tokens(std::string_view a,
                                                                             std::string_view b) {
  std::pair<std::vector<std::string>, std::vector<std::string>> out;
  for (auto& [o, c] : changed_groups(a, b)) {
    out.first.insert(out.first.end(), o.begin(), o.end());
    out.second.insert(out.second.end(), c.begin(), c.end());
  }
  return out;
}

FilterDecision kor_native_filter(std::string_view correct, std::string_view transcribed,
                                 const NativeConfig& cfg) {
  const auto a = text::trim(correct);
  const auto b = text::trim(transcribed);
  auto discard = [](std::string_view rule) { return FilterDecision{false, std::string(rule)}; };

  if (a == b) return discard("identical");
  if (strip_punctuation(a) == strip_punctuation(b)) return discard("punct-only");

  const auto groups = changed_groups(a, b);
  align::Tokens removed, added;
  for (const auto& [o, c] : groups) {
    removed.insert(removed.end(), o.begin(), o.end());
    added.insert(added.end(), c.begin(), c.end());
  }
  if (!groups.empty() && is_numeric_change(removed, added)) return discard("numeric-only");

  if (cfg.gazetteer && !cfg.gazetteer->empty() && !groups.empty() &&
      std::all_of(groups.begin(), groups.end(), [&](const auto& g) {
        auto hit = [&](const std::string& t) { return cfg.gazetteer->matches_prefix(t); };
        return std::any_of(g.first.begin(), g.first.end(), hit) ||
               std::any_of(g.second.begin(), g.second.end(), hit);
      })) {
    return discard("named-entity");
  }

  if (static_cast<double>(text::length(b)) < cfg.min_length_ratio * static_cast<double>(text::length(a))) {
    return discard("too-short");
  }
  return FilterDecision{};
}

CorpusFilterResult native_pipeline(const Pairs& pairs, const NativeConfig& cfg) {
  CorpusFilterResult out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    FilterDecision d = kor_native_filter(a, b, cfg);
    if (d.keep) out.kept.emplace_back(std::string(text::trim(a)), std::string(text::trim(b)));
    ++out.rule_counts[d.rule];
    out.log.push_back(DecisionRow{i + 1, d, compute_pair_stats(text::trim(a), text::trim(b))});
  }
  return out;
}

}  // namespace kagaskit::preprocess
