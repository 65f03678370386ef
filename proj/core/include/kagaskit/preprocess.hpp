#pragma once

// Text normalization and the Lang8 / Kor-Native corpus filters.

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kagaskit::preprocess {

// Puts single spaces around every punctuation character, collapses
// whitespace runs and trims. "갔어." -> "갔어 ."
std::string normalize_punct_spacing(std::string_view text);

// Collapses runs of space ! ; ? ~ > ^ + ㅠ ㅜ ㅋ to one occurrence.
std::string squash_repeats(std::string_view text);

// Removes (...), {...}, <...> and [...] together with their brackets.
// Unmatched brackets are left alone.
std::string strip_brackets(std::string_view text);

// strip_brackets, squash_repeats, normalize_punct_spacing.
std::string lang8_clean(std::string_view text);

std::size_t lcs_length(std::u32string_view a, std::u32string_view b);

struct PairStats {
  std::size_t n_t_pre = 0;
  std::size_t n_t_post = 0;
  double r_t = 0.0;  // n_t_post / n_t_pre
  double r_l = 0.0;  // character length post / pre
  std::size_t lcs_chars = 0;
  double jamo_dist = 0.0;
};

PairStats compute_pair_stats(std::string_view original, std::string_view corrected);

inline constexpr std::string_view kPass = "pass";

struct FilterDecision {
  bool keep = true;
  std::string rule{kPass};
};

// Lang8 rule identifiers in evaluation order.
inline constexpr std::array<std::string_view, 12> kLang8Rules = {
    "token-length", "script",    "long-token",   "noise-word", "not-pair", "too-short",
    "token-ratio",  "length-ratio", "min-tokens", "lcs",        "jamo-distance", "no-edit"};

inline constexpr std::string_view kDuplicateRule = "duplicate";

struct Lang8Config {
  std::vector<std::string> noise_words{"good", "or", "/"};
  std::size_t max_tokens = 200;         // compared against whitespace tokens x 2
  std::size_t subword_factor = 2;
  std::size_t max_token_chars = 20;
  std::size_t min_chars = 2;
  double r_t_low = 0.25, r_t_high = 4.0;  // open interval
  double r_l_low = 0.5, r_l_high = 1.25;  // open interval
  std::size_t min_tokens_exclusive = 5;   // min(n_pre, n_post) must exceed this
  std::size_t lcs_exclusive = 10;         // LCS must exceed this
  double jamo_limit = 10.0;               // jamo distance must stay below this
};

struct RuleVerdict {
  std::string_view rule;
  bool passed = true;
};

// Every rule's verdict, in order, regardless of earlier failures.
std::vector<RuleVerdict> evaluate_lang8_rules(std::string_view original,
                                              std::string_view corrected,
                                              const Lang8Config& config = {});

struct Lang8Result {
  FilterDecision decision;
  PairStats stats;
};

// Expects a cleaned pair (see lang8_clean). Reports the first failing rule.
Lang8Result lang8_filter(std::string_view original, std::string_view corrected,
                         const Lang8Config& config = {});

struct DecisionRow {
  std::size_t line = 0;  // 1-based input line
  FilterDecision decision;
  PairStats stats;
};

struct CorpusFilterResult {
  std::vector<std::pair<std::string, std::string>> kept;
  std::vector<DecisionRow> log;
  std::map<std::string, std::size_t> rule_counts;
};

using Pairs = std::vector<std::pair<std::string, std::string>>;

// Clean, filter, then drop repeated (original, corrected) pairs keeping the
// first occurrence.
CorpusFilterResult lang8_pipeline(const Pairs& pairs, const Lang8Config& config = {});

class Gazetteer {
 public:
  void add(std::string entry);
  bool empty() const { return entries_.empty(); }
  // True when some entry is a prefix of `token`.
  bool matches_prefix(std::string_view token) const;

 private:
  std::set<std::string, std::less<>> entries_;
};

inline constexpr std::array<std::string_view, 5> kNativeRules = {
    "identical", "punct-only", "numeric-only", "named-entity", "too-short"};

struct NativeConfig {
  const Gazetteer* gazetteer = nullptr;  // named-entity check skipped when null or empty
  double min_length_ratio = 0.5;
};

FilterDecision kor_native_filter(std::string_view correct, std::string_view transcribed,
                                 const NativeConfig& config = {});

CorpusFilterResult native_pipeline(const Pairs& pairs, const NativeConfig& config = {});

// Tokens present on either side of a plain token-level diff.
std::pair<std::vector<std::string>, std::vector<std::string>> changed_tokens(
    std::string_view a, std::string_view b);

bool is_numeric_token(std::string_view token);

}  // namespace kagaskit::preprocess
