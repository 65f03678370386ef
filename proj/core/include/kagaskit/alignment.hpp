#pragma once

// Token-level Damerau-Levenshtein alignment with linguistic substitution
// costs, and edit extraction with word-spacing / word-order merging.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kagaskit/error_type.hpp"
#include "kagaskit/pos.hpp"

namespace kagaskit::align {

using Tokens = std::vector<std::string>;

Tokens tokenize(std::string_view sentence);

enum class OpKind { kMatch, kSubstitute, kInsert, kDelete, kTranspose };

std::string_view op_name(OpKind k);

// Half-open spans over the original (o) and corrected (c) token lists.
struct AlignOp {
  OpKind kind = OpKind::kMatch;
  std::size_t o_start = 0, o_end = 0;
  std::size_t c_start = 0, c_end = 0;
  friend bool operator==(const AlignOp&, const AlignOp&) = default;
};

struct Alignment {
  std::vector<AlignOp> ops;
  double cost = 0.0;
};

using SubstitutionCost = std::function<double(const std::string&, const std::string&)>;

inline constexpr std::size_t kMaxTransposition = 3;
inline constexpr double kCostEpsilon = 1e-9;

// Minimal-cost alignment. Insert/delete cost 1, a transposed block of k
// tokens costs k - 1, substitutions cost `sub` (equal surfaces always match
// at 0). Ties prefer match, substitute, delete, insert, transpose.
Alignment align(const Tokens& orig, const Tokens& corr, const SubstitutionCost& sub);

double alignment_cost(const std::vector<AlignOp>& ops, const Tokens& orig, const Tokens& corr,
                      const SubstitutionCost& sub);

struct CostComponents {
  double pos = 0.0;
  double lemma = 0.0;
  double jamo = 0.0;
  double total() const { return pos + lemma + jamo; }
};

class CostModel {
 public:
  explicit CostModel(pos::CachedTagger& tagger) : tagger_(tagger) {}

  CostComponents components(std::string_view a, std::string_view b);
  double substitution_cost(std::string_view a, std::string_view b);
  SubstitutionCost as_function();

 private:
  pos::CachedTagger& tagger_;
};

struct Edit {
  std::size_t o_start = 0, o_end = 0;
  std::size_t c_start = 0, c_end = 0;
  Tokens o_toks;
  Tokens c_toks;
  std::optional<ErrorType> type;

  bool is_insertion() const { return o_start == o_end; }
  bool is_deletion() const { return c_start == c_end; }
  friend bool operator==(const Edit&, const Edit&) = default;
};

bool is_word_spacing(const Tokens& o, const Tokens& c);
bool is_word_order(const Tokens& o, const Tokens& c);

// All-split edits, then adjacent runs merged left to right into the smallest
// window that forms a WS or WO edit. Transposition blocks are WO on their own.
std::vector<Edit> extract_edits(const std::vector<AlignOp>& ops, const Tokens& orig,
                                const Tokens& corr);

// Replaces each edit's original span with its corrected tokens.
Tokens apply_edits(const Tokens& orig, const std::vector<Edit>& edits);

}  // namespace kagaskit::align
