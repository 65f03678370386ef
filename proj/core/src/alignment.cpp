#include "kagaskit/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kagaskit/hangul.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::align {

Tokens tokenize(std::string_view sentence) { return text::split_whitespace(sentence); }

std::string_view op_name(OpKind k) {
  switch (k) {
    case OpKind::kMatch: return "match";
    case OpKind::kSubstitute: return "substitute";
    case OpKind::kInsert: return "insert";
    case OpKind::kDelete: return "delete";
    case OpKind::kTranspose: return "transpose";
  }
  return "?";
}

namespace {

bool same_multiset(const Tokens& a, std::size_t a0, const Tokens& b, std::size_t b0,
                   std::size_t k) {
  std::vector<std::string_view> x(a.begin() + static_cast<std::ptrdiff_t>(a0),
                                  a.begin() + static_cast<std::ptrdiff_t>(a0 + k));
  std::vector<std::string_view> y(b.begin() + static_cast<std::ptrdiff_t>(b0),
                                  b.begin() + static_cast<std::ptrdiff_t>(b0 + k));
  if (x == y) return false;  // plain matches, not a reordering
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

struct Cell {
  double cost = std::numeric_limits<double>::infinity();
  OpKind op = OpKind::kMatch;
  std::size_t span = 1;
};

}  // namespace

Alignment align(const Tokens& orig, const Tokens& corr, const SubstitutionCost& sub) {
  const std::size_t n = orig.size();
  const std::size_t m = corr.size();
  std::vector<std::vector<Cell>> d(n + 1, std::vector<Cell>(m + 1));
  d[0][0].cost = 0.0;

  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      Cell best;
      auto offer = [&](double cost, OpKind op, std::size_t span) {
        if (cost < best.cost - kCostEpsilon) best = Cell{cost, op, span};
      };
      // Offered in preference order; a later candidate must be strictly cheaper.
      if (i > 0 && j > 0) {
        if (orig[i - 1] == corr[j - 1]) {
          offer(d[i - 1][j - 1].cost, OpKind::kMatch, 1);
        } else {
          offer(d[i - 1][j - 1].cost + sub(orig[i - 1], corr[j - 1]), OpKind::kSubstitute, 1);
        }
      }
      if (i > 0) offer(d[i - 1][j].cost + 1.0, OpKind::kDelete, 1);
      if (j > 0) offer(d[i][j - 1].cost + 1.0, OpKind::kInsert, 1);
      for (std::size_t k = 2; k <= kMaxTransposition && k <= i && k <= j; ++k) {
        if (same_multiset(orig, i - k, corr, j - k, k)) {
          offer(d[i - k][j - k].cost + static_cast<double>(k - 1), OpKind::kTranspose, k);
        }
      }
      d[i][j] = best;
    }
  }

  Alignment out;
  out.cost = d[n][m].cost;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const Cell& c = d[i][j];
    AlignOp op;
    op.kind = c.op;
    switch (c.op) {
      case OpKind::kMatch:
      case OpKind::kSubstitute:
        op = {c.op, i - 1, i, j - 1, j};
        --i;
        --j;
        break;
      case OpKind::kDelete:
        op = {c.op, i - 1, i, j, j};
        --i;
        break;
      case OpKind::kInsert:
        op = {c.op, i, i, j - 1, j};
        --j;
        break;
      case OpKind::kTranspose:
        op = {c.op, i - c.span, i, j - c.span, j};
        i -= c.span;
        j -= c.span;
        break;
    }
    out.ops.push_back(op);
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

double alignment_cost(const std::vector<AlignOp>& ops, const Tokens& orig, const Tokens& corr,
                      const SubstitutionCost& sub) {
  double total = 0.0;
  for (const auto& op : ops) {
    switch (op.kind) {
      case OpKind::kMatch: break;
      case OpKind::kSubstitute: total += sub(orig[op.o_start], corr[op.c_start]); break;
      case OpKind::kInsert:
      case OpKind::kDelete: total += 1.0; break;
      case OpKind::kTranspose: total += static_cast<double>(op.o_end - op.o_start - 1); break;
    }
  }
  return total;
}

CostComponents CostModel::components(std::string_view a, std::string_view b) {
  CostComponents c;
  if (a == b) return c;
  const auto& ma = tagger_.analysis(a);
  const auto& mb = tagger_.analysis(b);

  const auto ga = pos::groups_of(ma);
  const auto gb = pos::groups_of(mb);
  if (ga == gb) {
    c.pos = 0.0;
  } else {
    const bool overlap = std::any_of(ga.begin(), ga.end(), [&](auto g) { return gb.count(g) > 0; });
    c.pos = overlap ? 0.25 : 0.5;
  }

  auto lemmas = [](const pos::Analysis& m, bool content_only) {
    std::vector<std::string_view> out;
    for (const auto& x : m) {
      if (!content_only || pos::is_content_tag(x.tag)) out.push_back(x.lemma);
    }
    return out;
  };
  auto la = lemmas(ma, true);
  auto lb = lemmas(mb, true);
  if (la.empty() && lb.empty()) {
    la = lemmas(ma, false);
    lb = lemmas(mb, false);
  }
  const bool shared = std::any_of(la.begin(), la.end(), [&](std::string_view x) {
    return std::find(lb.begin(), lb.end(), x) != lb.end();
  });
  c.lemma = shared ? 0.0 : 0.5;

  const double len = static_cast<double>(std::max(text::length(a), text::length(b)));
  c.jamo = len > 0 ? std::clamp(hangul::jamo_distance(a, b) / len, 0.0, 1.0) : 0.0;
  return c;
}

double CostModel::substitution_cost(std::string_view a, std::string_view b) {
  return components(a, b).total();
}

SubstitutionCost CostModel::as_function() {
  return [this](const std::string& a, const std::string& b) { return substitution_cost(a, b); };
}

bool is_word_spacing(const Tokens& o, const Tokens& c) {
  if (o.empty() || c.empty() || o == c) return false;
  std::string a, b;
  for (const auto& t : o) a += t;
  for (const auto& t : c) b += t;
  return a == b;
}

bool is_word_order(const Tokens& o, const Tokens& c) {
  if (o.size() < 2 || c.size() < 2 || o == c) return false;
  Tokens x = o, y = c;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace {

Edit make_edit(const AlignOp& op, const Tokens& orig, const Tokens& corr) {
  Edit e;
  e.o_start = op.o_start;
  e.o_end = op.o_end;
  e.c_start = op.c_start;
  e.c_end = op.c_end;
  e.o_toks.assign(orig.begin() + static_cast<std::ptrdiff_t>(op.o_start),
                  orig.begin() + static_cast<std::ptrdiff_t>(op.o_end));
  e.c_toks.assign(corr.begin() + static_cast<std::ptrdiff_t>(op.c_start),
                  corr.begin() + static_cast<std::ptrdiff_t>(op.c_end));
  if (op.kind == OpKind::kTranspose) e.type = ErrorType::kWo;
  return e;
}

bool adjacent(const Edit& a, const Edit& b) { return a.o_end == b.o_start && a.c_end == b.c_start; }

Edit combine(const std::vector<Edit>& edits, std::size_t first, std::size_t last,
             const Tokens& orig, const Tokens& corr) {
  AlignOp span{OpKind::kSubstitute, edits[first].o_start, edits[last].o_end, edits[first].c_start,
               edits[last].c_end};
  return make_edit(span, orig, corr);
}

}  // namespace

std::vector<Edit> extract_edits(const std::vector<AlignOp>& ops, const Tokens& orig,
                                const Tokens& corr) {
  std::vector<Edit> split;
  for (const auto& op : ops) {
    if (op.kind != OpKind::kMatch) split.push_back(make_edit(op, orig, corr));
  }

  std::vector<Edit> out;
  std::size_t a = 0;
  while (a < split.size()) {
    std::size_t run_end = a + 1;
    while (run_end < split.size() && adjacent(split[run_end - 1], split[run_end])) ++run_end;
    bool merged = false;
    for (std::size_t last = a + 1; last < run_end; ++last) {
      Edit cand = combine(split, a, last, orig, corr);
      if (is_word_spacing(cand.o_toks, cand.c_toks)) {
        cand.type = ErrorType::kWs;
      } else if (is_word_order(cand.o_toks, cand.c_toks)) {
        cand.type = ErrorType::kWo;
      } else {
        continue;
      }
      out.push_back(std::move(cand));
      a = last + 1;
      merged = true;
      break;
    }
    if (!merged) out.push_back(std::move(split[a++]));
  }
  return out;
}

Tokens apply_edits(const Tokens& orig, const std::vector<Edit>& edits) {
  Tokens out;
  std::size_t pos = 0;
  for (const auto& e : edits) {
    out.insert(out.end(), orig.begin() + static_cast<std::ptrdiff_t>(pos),
               orig.begin() + static_cast<std::ptrdiff_t>(e.o_start));
    out.insert(out.end(), e.c_toks.begin(), e.c_toks.end());
    pos = e.o_end;
  }
  out.insert(out.end(), orig.begin() + static_cast<std::ptrdiff_t>(pos), orig.end());
  return out;
}

}  // namespace kagaskit::align
