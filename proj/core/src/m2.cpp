#include "kagaskit/m2.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>

#include "kagaskit/preprocess.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::m2 {

namespace {

std::string join(const align::Tokens& toks) { return text::join(toks, " "); }

std::vector<std::string_view> split_fields(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + sep.size();
  }
  return out;
}

bool parse_long(std::string_view s, long& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == s.size()) return false;
  long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

Annotation parse_a_line(std::string_view line, std::size_t lineno, std::size_t source_len) {
  auto fields = split_fields(line.substr(2), "|||");
  if (fields.size() != 6) throw ParseError(lineno, "expected 6 '|||'-separated fields");
  auto span = text::split_whitespace(fields[0]);
  Annotation a;
  long annot = 0;
  if (span.size() != 2 || !parse_long(span[0], a.start) || !parse_long(span[1], a.end)) {
    throw ParseError(lineno, "malformed span");
  }
  if (!parse_long(text::trim(fields[5]), annot)) throw ParseError(lineno, "malformed annotator id");
  a.annotator = static_cast<int>(annot);
  a.type = std::string(fields[1]);
  a.correction = std::string(fields[2]);
  if (a.start == -1 && a.end == -1) {
    if (a.type != kNoopType) throw ParseError(lineno, "-1 -1 span is reserved for noop");
    return a;
  }
  if (a.start < 0 || a.start > a.end || static_cast<std::size_t>(a.end) > source_len) {
    throw ParseError(lineno, "span outside the source sentence");
  }
  if (a.correction == kNone) a.correction.clear();
  return a;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<int> Document::annotators() const {
  std::set<int> ids;
  for (const auto& a : annotations) ids.insert(a.annotator);
  return {ids.begin(), ids.end()};
}

std::vector<Annotation> Document::edits_of(int annotator) const {
  std::vector<Annotation> out;
  for (const auto& a : annotations) {
    if (a.annotator == annotator && !a.is_noop()) out.push_back(a);
  }
  std::stable_sort(out.begin(), out.end(), [](const Annotation& x, const Annotation& y) {
    return std::tie(x.start, x.end) < std::tie(y.start, y.end);
  });
  return out;
}

Annotation noop_annotation(int annotator) {
  return Annotation{-1, -1, std::string(kNoopType), std::string(kNone), annotator};
}

Document make_document(const align::Tokens& source, const std::vector<align::Edit>& edits,
                       int annotator) {
  Document doc;
  doc.source = source;
  for (const auto& e : edits) {
    doc.annotations.push_back(Annotation{static_cast<long>(e.o_start), static_cast<long>(e.o_end),
                                         std::string(error_type_name(e.type.value_or(ErrorType::kUnk))),
                                         join(e.c_toks), annotator});
  }
  if (doc.annotations.empty()) doc.annotations.push_back(noop_annotation(annotator));
  return doc;
}

std::string format_document(const Document& doc) {
  std::string out = "S " + join(doc.source) + "\n";
  for (const auto& a : doc.annotations) {
    out += "A " + std::to_string(a.start) + " " + std::to_string(a.end) + "|||" + a.type + "|||" +
           (a.is_noop() ? std::string(kNone) : a.correction) + "|||REQUIRED|||-NONE-|||" +
           std::to_string(a.annotator) + "\n";
  }
  out += "\n";
  return out;
}

std::string format_documents(const std::vector<Document>& docs) {
  std::string out;
  for (const auto& d : docs) out += format_document(d);
  return out;
}

std::vector<Document> parse_m2(std::string_view text) {
  std::vector<Document> docs;
  bool open = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty()) {
      open = false;
      continue;
    }
    if (line == "S" || line.starts_with("S ")) {
      Document d;
      d.source = text::split_whitespace(line.substr(1));
      docs.push_back(std::move(d));
      open = true;
    } else if (line.starts_with("A ")) {
      if (!open) throw ParseError(lineno, "A line outside a sentence block");
      docs.back().annotations.push_back(parse_a_line(line, lineno, docs.back().source.size()));
    } else {
      throw ParseError(lineno, "expected an S or A line");
    }
  }
  return docs;
}

std::string emit_m2(classify::Annotator& annotator, const SentencePairs& pairs) {
  std::string out;
  for (const auto& [o, c] : pairs) {
    auto src = align::tokenize(preprocess::normalize_punct_spacing(o));
    auto cor = align::tokenize(preprocess::normalize_punct_spacing(c));
    out += format_document(make_document(src, annotator.annotate(src, cor)));
  }
  return out;
}

align::Tokens apply_annotations(const Document& doc, int annotator) {
  align::Tokens out;
  std::size_t pos = 0;
  for (const auto& a : doc.edits_of(annotator)) {
    const auto s = static_cast<std::size_t>(a.start);
    out.insert(out.end(), doc.source.begin() + static_cast<std::ptrdiff_t>(pos),
               doc.source.begin() + static_cast<std::ptrdiff_t>(s));
    auto toks = text::split_whitespace(a.correction);
    out.insert(out.end(), toks.begin(), toks.end());
    pos = static_cast<std::size_t>(a.end);
  }
  out.insert(out.end(), doc.source.begin() + static_cast<std::ptrdiff_t>(pos), doc.source.end());
  return out;
}

double f_beta(double p, double r, double beta) {
  const double b2 = beta * beta;
  const double denom = b2 * p + r;
  return denom > 0.0 ? (1.0 + b2) * p * r / denom : 0.0;
}

Scores make_scores(const Counts& c) {
  Scores s;
  s.counts = c;
  const std::size_t proposed = c.tp + c.fp;
  const std::size_t gold = c.tp + c.fn;
  s.precision = proposed == 0 ? 1.0 : static_cast<double>(c.tp) / static_cast<double>(proposed);
  s.recall = gold == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(gold);
  s.f_half = f_beta(s.precision, s.recall);
  return s;
}

std::vector<SystemEdit> system_edits(const std::vector<align::Edit>& edits) {
  std::vector<SystemEdit> out;
  for (const auto& e : edits) {
    out.push_back(SystemEdit{static_cast<long>(e.o_start), static_cast<long>(e.o_end),
                             join(e.c_toks),
                             std::string(error_type_name(e.type.value_or(ErrorType::kUnk)))});
  }
  return out;
}

namespace {

struct SentenceResult {
  Counts counts;
  std::map<std::string, Counts> per_type;
};

SentenceResult match_sentence(const std::vector<SystemEdit>& sys,
                              const std::vector<Annotation>& gold) {
  SentenceResult r;
  std::vector<bool> used(gold.size(), false);
  for (const auto& s : sys) {
    bool hit = false;
    for (std::size_t g = 0; g < gold.size(); ++g) {
      if (!used[g] && gold[g].start == s.start && gold[g].end == s.end &&
          gold[g].correction == s.correction) {
        used[g] = true;
        hit = true;
        ++r.counts.tp;
        ++r.per_type[gold[g].type].tp;
        break;
      }
    }
    if (!hit) {
      ++r.counts.fp;
      ++r.per_type[s.type].fp;
    }
  }
  for (std::size_t g = 0; g < gold.size(); ++g) {
    if (!used[g]) {
      ++r.counts.fn;
      ++r.per_type[gold[g].type].fn;
    }
  }
  return r;
}

}  // namespace

ScoreReport score_edits(const std::vector<std::vector<SystemEdit>>& system,
                        const std::vector<Document>& gold) {
  if (system.size() != gold.size()) {
    throw InputError("hypothesis count " + std::to_string(system.size()) +
                     " does not match gold sentence count " + std::to_string(gold.size()));
  }
  Counts total;
  std::map<std::string, Counts> per_type;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto ids = gold[i].annotators();
    if (ids.empty()) ids.push_back(0);
    SentenceResult best;
    bool have = false;
    double best_f = -1.0;
    for (int id : ids) {
      SentenceResult r = match_sentence(system[i], gold[i].edits_of(id));
      const double f = make_scores(r.counts).f_half;
      const bool better =
          !have || f > best_f ||
          (f == best_f && std::make_tuple(r.counts.tp, best.counts.fp, best.counts.fn) >
                              std::make_tuple(best.counts.tp, r.counts.fp, r.counts.fn));
      if (better) {
        best = std::move(r);
        best_f = f;
        have = true;
      }
    }
    total += best.counts;
    for (const auto& [type, c] : best.per_type) per_type[type] += c;
  }
  ScoreReport report;
  report.overall = make_scores(total);
  for (const auto& [type, c] : per_type) report.per_type[type] = make_scores(c);
  return report;
}

ScoreReport score(classify::Annotator& annotator, const std::vector<std::string>& hypotheses,
                  const std::vector<Document>& gold) {
  if (hypotheses.size() != gold.size()) {
    throw InputError("hypothesis count " + std::to_string(hypotheses.size()) +
                     " does not match gold sentence count " + std::to_string(gold.size()));
  }
  std::vector<std::vector<SystemEdit>> sys;
  sys.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto hyp = align::tokenize(preprocess::normalize_punct_spacing(hypotheses[i]));
    sys.push_back(system_edits(annotator.annotate(gold[i].source, hyp)));
  }
  return score_edits(sys, gold);
}

std::string percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value * 100.0);
  return buf;
}

std::string format_report(const ScoreReport& report) {
  std::ostringstream out;
  out << "type\ttp\tfp\tfn\tP\tR\tF0.5\n";
  auto row = [&](std::string_view name, const Scores& s) {
    out << name << '\t' << s.counts.tp << '\t' << s.counts.fp << '\t' << s.counts.fn << '\t'
        << percent(s.precision) << '\t' << percent(s.recall) << '\t' << percent(s.f_half) << '\n';
  };
  std::set<std::string> done;
  for (ErrorType t : kAllErrorTypes) {
    const std::string name(error_type_name(t));
    if (auto it = report.per_type.find(name); it != report.per_type.end()) {
      row(name, it->second);
      done.insert(name);
    }
  }
  for (const auto& [name, s] : report.per_type) {
    if (!done.count(name)) row(name, s);
  }
  row("overall", report.overall);
  return out.str();
}

}  // namespace kagaskit::m2
