#include "kagaskit/ingest.hpp"

#include <algorithm>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "kagaskit/orthography.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::ingest {

namespace {

using boost::property_tree::ptree;

constexpr std::string_view kRoot = "kagaskit-root";
constexpr std::string_view kAttr = "<xmlattr>";

bool iequals(std::string_view a, std::string_view b) {
  return text::to_lower_ascii(std::string(a)) == text::to_lower_ascii(std::string(b));
}

// Drops the XML declaration and DOCTYPE so several documents can share one
// synthetic root.
std::string strip_prolog(std::string_view xml) {
  std::string out(xml);
  for (const char* open : {"<?xml", "<!DOCTYPE"}) {
    for (auto pos = out.find(open); pos != std::string::npos; pos = out.find(open)) {
      auto end = out.find('>', pos);
      if (end == std::string::npos) throw XmlError(std::string("unterminated ") + open);
      out.erase(pos, end - pos + 1);
    }
  }
  if (out.size() >= 3 && out.compare(0, 3, "\xEF\xBB\xBF") == 0) out.erase(0, 3);
  return out;
}

std::string node_text(const ptree& node) { return std::string(text::trim(node.data())); }

std::optional<std::string> attr(const ptree& node, const char* name) {
  if (auto a = node.get_child_optional(std::string(kAttr) + "." + name)) return node_text(*a);
  return std::nullopt;
}

bool is_element(const std::string& key) { return !key.empty() && key[0] != '<'; }

bool has_spoken_flag(const ptree& node) {
  for (const auto& [key, child] : node) {
    if (key == kAttr) {
      for (const auto& [an, av] : child) {
        if (iequals(an, "spoken") || iequals(text::trim(av.data()), "spoken")) return true;
      }
    } else if (is_element(key)) {
      if (iequals(key, "spoken") || has_spoken_flag(child)) return true;
    }
  }
  return false;
}

MorphAnnotation parse_morph(const ptree& node) {
  MorphAnnotation m;
  if (auto s = attr(node, "subsequence")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(*s, &used);
      if (used == s->size()) m.subsequence = v;
    } catch (const std::exception&) {
    }
  }
  if (auto ws = attr(node, "wordStart")) m.word_start = iequals(*ws, "Start");
  for (const auto& [key, child] : node) {
    if (key == "Proofread" || key == "Preserved") {
      ++m.text_elements;
      m.kind = key == "Proofread" ? MorphAnnotation::Kind::kProofread
                                  : MorphAnnotation::Kind::kPreserved;
      m.text = node_text(child);
      m.pos = attr(child, "pos");
    } else if (key == "ErrorArea") {
      m.error_area = attr(child, "type");
    } else if (key == "ErrorPattern") {
      m.error_pattern = attr(child, "type");
    }
  }
  return m;
}

WordAnnotation parse_word(const ptree& node) {
  WordAnnotation w;
  for (const auto& [key, child] : node) {
    if (key == "w") {
      w.original = node_text(child);
    } else if (key == "morph") {
      w.morphs.push_back(parse_morph(child));
    }
  }
  return w;
}

struct Collected {
  std::vector<std::string> sentences;
  std::vector<WordAnnotation> words;
};

void collect(const ptree& node, Collected& out) {
  for (const auto& [key, child] : node) {
    if (!is_element(key)) continue;
    if (key == "s") {
      out.sentences.push_back(text::join(text::split_whitespace(child.data()), " "));
    } else if (key == "word") {
      out.words.push_back(parse_word(child));
    } else {
      collect(child, out);
    }
  }
}

LearnerDocument build_document(const ptree& node, std::vector<std::string>& warnings,
                               std::size_t doc_index) {
  Collected c;
  collect(node, c);
  LearnerDocument doc;
  doc.spoken = has_spoken_flag(node);
  if (c.sentences.empty()) {
    warnings.push_back("document " + std::to_string(doc_index) + ": no <s> element, skipped");
    return doc;
  }
  for (auto& s : c.sentences) doc.sentences.push_back(LearnerSentence{std::move(s), {}});

  // Words are matched to sentence tokens in reading order.
  std::size_t si = 0, ti = 0;
  for (auto& w : c.words) {
    bool found = false;
    for (std::size_t k = si; k < doc.sentences.size() && !found; ++k) {
      const auto toks = text::split_whitespace(doc.sentences[k].source);
      for (std::size_t t = (k == si ? ti : 0); t < toks.size(); ++t) {
        if (toks[t] == w.original) {
          w.token_index = t;
          si = k;
          ti = t + 1;
          found = true;
          break;
        }
      }
    }
    doc.sentences[si].words.push_back(std::move(w));
  }
  return doc;
}

bool is_control_marker(const MorphAnnotation& m) {
  return m.kind == MorphAnnotation::Kind::kProofread && iequals(m.text, "DELETE");
}

bool is_consistent(const WordAnnotation& w) {
  std::vector<int> seq;
  for (const auto& m : w.morphs) {
    if (m.text_elements != 1) return false;
    seq.push_back(m.subsequence);
  }
  std::sort(seq.begin(), seq.end());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool is_empty_edit(const WordAnnotation& w) {
  return w.morphs.empty() || std::any_of(w.morphs.begin(), w.morphs.end(),
                                         [](const auto& m) { return m.text.empty(); });
}

}  // namespace

ParseResult parse_learner_xml(std::string_view xml) {
  const std::string wrapped =
      "<" + std::string(kRoot) + ">" + strip_prolog(xml) + "</" + std::string(kRoot) + ">";
  std::istringstream in(wrapped);
  ptree tree;
  try {
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw XmlError(std::string("malformed XML: ") + e.message() + " (line " +
                   std::to_string(e.line()) + ")");
  }
  const ptree& root = tree.get_child(std::string(kRoot));

  ParseResult result;
  std::vector<const ptree*> docs;
  for (const auto& [key, child] : root) {
    if (key == "document" || key == "text" || key == "doc") docs.push_back(&child);
  }
  if (docs.empty()) docs.push_back(&root);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    result.documents.push_back(build_document(*docs[i], result.warnings, i + 1));
  }
  return result;
}

std::string reconstruct_word(const WordAnnotation& word) {
  std::vector<const MorphAnnotation*> morphs;
  for (const auto& m : word.morphs) morphs.push_back(&m);
  std::stable_sort(morphs.begin(), morphs.end(),
                   [](const auto* a, const auto* b) { return a->subsequence < b->subsequence; });
  if (std::all_of(morphs.begin(), morphs.end(), [](const auto* m) {
        return m->kind == MorphAnnotation::Kind::kPreserved;
      })) {
    return word.original;
  }
  std::vector<std::vector<std::string>> groups;
  for (const auto* m : morphs) {
    if (groups.empty() || m->word_start) groups.emplace_back();
    groups.back().push_back(m->text);
  }
  std::vector<std::string> words;
  for (const auto& g : groups) words.push_back(orthography::merge_morphemes(g));
  return text::join(words, " ");
}

Reconstruction reconstruct_pair(const LearnerSentence& sentence, bool spoken) {
  auto discard = [](std::string_view reason) { return Reconstruction{std::nullopt, std::string(reason)}; };
  const auto& words = sentence.words;
  auto any = [&](auto pred) { return std::any_of(words.begin(), words.end(), pred); };

  if (spoken) return discard("spoken");
  if (any([](const WordAnnotation& w) {
        return std::any_of(w.morphs.begin(), w.morphs.end(), is_control_marker);
      })) {
    return discard("control-marker");
  }
  if (any([](const WordAnnotation& w) { return !is_consistent(w); })) return discard("inconsistent");
  if (any(is_empty_edit)) return discard("empty-edit");
  if (any([](const WordAnnotation& w) { return !w.token_index.has_value(); })) {
    return discard("word-not-found");
  }

  auto tokens = text::split_whitespace(sentence.source);
  auto corrected = tokens;
  for (const auto& w : words) corrected[*w.token_index] = reconstruct_word(w);
  std::string original = text::join(tokens, " ");
  std::string fixed = text::join(corrected, " ");
  if (original == fixed) return discard("no-edit");
  return Reconstruction{std::make_pair(std::move(original), std::move(fixed)), ""};
}

IngestReport ingest_learner_xml(std::string_view xml) {
  IngestReport report;
  ParseResult parsed = parse_learner_xml(xml);
  report.warnings = std::move(parsed.warnings);
  for (const auto& doc : parsed.documents) {
    for (const auto& s : doc.sentences) {
      Reconstruction r = reconstruct_pair(s, doc.spoken);
      if (r.pair) {
        report.pairs.push_back(std::move(*r.pair));
      } else {
        ++report.discards[r.discard_reason];
      }
    }
  }
  return report;
}

void merge_into(IngestReport& total, IngestReport&& part) {
  for (auto& p : part.pairs) total.pairs.push_back(std::move(p));
  for (const auto& [k, v] : part.discards) total.discards[k] += v;
  for (auto& w : part.warnings) total.warnings.push_back(std::move(w));
}

}  // namespace kagaskit::ingest
