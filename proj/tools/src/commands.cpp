#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

#include "io.hpp"
#include "kagaskit/classifier.hpp"
#include "kagaskit/external_tagger.hpp"
#include "kagaskit/gleu.hpp"
#include "kagaskit/ingest.hpp"
#include "kagaskit/lexicon_tagger.hpp"
#include "kagaskit/m2.hpp"
#include "kagaskit/orthography.hpp"
#include "kagaskit/pipeline.hpp"
#include "kagaskit/preprocess.hpp"
#include "kagaskit/resources.hpp"
#include "kagaskit/utf8.hpp"

namespace kagaskit::cli {

namespace fs = std::filesystem;

namespace {

fs::path resolve(const std::string& flag, std::string_view bundled) {
  if (!flag.empty()) {
    if (!fs::is_regular_file(flag)) throw InputError("no such file: " + flag);
    return flag;
  }
  if (auto p = resources::data_file(bundled)) return *p;
  throw InputError("bundled " + std::string(bundled) + " not found; set " +
                   std::string(resources::kDataDirEnv));
}

pos::TaggerFactory tagger_factory(const Resources& res) {
  if (!res.tagger_cmd.empty()) return pos::external_tagger_factory(res.tagger_cmd);
  try {
    auto lex = std::make_shared<const pos::MorphLexicon>(
        pos::MorphLexicon::load(resolve(res.morph_lexicon, resources::kMorphLexiconFile)));
    return pos::lexicon_tagger_factory(std::move(lex));
  } catch (const pos::LexiconError& e) {
    throw InputError(e.what());
  }
}

classify::SpellLexicon spell_lexicon(const Resources& res) {
  try {
    return classify::SpellLexicon::load(resolve(res.spell_lexicon, resources::kSpellLexiconFile));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::vector<align::Tokens> tokenized_lines(const std::string& path) {
  std::vector<align::Tokens> out;
  for (const auto& line : read_lines(path)) {
    out.push_back(align::tokenize(preprocess::normalize_punct_spacing(line)));
  }
  return out;
}

std::string decision_log(const preprocess::CorpusFilterResult& r,
                         const std::vector<std::size_t>& line_numbers) {
  std::ostringstream out;
  out << "line\tdecision\trule\tr_t\tr_l\tlcs\tjamo_dist\n";
  for (const auto& row : r.log) {
    const std::size_t line = row.line - 1 < line_numbers.size() ? line_numbers[row.line - 1] : row.line;
    out << line << '\t' << (row.decision.keep ? "keep" : "discard") << '\t' << row.decision.rule
        << '\t' << format_fixed(row.stats.r_t, 4) << '\t' << format_fixed(row.stats.r_l, 4) << '\t'
        << row.stats.lcs_chars << '\t' << format_fixed(row.stats.jamo_dist, 4) << '\n';
  }
  return out.str();
}

std::string pairs_tsv(const m2::SentencePairs& pairs) {
  std::string out;
  for (const auto& [o, c] : pairs) out += o + "\t" + c + "\n";
  return out;
}

void print_summary(const preprocess::CorpusFilterResult& r) {
  std::size_t discarded = 0;
  for (const auto& [rule, n] : r.rule_counts) {
    if (rule != preprocess::kPass) discarded += n;
  }
  std::cerr << "kept " << r.kept.size() << ", discarded " << discarded;
  for (const auto& [rule, n] : r.rule_counts) {
    if (rule != preprocess::kPass) std::cerr << ", " << rule << "=" << n;
  }
  std::cerr << '\n';
}

int finish_filter(const preprocess::CorpusFilterResult& r, const PairFile& in,
                  const std::string& output, const std::string& log_path) {
  write_output(output, pairs_tsv(r.kept));
  if (!log_path.empty()) write_output(log_path, decision_log(r, in.line_numbers));
  print_summary(r);
  return in.warnings ? kExitWarnings : kExitOk;
}

std::vector<fs::path> xml_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::recursive_directory_iterator(in)) {
        if (e.is_regular_file() && e.path().extension() == ".xml") found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(in)) {
      files.emplace_back(in);
    } else {
      throw InputError("no such file or directory: " + in);
    }
  }
  return files;
}

}  // namespace

int run_annotate(const Resources& res, const std::string& input, const std::string& output,
                 const std::string& stats_path) {
  const auto factory = tagger_factory(res);
  const auto spell = spell_lexicon(res);
  const PairFile in = read_pairs(input, false);
  const auto docs = pipeline::annotate_corpus(in.pairs, factory, spell, res.workers);
  write_output(output, m2::format_documents(docs));

  std::string report = pipeline::format_stats(pipeline::corpus_stats(docs));
  report += "warnings\t" + std::to_string(in.warnings) + "\n";
  if (stats_path.empty()) {
    std::cerr << report;
  } else {
    write_output(stats_path, report);
  }
  return in.warnings ? kExitWarnings : kExitOk;
}

int run_m2score(const Resources& res, const std::string& gold_path, const std::string& hyp_path,
                bool self_score) {
  std::vector<m2::Document> gold;
  try {
    gold = m2::parse_m2(read_file(gold_path));
  } catch (const m2::ParseError& e) {
    throw InputError(gold_path + ": " + e.what());
  }
  std::vector<std::string> hyps;
  if (self_score) {
    for (const auto& d : gold) hyps.push_back(text::join(d.source, " "));
  } else {
    if (hyp_path.empty()) throw InputError("m2score needs a hypothesis file or --self");
    hyps = read_lines(hyp_path);
    if (hyps.size() != gold.size()) {
      throw InputError("hypothesis file has " + std::to_string(hyps.size()) +
                       " lines but the gold file has " + std::to_string(gold.size()) +
                       " sentences");
    }
  }
  const auto factory = tagger_factory(res);
  const auto spell = spell_lexicon(res);

  // System edits per sentence, computed on the worker pool.
  const std::size_t workers = std::max<std::size_t>(1, std::min(res.workers, gold.size()));
  std::vector<std::unique_ptr<pos::Tagger>> taggers;
  std::vector<std::unique_ptr<classify::Annotator>> annotators;
  for (std::size_t w = 0; w < workers; ++w) {
    taggers.push_back(factory());
    annotators.push_back(std::make_unique<classify::Annotator>(*taggers.back(), spell));
  }
  std::vector<std::vector<m2::SystemEdit>> sys(gold.size());
  pipeline::parallel_for(gold.size(), workers, [&](std::size_t w, std::size_t i) {
    auto hyp = align::tokenize(preprocess::normalize_punct_spacing(hyps[i]));
    sys[i] = m2::system_edits(annotators[w]->annotate(gold[i].source, hyp));
  });
  std::cout << m2::format_report(m2::score_edits(sys, gold));
  return kExitOk;
}

int run_gleu(const std::string& src, const std::string& ref, const std::string& hyp,
             std::size_t max_n) {
  const auto s = tokenized_lines(src);
  const auto r = tokenized_lines(ref);
  const auto h = tokenized_lines(hyp);
  if (s.size() != h.size() || r.size() != h.size()) {
    throw InputError("source, reference and hypothesis files have different line counts (" +
                     std::to_string(s.size()) + ", " + std::to_string(r.size()) + ", " +
                     std::to_string(h.size()) + ")");
  }
  double score = 0.0;
  try {
    score = m2::gleu(s, r, h, max_n);
  } catch (const m2::InputError& e) {
    throw InputError(e.what());
  }
  std::cout << "GLEU\t" << m2::percent(score) << '\n';
  return kExitOk;
}

int run_filter_lang8(const Resources& res, const std::string& input, const std::string& output,
                     const std::string& log_path) {
  preprocess::Lang8Config cfg;
  cfg.noise_words = resources::read_word_list(resolve(res.noise_words, resources::kNoiseWordsFile));
  const PairFile in = read_pairs(input, true);
  return finish_filter(preprocess::lang8_pipeline(in.pairs, cfg), in, output, log_path);
}

int run_filter_native(const Resources& res, const std::string& input, const std::string& output,
                      const std::string& log_path) {
  preprocess::Gazetteer gazetteer;
  if (!res.gazetteer.empty()) {
    for (auto& e : resources::read_word_list(resolve(res.gazetteer, ""))) gazetteer.add(std::move(e));
  }
  preprocess::NativeConfig cfg;
  cfg.gazetteer = &gazetteer;
  const PairFile in = read_pairs(input, true);
  // Columns are original (transcribed) then corrected (the read-aloud sentence).
  m2::SentencePairs swapped;
  for (const auto& [o, c] : in.pairs) swapped.emplace_back(c, o);
  auto r = preprocess::native_pipeline(swapped, cfg);
  for (auto& [a, b] : r.kept) std::swap(a, b);
  return finish_filter(r, in, output, log_path);
}

int run_ingest_nikl(const std::vector<std::string>& inputs, const std::string& output) {
  ingest::IngestReport total;
  for (const auto& file : xml_inputs(inputs)) {
    try {
      ingest::merge_into(total, ingest::ingest_learner_xml(read_file(file)));
    } catch (const ingest::XmlError& e) {
      throw InputError(file.string() + ": " + e.what());
    }
  }
  write_output(output, pairs_tsv(total.pairs));
  for (const auto& w : total.warnings) std::cerr << "warning: " << w << '\n';
  std::size_t discarded = 0;
  for (const auto& [reason, n] : total.discards) discarded += n;
  std::cerr << "pairs " << total.pairs.size() << ", discarded " << discarded;
  for (const auto& [reason, n] : total.discards) std::cerr << ", " << reason << "=" << n;
  std::cerr << '\n';
  return total.warnings.empty() ? kExitOk : kExitWarnings;
}

int run_merge_morphemes(const std::vector<std::string>& morphemes) {
  try {
    std::cout << orthography::merge_morphemes(morphemes) << '\n';
  } catch (const orthography::EmptyInputError& e) {
    throw InputError(e.what());
  }
  return kExitOk;
}

int run_stats(const std::string& m2_path) {
  std::vector<m2::Document> docs;
  try {
    docs = m2::parse_m2(read_file(m2_path));
  } catch (const m2::ParseError& e) {
    throw InputError(m2_path + ": " + e.what());
  }
  std::cout << pipeline::format_stats(pipeline::corpus_stats(docs));
  return kExitOk;
}

}  // namespace kagaskit::cli
