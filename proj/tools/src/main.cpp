#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <iostream>

#include "commands.hpp"
#include "io.hpp"
#include "kagaskit/external_tagger.hpp"

namespace {

using kagaskit::cli::Resources;

void add_resource_flags(CLI::App& app, Resources& res) {
  app.add_option("--spell-lexicon", res.spell_lexicon, "Spell lexicon (one word per line)");
  app.add_option("--morph-lexicon", res.morph_lexicon, "Morpheme lexicon TSV for the bundled tagger");
  app.add_option("--tagger-cmd", res.tagger_cmd,
                 "External tagger command (one word per line in, one analysis per line out)");
  app.add_option("--gazetteer", res.gazetteer, "Named-entity list for the native filter");
  app.add_option("--noise-words", res.noise_words, "Noise word list for the lang8 filter");
  app.add_option("--workers", res.workers, "Worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = kagaskit::cli;

  CLI::App app{"Korean grammatical error annotation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "kagaskit 0.1.0");

  Resources res;
  add_resource_flags(app, res);

  std::string input, output = "-", stats_path, log_path;

  auto* annotate = app.add_subcommand("annotate", "Sentence pairs (TSV) to M2");
  annotate->fallthrough();
  annotate->add_option("input", input, "original<TAB>corrected per line")->required();
  annotate->add_option("-o,--output", output, "M2 output, - for stdout");
  annotate->add_option("--stats", stats_path, "Write corpus statistics here instead of stderr");

  std::string gold, hyp;
  bool self_score = false;
  auto* m2score = app.add_subcommand("m2score", "Score hypotheses against a gold M2 file");
  m2score->fallthrough();
  m2score->add_option("gold", gold, "Gold M2 file")->required();
  m2score->add_option("hyp", hyp, "System output, one sentence per line");
  m2score->add_flag("--self", self_score, "Score the unchanged sources");

  std::string src, ref;
  std::size_t max_n = 4;
  auto* gleu = app.add_subcommand("gleu", "Corpus GLEU");
  gleu->add_option("source", src)->required();
  gleu->add_option("reference", ref)->required();
  gleu->add_option("hypothesis", hyp)->required();
  gleu->add_option("--max-n", max_n, "Highest n-gram order")->check(CLI::Range(1, 16));

  auto* filter = app.add_subcommand("filter", "Corpus filters");
  filter->require_subcommand(1);
  filter->fallthrough();
  auto* lang8 = filter->add_subcommand("lang8", "Lang-8 style learner pairs");
  auto* native = filter->add_subcommand("native", "Native speaker transcription pairs");
  for (auto* f : {lang8, native}) {
    f->fallthrough();
    f->add_option("input", input)->required();
    f->add_option("-o,--output", output, "Kept pairs, - for stdout");
    f->add_option("--log", log_path, "Per-line decision log (TSV)");
  }

  std::vector<std::string> ingest_inputs;
  auto* ingest = app.add_subcommand("ingest", "Corpus importers");
  ingest->require_subcommand(1);
  auto* nikl = ingest->add_subcommand("nikl", "Learner corpus XML to sentence pairs");
  nikl->add_option("inputs", ingest_inputs, "XML files or directories")->required();
  nikl->add_option("-o,--output", output, "Pairs TSV, - for stdout");

  std::vector<std::string> morphemes;
  auto* merge = app.add_subcommand("merge-morphemes", "Join morphemes with contraction rules");
  merge->add_option("morphemes", morphemes)->required();

  std::string m2_path;
  auto* stats = app.add_subcommand("stats", "Corpus statistics for an M2 file");
  stats->add_option("m2", m2_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitInput;
  }

  try {
    if (*annotate) return cli::run_annotate(res, input, output, stats_path);
    if (*m2score) return cli::run_m2score(res, gold, hyp, self_score);
    if (*gleu) return cli::run_gleu(src, ref, hyp, max_n);
    if (*lang8) return cli::run_filter_lang8(res, input, output, log_path);
    if (*native) return cli::run_filter_native(res, input, output, log_path);
    if (*nikl) return cli::run_ingest_nikl(ingest_inputs, output);
    if (*merge) return cli::run_merge_morphemes(morphemes);
    if (*stats) return cli::run_stats(m2_path);
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInput;
  } catch (const kagaskit::pos::TaggerProcessError& e) {
    std::cerr << "error: tagger: " << e.what() << '\n';
    return cli::kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInput;
  }
  return cli::kExitOk;
}
