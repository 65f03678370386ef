#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kagaskit::cli {

struct Resources {
  std::string spell_lexicon;
  std::string morph_lexicon;
  std::string tagger_cmd;
  std::string gazetteer;
  std::string noise_words;
  std::size_t workers = 1;
};

int run_annotate(const Resources& res, const std::string& input, const std::string& output,
                 const std::string& stats_path);
int run_m2score(const Resources& res, const std::string& gold, const std::string& hyp,
                bool self_score);
int run_gleu(const std::string& src, const std::string& ref, const std::string& hyp,
             std::size_t max_n);
int run_filter_lang8(const Resources& res, const std::string& input, const std::string& output,
                     const std::string& log_path);
int run_filter_native(const Resources& res, const std::string& input, const std::string& output,
                      const std::string& log_path);
int run_ingest_nikl(const std::vector<std::string>& inputs, const std::string& output);
int run_merge_morphemes(const std::vector<std::string>& morphemes);
int run_stats(const std::string& m2_path);

}  // namespace kagaskit::cli
