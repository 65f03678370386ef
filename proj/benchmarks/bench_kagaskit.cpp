#include <benchmark/benchmark.h>

#include <filesystem>

#include "kagaskit/classifier.hpp"
#include "kagaskit/hangul.hpp"
#include "kagaskit/lexicon_tagger.hpp"
#include "kagaskit/orthography.hpp"
#include "kagaskit/pipeline.hpp"
#include "kagaskit/preprocess.hpp"

using namespace kagaskit;

namespace {

const std::filesystem::path kData = KAGASKIT_BENCH_DATA_DIR;

std::shared_ptr<const pos::MorphLexicon> lexicon() {
  static auto lex = std::make_shared<const pos::MorphLexicon>(
      pos::MorphLexicon::load(kData / "morph_lexicon.tsv"));
  return lex;
}

const classify::SpellLexicon& spell() {
  static const auto s = classify::SpellLexicon::load(kData / "spell_lexicon.txt");
  return s;
}

const m2::SentencePairs kPairs = {
    {"고등학교 때 어긴 경험", "고등학교 때 규칙을 어긴 경험"},
    {"이옷은 더러워요.", "이 옷은 더러워요."},
    {"저는 더 한국어를 배우고 싶어요.", "저는 한국어를 더 배우고 싶어요."},
    {"파티에서 우리는 춤을 쳐요.", "파티에서 우리는 춤을 춰요."},
    {"한국어는 저한테 너무 어려운 언어이었어요.", "한국어는 저한테 너무 어려운 언어였어요."},
    {"어제 친구에게 편지를 쌌어요.", "어제 친구에게 편지를 썼어요."},
    {"하와이에서 사는 우리 사촌", "하와이에 사는 우리 사촌"},
    {"오늘은 머리를 잘라에 갔다.", "오늘은 머리를 자르러 갔다."}};

}  // namespace

static void BM_JamoDistance(benchmark::State& state) {
  const std::string a = "한국어는 저한테 너무 어려운 언어이었어요.";
  const std::string b = "한국어는 저한테 너무 어려운 언어였어요.";
  for (auto _ : state) benchmark::DoNotOptimize(hangul::jamo_distance_thirds(a, b));
}
BENCHMARK(BM_JamoDistance);

static void BM_MergeMorphemes(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthography::merge_morphemes({"들어오", "았", "어요", "."}));
  }
}
BENCHMARK(BM_MergeMorphemes);

static void BM_TagWord(benchmark::State& state) {
  pos::LexiconTagger t(lexicon());
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.analyze("싶어합니다"));
    benchmark::DoNotOptimize(t.analyze("언어였어요"));
  }
}
BENCHMARK(BM_TagWord);

static void BM_AnnotatePair(benchmark::State& state) {
  pos::LexiconTagger t(lexicon());
  classify::Annotator ann(t, spell());
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [o, c] = kPairs[i++ % kPairs.size()];
    benchmark::DoNotOptimize(ann.annotate(o, c));
  }
}
BENCHMARK(BM_AnnotatePair);

static void BM_AnnotateCorpus(benchmark::State& state) {
  m2::SentencePairs corpus;
  for (int i = 0; i < 512; ++i) corpus.push_back(kPairs[static_cast<std::size_t>(i) % kPairs.size()]);
  auto factory = pos::lexicon_tagger_factory(lexicon());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pipeline::annotate_corpus(corpus, factory, spell(), static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus.size()));
}
BENCHMARK(BM_AnnotateCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Lang8Filter(benchmark::State& state) {
  const std::string o = "저는 어제 친구와 함께 학교에 갔어요 .";
  const std::string c = "저는 어제 친구와 함께 학교에 갔습니다 .";
  for (auto _ : state) benchmark::DoNotOptimize(preprocess::lang8_filter(o, c));
}
BENCHMARK(BM_Lang8Filter);
BENCHMARK_MAIN();
