// Micro-benchmarks for the hot paths: cleaning, stemming, disambiguation,
// spelling correction, vectorization, and one SVM training epoch. Bundled
// data loads once per fixture so timings isolate the operation itself.
#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include <smfp/enrich.hpp>
#include <smfp/features.hpp>
#include <smfp/kb.hpp>
#include <smfp/learn.hpp>
#include <smfp/lesk.hpp>
#include <smfp/normalize.hpp>
#include <smfp/oovfilter.hpp>

namespace {

using namespace smfp;

std::string data_file(const std::string& name) {
  return std::string(SMFP_DATA_DIR) + "/" + name;
}

const KnowledgeBase& bundled_kb() {
  static const KnowledgeBase kb =
      load_knowledge_base({"naijalingo:" + data_file("lexicons/naijalingo.jsonl"),
                           "urban:" + data_file("lexicons/urban.jsonl"),
                           "internetslang:" + data_file("lexicons/internetslang.jsonl")},
                          data_file("emoticons.tsv"));
  return kb;
}

const Wordlist& bundled_wordlist() {
  static const Wordlist words = load_wordlist(data_file("wordlist.txt"));
  return words;
}

const FrequencyTable& bundled_frequencies() {
  static const FrequencyTable freq = load_frequencies(data_file("frequencies.tsv"));
  return freq;
}

void BM_Clean(benchmark::State& state) {
  const Cleaner cleaner(bundled_kb().emoticons());
  const std::string post =
      "@Ugonna soooo happy :) my pale has come back!!! http://t.co/abc #blessed 日本語";
  for (auto _ : state) {
    benchmark::DoNotOptimize(cleaner.clean(post));
  }
}
BENCHMARK(BM_Clean);

void BM_Stem(benchmark::State& state) {
  const std::vector<std::string> words = {"happiness", "working",   "relational",
                                          "conflated", "abilities", "agreed"};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stem(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_Stem);

void BM_Disambiguate(benchmark::State& state) {
  const KnowledgeBase& kb = bundled_kb();
  const LexiconEntry* pale = kb.lookup("pale");
  const std::vector<std::string> post =
      tokenize(clean("Sam, your pale has come back from work", kb.emoticons())).tokens;
  for (auto _ : state) {
    benchmark::DoNotOptimize(disambiguate_term("pale", post, *pale, kb.emoticons()));
  }
}
BENCHMARK(BM_Disambiguate);

void BM_SpellCorrect(benchmark::State& state) {
  const Wordlist& words = bundled_wordlist();
  const FrequencyTable& freq = bundled_frequencies();
  for (auto _ : state) {
    benchmark::DoNotOptimize(spell_correct("wrok", words, freq));
  }
}
BENCHMARK(BM_SpellCorrect);

void BM_Vectorize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::vector<std::string>> docs;
  for (int d = 0; d < 200; ++d) {
    std::vector<std::string> doc;
    for (int t = 0; t < 12; ++t) doc.push_back("tok" + std::to_string(rng() % 400));
    docs.push_back(std::move(doc));
  }
  const Vocabulary vocab = build_vocab(docs, {1, 2}, {{1, 300}, {2, 300}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(vectorize(docs[0], vocab));
  }
}
BENCHMARK(BM_Vectorize);

void BM_SvmEpoch(benchmark::State& state) {
  std::mt19937_64 rng(2);
  LabeledSet data;
  data.dimension = 200;
  for (int i = 0; i < 1000; ++i) {
    FeatureVector x;
    x.dimension = data.dimension;
    for (std::size_t j = 0; j < data.dimension; ++j) {
      if (rng() % 10 == 0) x.indices.push_back(j);
    }
    data.vectors.push_back(std::move(x));
    data.labels.push_back(static_cast<int>(rng() % 2));
  }
  SvmOptions options;
  options.epochs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(train_linear_svm(data, options));
  }
}
BENCHMARK(BM_SvmEpoch);

}  // namespace

BENCHMARK_MAIN();
