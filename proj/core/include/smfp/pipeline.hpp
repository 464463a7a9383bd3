#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smfp/corpus.hpp"
#include "smfp/enrich.hpp"

namespace smfp {

// One end-to-end run, described by a JSON config file. Paths resolve
// relative to the process working directory unless absolute.
struct PipelineConfig {
  EnrichMode mode = EnrichMode::smfp;
  std::string model = "svm";          // "svm" | "mlp"
  std::vector<std::string> lexicons;  // "name:path" specs, merge precedence order
  std::string emoticons;              // emoticon TSV; optional
  std::string wordlist;               // required in smfp mode
  std::string frequencies;            // required in smfp mode
  std::string stoplist;               // optional
  std::string polarity;               // optional; baseline slang polarity lexicon
  std::vector<int> ngrams = {1, 2};
  std::vector<std::size_t> top_k = {500, 500};  // parallel to ngrams
  std::string vocab_from = "train";             // "train" | "all"
  bool ros = false;
  double svm_c = 0.1;
  std::size_t hidden = 16;
  int epochs = 10;
  double lr = 0.1;
  std::uint64_t seed = 1;
  std::string train;  // corpus path
  std::string test;   // corpus path
  CorpusFormat format = CorpusFormat::jsonl;
};

// Parses a config JSON document / file. Unknown keys, wrong types, bad enum
// values, or mismatched ngrams/top_k lengths throw ConfigError. `origin`
// names the source in error messages.
PipelineConfig parse_pipeline_config_text(const std::string& json_text, const std::string& origin);
PipelineConfig parse_pipeline_config(const std::string& path);

// Canonical rendering of the effective config: every field present, keys
// sorted, compact. Two configs render identically iff they run identically.
std::string config_canonical_json(const PipelineConfig& config);

// FNV-1a digest of the canonical rendering, as 16 hex digits.
std::string config_digest(const PipelineConfig& config);

// What a finished run reports.
struct PipelineReport {
  double accuracy = 0.0;
  std::string config_digest;
  std::string mode;
  std::string model;
  std::uint64_t seed = 0;
  std::size_t test_size = 0;
  std::size_t train_size = 0;
};

// Sorted-key, 2-space-indented JSON. Byte-stable: equal reports render to
// equal bytes, so identical config+seed runs can be compared verbatim.
std::string report_to_json(const PipelineReport& report);

// Runs enrichment -> stopword filtering -> stemming -> featurization ->
// optional oversampling -> training -> evaluation. The vocabulary is built
// from the training split only unless vocab_from == "all". Corpora must be
// fully labeled (ValidationError) and non-empty (DegenerateData).
PipelineReport run_pipeline(const PipelineConfig& config, const Corpus& train_corpus,
                            const Corpus& test_corpus);

// Convenience: loads the corpora named by the config, then runs.
PipelineReport run_pipeline(const PipelineConfig& config);

}  // namespace smfp
