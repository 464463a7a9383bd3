#include "smfp/pipeline.hpp"

#include <map>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "smfp/errors.hpp"
#include "smfp/features.hpp"
#include "smfp/learn.hpp"
#include "smfp/normalize.hpp"
#include "smfp/version.hpp"

namespace smfp {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& origin, const std::string& what) {
  throw ConfigError(origin + ": " + what);
}

// Typed field readers; each enforces presence handling and type in one place.
std::string read_string(const json& doc, const std::string& key, const std::string& origin,
                        std::string fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_string()) bad_config(origin, "\"" + key + "\" must be a string");
  return doc[key].get<std::string>();
}

bool read_bool(const json& doc, const std::string& key, const std::string& origin,
               bool fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_boolean()) bad_config(origin, "\"" + key + "\" must be a boolean");
  return doc[key].get<bool>();
}

double read_positive_number(const json& doc, const std::string& key, const std::string& origin,
                            double fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number()) bad_config(origin, "\"" + key + "\" must be a number");
  const double value = doc[key].get<double>();
  if (!(value > 0.0)) bad_config(origin, "\"" + key + "\" must be positive");
  return value;
}

std::uint64_t read_count(const json& doc, const std::string& key, const std::string& origin,
                         std::uint64_t fallback, bool require_positive) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number_unsigned()) {
    bad_config(origin, "\"" + key + "\" must be a non-negative integer");
  }
  const std::uint64_t value = doc[key].get<std::uint64_t>();
  if (require_positive && value == 0) bad_config(origin, "\"" + key + "\" must be positive");
  return value;
}

std::vector<std::string> read_string_array(const json& doc, const std::string& key,
                                           const std::string& origin,
                                           std::vector<std::string> fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_array()) bad_config(origin, "\"" + key + "\" must be an array of strings");
  std::vector<std::string> values;
  for (const json& item : doc[key]) {
    if (!item.is_string()) bad_config(origin, "\"" + key + "\" must be an array of strings");
    values.push_back(item.get<std::string>());
  }
  return values;
}

std::vector<std::uint64_t> read_count_array(const json& doc, const std::string& key,
                                            const std::string& origin,
                                            std::vector<std::uint64_t> fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_array()) {
    bad_config(origin, "\"" + key + "\" must be an array of positive integers");
  }
  std::vector<std::uint64_t> values;
  for (const json& item : doc[key]) {
    if (!item.is_number_unsigned() || item.get<std::uint64_t>() == 0) {
      bad_config(origin, "\"" + key + "\" must be an array of positive integers");
    }
    values.push_back(item.get<std::uint64_t>());
  }
  return values;
}

// Stopword-filters the pre-stem token sequence, then stems the survivors.
// With no stoplist this equals the enrichment's own stemmed output.
std::vector<std::string> finish_document(const EnrichedPost& post,
                                         const std::unordered_set<std::string>* stoplist) {
  if (stoplist == nullptr) return post.stemmed;
  std::vector<std::string> kept = remove_stopwords(post.tokens, *stoplist);
  for (std::string& token : kept) token = stem(token);
  return kept;
}

void require_labeled(const Corpus& corpus, const char* which) {
  for (std::size_t i = 0; i < corpus.posts.size(); ++i) {
    if (!corpus.posts[i].label.has_value()) {
      throw ValidationError(std::string(which) + " corpus post " + std::to_string(i + 1) +
                            " is unlabeled");
    }
  }
}

}  // namespace

PipelineConfig parse_pipeline_config_text(const std::string& json_text,
                                          const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    bad_config(origin, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad_config(origin, "config must be a JSON object");

  static const std::set<std::string> known_keys = {
      "mode",     "model",    "lexicons", "emoticons", "wordlist",
      "frequencies", "stoplist", "polarity", "ngrams",    "top_k",
      "vocab_from",  "ros",      "svm_c",    "hidden",    "epochs",
      "lr",          "seed",     "train",    "test",      "format"};
  for (const auto& item : doc.items()) {
    if (known_keys.count(item.key()) == 0) {
      bad_config(origin, "unknown config key \"" + item.key() + "\"");
    }
  }

  PipelineConfig config;

  const std::string mode = read_string(doc, "mode", origin, "smfp");
  if (mode == "smfp") {
    config.mode = EnrichMode::smfp;
  } else if (mode == "baseline") {
    config.mode = EnrichMode::baseline;
  } else {
    bad_config(origin, "\"mode\" must be \"smfp\" or \"baseline\"");
  }

  config.model = read_string(doc, "model", origin, "svm");
  if (config.model != "svm" && config.model != "mlp") {
    bad_config(origin, "\"model\" must be \"svm\" or \"mlp\"");
  }

  config.lexicons = read_string_array(doc, "lexicons", origin, {});
  config.emoticons = read_string(doc, "emoticons", origin, "");
  config.wordlist = read_string(doc, "wordlist", origin, "");
  config.frequencies = read_string(doc, "frequencies", origin, "");
  config.stoplist = read_string(doc, "stoplist", origin, "");
  config.polarity = read_string(doc, "polarity", origin, "");

  const std::vector<std::uint64_t> ngrams = read_count_array(doc, "ngrams", origin, {1, 2});
  config.ngrams.clear();
  for (const std::uint64_t n : ngrams) config.ngrams.push_back(static_cast<int>(n));

  const std::vector<std::uint64_t> top_k =
      read_count_array(doc, "top_k", origin, std::vector<std::uint64_t>(ngrams.size(), 500));
  config.top_k.assign(top_k.begin(), top_k.end());
  if (config.top_k.size() != config.ngrams.size()) {
    bad_config(origin, "\"ngrams\" and \"top_k\" must have equal lengths");
  }
  std::set<int> distinct(config.ngrams.begin(), config.ngrams.end());
  if (distinct.size() != config.ngrams.size()) {
    bad_config(origin, "\"ngrams\" must not repeat a size");
  }

  config.vocab_from = read_string(doc, "vocab_from", origin, "train");
  if (config.vocab_from != "train" && config.vocab_from != "all") {
    bad_config(origin, "\"vocab_from\" must be \"train\" or \"all\"");
  }

  config.ros = read_bool(doc, "ros", origin, false);
  config.svm_c = read_positive_number(doc, "svm_c", origin, 0.1);
  config.hidden =
      static_cast<std::size_t>(read_count(doc, "hidden", origin, config.hidden, true));
  config.epochs = static_cast<int>(read_count(doc, "epochs", origin, 10, true));
  config.lr = read_positive_number(doc, "lr", origin, 0.1);
  config.seed = read_count(doc, "seed", origin, 1, false);

  config.train = read_string(doc, "train", origin, "");
  config.test = read_string(doc, "test", origin, "");
  if (config.train.empty()) bad_config(origin, "\"train\" corpus path is required");
  if (config.test.empty()) bad_config(origin, "\"test\" corpus path is required");

  const std::string format = read_string(doc, "format", origin, "jsonl");
  config.format = parse_format(format);

  if (config.mode == EnrichMode::smfp) {
    if (config.wordlist.empty()) bad_config(origin, "\"wordlist\" is required in smfp mode");
    if (config.frequencies.empty()) {
      bad_config(origin, "\"frequencies\" is required in smfp mode");
    }
  }
  return config;
}

PipelineConfig parse_pipeline_config(const std::string& path) {
  return parse_pipeline_config_text(read_file(path), path);
}

std::string config_canonical_json(const PipelineConfig& config) {
  // nlohmann's default object storage is a sorted map, so key order (and
  // therefore the digest) cannot depend on how the config file spelled it.
  json doc;
  doc["mode"] = enrich_mode_name(config.mode);
  doc["model"] = config.model;
  doc["lexicons"] = config.lexicons;
  doc["emoticons"] = config.emoticons;
  doc["wordlist"] = config.wordlist;
  doc["frequencies"] = config.frequencies;
  doc["stoplist"] = config.stoplist;
  doc["polarity"] = config.polarity;
  doc["ngrams"] = config.ngrams;
  doc["top_k"] = config.top_k;
  doc["vocab_from"] = config.vocab_from;
  doc["ros"] = config.ros;
  doc["svm_c"] = config.svm_c;
  doc["hidden"] = config.hidden;
  doc["epochs"] = config.epochs;
  doc["lr"] = config.lr;
  doc["seed"] = config.seed;
  doc["train"] = config.train;
  doc["test"] = config.test;
  doc["format"] = format_name(config.format);
  return doc.dump();
}

std::string config_digest(const PipelineConfig& config) {
  return to_hex(fnv1a64(config_canonical_json(config)));
}

std::string report_to_json(const PipelineReport& report) {
  json doc;
  doc["accuracy"] = report.accuracy;
  doc["config_digest"] = report.config_digest;
  doc["mode"] = report.mode;
  doc["model"] = report.model;
  doc["seed"] = report.seed;
  doc["test_size"] = report.test_size;
  doc["train_size"] = report.train_size;
  return doc.dump(2);
}

PipelineReport run_pipeline(const PipelineConfig& config, const Corpus& train_corpus,
                            const Corpus& test_corpus) {
  if (train_corpus.posts.empty()) throw DegenerateData("training corpus is empty");
  if (test_corpus.posts.empty()) throw DegenerateData("test corpus is empty");
  require_labeled(train_corpus, "training");
  require_labeled(test_corpus, "test");

  const KnowledgeBase kb = load_knowledge_base(config.lexicons, config.emoticons);
  Wordlist wordlist;
  if (!config.wordlist.empty()) wordlist = load_wordlist(config.wordlist);
  FrequencyTable freq;
  if (!config.frequencies.empty()) freq = load_frequencies(config.frequencies);
  PolarityLexicon polarity;
  const PolarityLexicon* polarity_ptr = nullptr;
  if (!config.polarity.empty()) {
    polarity = load_polarity(config.polarity);
    polarity_ptr = &polarity;
  }
  std::unordered_set<std::string> stoplist;
  const std::unordered_set<std::string>* stoplist_ptr = nullptr;
  if (!config.stoplist.empty()) {
    stoplist = load_stoplist(config.stoplist);
    stoplist_ptr = &stoplist;
  }

  auto enrich_corpus = [&](const Corpus& corpus) {
    std::vector<std::vector<std::string>> docs;
    docs.reserve(corpus.posts.size());
    for (const RawPost& post : corpus.posts) {
      const EnrichedPost enriched =
          enrich_post(post, kb, wordlist, freq, config.mode, polarity_ptr);
      docs.push_back(finish_document(enriched, stoplist_ptr));
    }
    return docs;
  };
  const std::vector<std::vector<std::string>> train_docs = enrich_corpus(train_corpus);
  const std::vector<std::vector<std::string>> test_docs = enrich_corpus(test_corpus);

  std::map<int, std::size_t> k_per_n;
  for (std::size_t i = 0; i < config.ngrams.size(); ++i) {
    k_per_n[config.ngrams[i]] = config.top_k[i];
  }
  std::vector<std::vector<std::string>> vocab_docs = train_docs;
  if (config.vocab_from == "all") {
    vocab_docs.insert(vocab_docs.end(), test_docs.begin(), test_docs.end());
  }
  const Vocabulary vocab = build_vocab(vocab_docs, config.ngrams, k_per_n);

  auto to_set = [&](const std::vector<std::vector<std::string>>& docs, const Corpus& corpus) {
    LabeledSet set;
    set.dimension = vocab.size();
    set.vectors.reserve(docs.size());
    set.labels.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
      set.vectors.push_back(vectorize(docs[i], vocab));
      set.labels.push_back(*corpus.posts[i].label);
    }
    return set;
  };
  LabeledSet train_set = to_set(train_docs, train_corpus);
  const LabeledSet test_set = to_set(test_docs, test_corpus);

  if (config.ros) train_set = ros_oversample(train_set, config.seed);

  PipelineReport report;
  report.config_digest = config_digest(config);
  report.mode = enrich_mode_name(config.mode);
  report.model = config.model;
  report.seed = config.seed;
  report.train_size = train_corpus.posts.size();
  report.test_size = test_corpus.posts.size();

  if (config.model == "svm") {
    SvmOptions options;
    options.c = config.svm_c;
    options.epochs = config.epochs;
    options.lr = config.lr;
    options.seed = config.seed;
    const LinearModel model = train_linear_svm(train_set, options);
    report.accuracy = evaluate_accuracy(model, test_set);
  } else {
    MlpOptions options;
    options.hidden = config.hidden;
    options.epochs = config.epochs;
    options.lr = config.lr;
    options.seed = config.seed;
    const MlpModel model = train_mlp(train_set, options);
    report.accuracy = evaluate_accuracy(model, test_set);
  }
  return report;
}

PipelineReport run_pipeline(const PipelineConfig& config) {
  const Corpus train_corpus = load_corpus(config.train, config.format);
  const Corpus test_corpus = load_corpus(config.test, config.format);
  return run_pipeline(config, train_corpus, test_corpus);
}

}  // namespace smfp
