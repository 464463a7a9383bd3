// smfp — slang-aware social-media text preprocessing and classification.
//
// One executable exposing every module as a subcommand plus a one-shot
// `pipeline` command for end-to-end runs. All output artifacts are UTF-8;
// any failure prints the error on stderr, removes partially written output
// files, and exits non-zero.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smfp/corpus.hpp"
#include "smfp/dataio.hpp"
#include "smfp/enrich.hpp"
#include "smfp/errors.hpp"
#include "smfp/features.hpp"
#include "smfp/kb.hpp"
#include "smfp/learn.hpp"
#include "smfp/lesk.hpp"
#include "smfp/normalize.hpp"
#include "smfp/oovfilter.hpp"
#include "smfp/pipeline.hpp"
#include "smfp/version.hpp"

namespace {

using nlohmann::json;

// Output files the current command has started writing. Removed wholesale
// if the command fails, so failed runs never leave partial artifacts behind.
std::vector<std::string> g_pending_outputs;

void plan_output(const std::string& path) { g_pending_outputs.push_back(path); }

void discard_pending_outputs() {
  for (const std::string& path : g_pending_outputs) std::remove(path.c_str());
  g_pending_outputs.clear();
}

std::vector<std::string> split_list(const std::string& spec, char sep = ',') {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(spec);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::vector<int> parse_ngram_list(const std::string& spec) {
  std::vector<int> sizes;
  for (const std::string& part : split_list(spec)) {
    try {
      sizes.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw smfp::ConfigError("bad --ngrams entry \"" + part + "\"");
    }
    if (sizes.back() <= 0) throw smfp::ConfigError("--ngrams sizes must be positive");
  }
  if (sizes.empty()) throw smfp::ConfigError("--ngrams must name at least one size");
  return sizes;
}

std::map<int, std::size_t> parse_topk_spec(const std::string& spec) {
  std::map<int, std::size_t> k_per_n;
  for (const std::string& part : split_list(spec)) {
    const std::size_t colon = part.find(':');
    if (colon == std::string::npos) {
      throw smfp::ConfigError("bad --top-k entry \"" + part + "\" (want <n>:<K>)");
    }
    try {
      const int n = std::stoi(part.substr(0, colon));
      const long long k = std::stoll(part.substr(colon + 1));
      if (n <= 0 || k <= 0) throw std::invalid_argument("non-positive");
      if (!k_per_n.emplace(n, static_cast<std::size_t>(k)).second) {
        throw smfp::ConfigError("--top-k repeats n=" + std::to_string(n));
      }
    } catch (const smfp::Error&) {
      throw;
    } catch (const std::exception&) {
      throw smfp::ConfigError("bad --top-k entry \"" + part + "\" (want <n>:<K>)");
    }
  }
  if (k_per_n.empty()) throw smfp::ConfigError("--top-k must name at least one <n>:<K>");
  return k_per_n;
}

smfp::EmoticonMap load_optional_emoticons(const std::string& path) {
  if (path.empty()) return {};
  return smfp::load_emoticons(path);
}

std::ofstream open_output(const std::string& path) {
  plan_output(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw smfp::IoError("cannot open file for writing: " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out.good()) throw smfp::IoError("write failure on file: " + path);
}

// Stopword-filters the pre-stem tokens, then stems the survivors; with no
// stoplist the enrichment's own stemmed output already is the answer.
std::vector<std::string> final_tokens(const smfp::EnrichedPost& post,
                                      const std::unordered_set<std::string>* stoplist) {
  if (stoplist == nullptr) return post.stemmed;
  std::vector<std::string> kept = smfp::remove_stopwords(post.tokens, *stoplist);
  for (std::string& token : kept) token = smfp::stem(token);
  return kept;
}

json disambiguation_to_json(const smfp::Disambiguation& d) {
  json scores = json::array();
  for (const smfp::SenseScore& s : d.scores) {
    scores.push_back({{"sense", s.sense_index}, {"overlap", s.overlap}});
  }
  return json{{"term", d.term},
              {"chosen", d.chosen},
              {"definition", d.definition},
              {"confident", d.confident},
              {"scores", scores}};
}

std::string version_text() {
  std::ostringstream out;
  out << "smfp " << smfp::kVersion << "\n";
#ifdef SMFP_DATA_DIR
  const std::string data_dir = SMFP_DATA_DIR;
  const char* files[] = {"wordlist.txt",
                         "frequencies.tsv",
                         "stopwords.txt",
                         "emoticons.tsv",
                         "lexicons/internetslang.jsonl",
                         "lexicons/naijalingo.jsonl",
                         "lexicons/polarity.tsv",
                         "lexicons/urban.jsonl"};
  for (const char* name : files) {
    out << "data/" << name << "  ";
    try {
      out << smfp::to_hex(smfp::file_fnv1a(data_dir + "/" + name));
    } catch (const smfp::IoError&) {
      out << "(missing)";
    }
    out << "\n";
  }
#endif
  return out.str();
}

// ---- subcommand wiring ----------------------------------------------------

void setup_kb(CLI::App& app) {
  CLI::App* kb = app.add_subcommand("kb", "Inspect, validate, and merge slang lexicons");
  kb->require_subcommand(1);

  {
    struct Opts {
      std::vector<std::string> files;
      std::string emoticons;
    };
    auto opts = std::make_shared<Opts>();
    CLI::App* sub = kb->add_subcommand("validate", "Check lexicon files for format errors");
    sub->add_option("files", opts->files, "Lexicon files (JSON Lines)")->required();
    sub->add_option("--emoticons", opts->emoticons, "Emoticon TSV to validate too");
    sub->callback([opts] {
      for (const std::string& path : opts->files) {
        const auto entries = smfp::load_lexicon(path, "validate");
        std::size_t senses = 0;
        for (const auto& entry : entries) senses += entry.senses.size();
        std::cout << "OK " << path << ": " << entries.size() << " terms, " << senses
                  << " senses\n";
      }
      if (!opts->emoticons.empty()) {
        const auto map = smfp::load_emoticons(opts->emoticons);
        std::cout << "OK " << opts->emoticons << ": " << map.size() << " emoticons\n";
      }
    });
  }

  {
    struct Opts {
      std::string term;
      std::string kb_spec;
      std::string emoticons;
    };
    auto opts = std::make_shared<Opts>();
    CLI::App* sub = kb->add_subcommand("lookup", "Print every sense of a term");
    sub->add_option("term", opts->term, "Term to look up")->required();
    sub->add_option("--kb", opts->kb_spec, "Comma-separated lexicon files (name:path or path)")
        ->required();
    sub->add_option("--emoticons", opts->emoticons, "Emoticon TSV");
    sub->callback([opts] {
      const smfp::KnowledgeBase kb =
          smfp::load_knowledge_base(split_list(opts->kb_spec), opts->emoticons);
      const smfp::LexiconEntry* entry = kb.lookup(opts->term);
      if (entry == nullptr) {
        throw smfp::InvalidTerm("term not found: " + opts->term);
      }
      json senses = json::array();
      for (const smfp::Sense& s : entry->senses) {
        senses.push_back({{"definition", s.definition},
                          {"usage", s.usage},
                          {"related", s.related},
                          {"source", s.source}});
      }
      json doc{{"term", entry->term}, {"key", entry->key}, {"senses", senses}};
      std::cout << doc.dump(2) << "\n";
    });
  }

  {
    struct Opts {
      std::vector<std::string> sources;
      std::string out;
      std::string emoticons;
    };
    auto opts = std::make_shared<Opts>();
    CLI::App* sub = kb->add_subcommand("merge", "Merge lexicons into one knowledge base");
    sub->add_option("sources", opts->sources, "Lexicon sources (name:path or path)")->required();
    sub->add_option("--out", opts->out, "Merged lexicon output (JSON Lines)")->required();
    sub->add_option("--emoticons", opts->emoticons, "Emoticon TSV");
    sub->callback([opts] {
      const smfp::KnowledgeBase kb = smfp::load_knowledge_base(opts->sources, opts->emoticons);
      std::ofstream out = open_output(opts->out);
      std::size_t senses = 0;
      for (const auto& [key, entry] : kb.entries()) {
        json sense_rows = json::array();
        for (const smfp::Sense& s : entry.senses) {
          sense_rows.push_back({{"definition", s.definition},
                                {"usage", s.usage},
                                {"related", s.related},
                                {"source", s.source}});
          ++senses;
        }
        out << json{{"term", entry.term}, {"senses", sense_rows}}.dump() << "\n";
      }
      finish_output(out, opts->out);
      std::cout << "merged " << opts->sources.size() << " sources: " << kb.entries().size()
                << " terms, " << senses << " senses, " << kb.emoticons().size()
                << " emoticons -> " << opts->out << "\n";
    });
  }
}

void setup_clean(CLI::App& app) {
  struct Opts {
    std::string in;
    std::string out;
    std::string format = "jsonl";
    std::string emoticons;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("clean", "Normalize corpus text (URLs, case, symbols)");
  sub->add_option("--in", opts->in, "Input corpus")->required();
  sub->add_option("--out", opts->out, "Output corpus (JSON Lines)")->required();
  sub->add_option("--format", opts->format, "Input format: csv|jsonl (default jsonl)");
  sub->add_option("--emoticons", opts->emoticons, "Emoticon TSV whose keys survive cleaning");
  sub->callback([opts] {
    smfp::Corpus corpus = smfp::load_corpus(opts->in, smfp::parse_format(opts->format));
    const smfp::Cleaner cleaner(load_optional_emoticons(opts->emoticons));
    for (smfp::RawPost& post : corpus.posts) post.text = cleaner.clean(post.text);
    plan_output(opts->out);
    smfp::write_corpus(corpus, opts->out, smfp::CorpusFormat::jsonl);
  });
}

void setup_disambiguate(CLI::App& app) {
  struct Opts {
    std::string kb_spec;
    std::string emoticons;
    std::string in;
    std::string out;
    std::string format = "jsonl";
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("disambiguate", "Pick a sense for every known slang term in each post");
  sub->add_option("--kb", opts->kb_spec, "Comma-separated lexicon files (name:path or path)")
      ->required();
  sub->add_option("--emoticons", opts->emoticons, "Emoticon TSV");
  sub->add_option("--in", opts->in, "Input corpus")->required();
  sub->add_option("--out", opts->out, "Per-post disambiguation records (JSON Lines)")->required();
  sub->add_option("--format", opts->format, "Input format: csv|jsonl (default jsonl)");
  sub->callback([opts] {
    const smfp::KnowledgeBase kb =
        smfp::load_knowledge_base(split_list(opts->kb_spec), opts->emoticons);
    const smfp::Corpus corpus = smfp::load_corpus(opts->in, smfp::parse_format(opts->format));
    const smfp::Cleaner cleaner(kb.emoticons());
    const smfp::Wordlist no_wordlist;  // word-vs-oov does not affect slang routing
    std::ofstream out = open_output(opts->out);
    for (const smfp::RawPost& post : corpus.posts) {
      const smfp::TokenizedText text = smfp::tokenize(cleaner.clean(post.text));
      const auto classified = smfp::classify_all(text, kb, no_wordlist);
      json rows = json::array();
      for (const smfp::Disambiguation& d : smfp::disambiguate_all(classified, kb)) {
        rows.push_back(disambiguation_to_json(d));
      }
      json doc;
      doc["text"] = post.text;
      if (post.label.has_value()) doc["label"] = *post.label;
      doc["disambiguations"] = rows;
      out << doc.dump() << "\n";
    }
    finish_output(out, opts->out);
  });
}

void setup_enrich(CLI::App& app) {
  struct Opts {
    std::string mode = "smfp";
    std::string kb_spec;
    std::string emoticons;
    std::string wordlist;
    std::string freq;
    std::string polarity;
    std::string stoplist;
    std::string in;
    std::string out;
    std::string trace_out;
    std::string format = "jsonl";
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "enrich", "Substitute slang definitions, fix spelling, expand emoticons, stem");
  sub->add_option("--mode", opts->mode, "smfp|baseline (default smfp)");
  sub->add_option("--kb", opts->kb_spec, "Comma-separated lexicon files (name:path or path)");
  sub->add_option("--emoticons", opts->emoticons, "Emoticon TSV");
  sub->add_option("--wordlist", opts->wordlist, "Dictionary wordlist (required in smfp mode)");
  sub->add_option("--freq", opts->freq, "Word frequency TSV (required in smfp mode)");
  sub->add_option("--polarity", opts->polarity, "Slang polarity TSV (baseline substitution)");
  sub->add_option("--stoplist", opts->stoplist, "Stop-word list applied before stemming");
  sub->add_option("--in", opts->in, "Input corpus")->required();
  sub->add_option("--out", opts->out, "Final token documents (JSON Lines)")->required();
  sub->add_option("--trace-out", opts->trace_out, "Full per-post records with edit traces");
  sub->add_option("--format", opts->format, "Input format: csv|jsonl (default jsonl)");
  sub->callback([opts] {
    smfp::EnrichMode mode;
    if (opts->mode == "smfp") {
      mode = smfp::EnrichMode::smfp;
    } else if (opts->mode == "baseline") {
      mode = smfp::EnrichMode::baseline;
    } else {
      throw smfp::ConfigError("--mode must be smfp or baseline");
    }
    if (mode == smfp::EnrichMode::smfp && opts->wordlist.empty()) {
      throw smfp::ConfigError("--wordlist is required in smfp mode");
    }
    if (mode == smfp::EnrichMode::smfp && opts->freq.empty()) {
      throw smfp::ConfigError("--freq is required in smfp mode");
    }
    const smfp::KnowledgeBase kb =
        smfp::load_knowledge_base(split_list(opts->kb_spec), opts->emoticons);
    smfp::Wordlist wordlist;
    if (!opts->wordlist.empty()) wordlist = smfp::load_wordlist(opts->wordlist);
    smfp::FrequencyTable freq;
    if (!opts->freq.empty()) freq = smfp::load_frequencies(opts->freq);
    smfp::PolarityLexicon polarity;
    const smfp::PolarityLexicon* polarity_ptr = nullptr;
    if (!opts->polarity.empty()) {
      polarity = smfp::load_polarity(opts->polarity);
      polarity_ptr = &polarity;
    }
    std::unordered_set<std::string> stoplist;
    const std::unordered_set<std::string>* stoplist_ptr = nullptr;
    if (!opts->stoplist.empty()) {
      stoplist = smfp::load_stoplist(opts->stoplist);
      stoplist_ptr = &stoplist;
    }

    const smfp::Corpus corpus = smfp::load_corpus(opts->in, smfp::parse_format(opts->format));
    std::ofstream out = open_output(opts->out);
    std::ofstream trace_out;
    if (!opts->trace_out.empty()) trace_out = open_output(opts->trace_out);

    for (const smfp::RawPost& post : corpus.posts) {
      const smfp::EnrichedPost enriched =
          smfp::enrich_post(post, kb, wordlist, freq, mode, polarity_ptr);
      json doc;
      if (post.label.has_value()) doc["label"] = *post.label;
      doc["tokens"] = final_tokens(enriched, stoplist_ptr);
      out << doc.dump() << "\n";
      if (trace_out.is_open()) {
        json edits = json::array();
        for (const smfp::TraceEdit& e : enriched.trace) {
          edits.push_back({{"kind", smfp::edit_kind_name(e.kind)},
                           {"position", e.position},
                           {"before", e.before},
                           {"after", e.after}});
        }
        json full;
        if (post.label.has_value()) full["label"] = *post.label;
        full["text"] = post.text;
        full["tokens"] = enriched.tokens;
        full["trace"] = edits;
        full["stemmed"] = enriched.stemmed;
        trace_out << full.dump() << "\n";
      }
    }
    finish_output(out, opts->out);
    if (trace_out.is_open()) finish_output(trace_out, opts->trace_out);
  });
}

void setup_featurize(CLI::App& app) {
  struct Opts {
    std::string in;
    std::string ngrams = "1,2";
    std::string top_k = "1:500,2:500";
    std::string vocab_in;
    std::string vocab_out;
    std::string out;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("featurize", "Build top-K n-gram vocabulary and binary vectors");
  sub->add_option("--in", opts->in, "Token documents (JSON Lines)")->required();
  sub->add_option("--ngrams", opts->ngrams, "Comma-separated n-gram sizes (default 1,2)");
  sub->add_option("--top-k", opts->top_k, "Per-n vocabulary caps <n>:<K>,... (default 1:500,2:500)");
  sub->add_option("--vocab", opts->vocab_in, "Reuse an existing vocabulary TSV instead of building");
  sub->add_option("--vocab-out", opts->vocab_out, "Write the vocabulary TSV here");
  sub->add_option("--out", opts->out, "Feature vectors output (JSON Lines)")->required();
  sub->callback([opts] {
    const std::vector<smfp::TokenDoc> docs = smfp::load_token_docs(opts->in);
    smfp::Vocabulary vocab;
    if (!opts->vocab_in.empty()) {
      vocab = smfp::load_vocabulary(opts->vocab_in);
    } else {
      std::vector<std::vector<std::string>> token_lists;
      token_lists.reserve(docs.size());
      for (const smfp::TokenDoc& doc : docs) token_lists.push_back(doc.tokens);
      vocab = smfp::build_vocab(token_lists, parse_ngram_list(opts->ngrams),
                                parse_topk_spec(opts->top_k));
    }
    std::vector<smfp::FeatureVector> vectors;
    std::vector<std::optional<int>> labels;
    vectors.reserve(docs.size());
    labels.reserve(docs.size());
    for (const smfp::TokenDoc& doc : docs) {
      vectors.push_back(smfp::vectorize(doc.tokens, vocab));
      labels.push_back(doc.label);
    }
    if (!opts->vocab_out.empty()) {
      plan_output(opts->vocab_out);
      smfp::save_vocabulary(vocab, opts->vocab_out);
    }
    plan_output(opts->out);
    smfp::write_feature_file(vectors, labels, vocab.size(), opts->out);
  });
}

void setup_train(CLI::App& app) {
  struct Opts {
    std::string model = "svm";
    double c = 0.1;
    std::size_t hidden = 16;
    int epochs = 10;
    double lr = 0.1;
    std::uint64_t seed = 1;
    std::string train;
    std::string model_out;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("train", "Fit a linear SVM or a one-hidden-layer MLP");
  sub->add_option("--model", opts->model, "svm|mlp (default svm)");
  sub->add_option("--c", opts->c, "SVM hinge penalty strength (default 0.1)");
  sub->add_option("--hidden", opts->hidden, "MLP hidden units (default 16)");
  sub->add_option("--epochs", opts->epochs, "Training epochs (default 10)");
  sub->add_option("--lr", opts->lr, "Learning rate (default 0.1)");
  sub->add_option("--seed", opts->seed, "Random seed (default 1)");
  sub->add_option("--train", opts->train, "Labeled feature vectors (JSON Lines)")->required();
  sub->add_option("--model-out", opts->model_out, "Model output (JSON)")->required();
  sub->callback([opts] {
    if (opts->model != "svm" && opts->model != "mlp") {
      throw smfp::ConfigError("--model must be svm or mlp");
    }
    if (opts->epochs <= 0) throw smfp::ConfigError("--epochs must be positive");
    const smfp::LabeledSet data = smfp::to_labeled_set(smfp::load_feature_file(opts->train));
    smfp::SavedModel saved;
    saved.seed = opts->seed;
    json config{{"model", opts->model},
                {"epochs", opts->epochs},
                {"lr", opts->lr},
                {"seed", opts->seed}};
    if (opts->model == "svm") {
      smfp::SvmOptions options;
      options.c = opts->c;
      options.epochs = opts->epochs;
      options.lr = opts->lr;
      options.seed = opts->seed;
      config["c"] = opts->c;
      saved.model = smfp::train_linear_svm(data, options);
    } else {
      smfp::MlpOptions options;
      options.hidden = opts->hidden;
      options.epochs = opts->epochs;
      options.lr = opts->lr;
      options.seed = opts->seed;
      config["hidden"] = opts->hidden;
      saved.model = smfp::train_mlp(data, options);
    }
    saved.config_json = config.dump();
    plan_output(opts->model_out);
    smfp::save_model(saved, opts->model_out);
    std::cout << "trained " << opts->model << " on " << data.vectors.size() << " instances ("
              << data.dimension << " features) -> " << opts->model_out << "\n";
  });
}

void setup_eval(CLI::App& app) {
  struct Opts {
    std::string model;
    std::string test;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("eval", "Report a saved model's accuracy on a test set");
  sub->add_option("--model", opts->model, "Model file (JSON)")->required();
  sub->add_option("--test", opts->test, "Labeled feature vectors (JSON Lines)")->required();
  sub->callback([opts] {
    const smfp::SavedModel saved = smfp::load_model(opts->model);
    const smfp::LabeledSet test = smfp::to_labeled_set(smfp::load_feature_file(opts->test));
    const bool is_svm = std::holds_alternative<smfp::LinearModel>(saved.model);
    const double accuracy =
        is_svm ? smfp::evaluate_accuracy(std::get<smfp::LinearModel>(saved.model), test)
               : smfp::evaluate_accuracy(std::get<smfp::MlpModel>(saved.model), test);
    json doc{{"accuracy", accuracy},
             {"model", is_svm ? "svm" : "mlp"},
             {"test_size", test.vectors.size()}};
    std::cout << doc.dump(2) << "\n";
  });
}

void setup_sample(CLI::App& app) {
  struct Opts {
    std::size_t every = 10;
    std::string in;
    std::string out;
    std::string format = "jsonl";
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("sample", "Keep every N-th post (systematic sampling)");
  sub->add_option("--every", opts->every, "Sampling interval (default 10)")->required();
  sub->add_option("--in", opts->in, "Input corpus")->required();
  sub->add_option("--out", opts->out, "Output corpus")->required();
  sub->add_option("--format", opts->format, "Corpus format: csv|jsonl (default jsonl)");
  sub->callback([opts] {
    const smfp::CorpusFormat format = smfp::parse_format(opts->format);
    const smfp::Corpus corpus = smfp::load_corpus(opts->in, format);
    smfp::Corpus sampled;
    for (const std::size_t i : smfp::systematic_sample(corpus.posts.size(), opts->every)) {
      sampled.posts.push_back(corpus.posts[i]);
    }
    plan_output(opts->out);
    smfp::write_corpus(sampled, opts->out, format);
    std::cout << "kept " << sampled.posts.size() << " of " << corpus.posts.size() << " posts\n";
  });
}

void setup_split(CLI::App& app) {
  struct Opts {
    std::size_t test_every = 5;
    std::string in;
    std::string train_out;
    std::string test_out;
    std::string format = "jsonl";
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("split", "Route every N-th post to a test set, the rest to training");
  sub->add_option("--test-every", opts->test_every, "Test interval (default 5)");
  sub->add_option("--in", opts->in, "Input corpus")->required();
  sub->add_option("--train-out", opts->train_out, "Training corpus output")->required();
  sub->add_option("--test-out", opts->test_out, "Test corpus output")->required();
  sub->add_option("--format", opts->format, "Corpus format: csv|jsonl (default jsonl)");
  sub->callback([opts] {
    const smfp::CorpusFormat format = smfp::parse_format(opts->format);
    const smfp::Corpus corpus = smfp::load_corpus(opts->in, format);
    const std::vector<std::size_t> picks =
        smfp::systematic_sample(corpus.posts.size(), opts->test_every);
    const std::unordered_set<std::size_t> test_set(picks.begin(), picks.end());
    smfp::Corpus train_corpus;
    smfp::Corpus test_corpus;
    for (std::size_t i = 0; i < corpus.posts.size(); ++i) {
      (test_set.count(i) != 0 ? test_corpus : train_corpus).posts.push_back(corpus.posts[i]);
    }
    plan_output(opts->train_out);
    plan_output(opts->test_out);
    smfp::write_corpus(train_corpus, opts->train_out, format);
    smfp::write_corpus(test_corpus, opts->test_out, format);
    std::cout << "split " << corpus.posts.size() << " posts: " << train_corpus.posts.size()
              << " train, " << test_corpus.posts.size() << " test\n";
  });
}

void setup_ros(CLI::App& app) {
  struct Opts {
    std::uint64_t seed = 1;
    std::string in;
    std::string out;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("ros", "Balance classes by duplicating random minority instances");
  sub->add_option("--seed", opts->seed, "Random seed (default 1)");
  sub->add_option("--in", opts->in, "Labeled feature vectors (JSON Lines)")->required();
  sub->add_option("--out", opts->out, "Balanced feature vectors output")->required();
  sub->callback([opts] {
    const smfp::LabeledSet data = smfp::to_labeled_set(smfp::load_feature_file(opts->in));
    const smfp::LabeledSet balanced = smfp::ros_oversample(data, opts->seed);
    std::vector<std::optional<int>> labels(balanced.labels.begin(), balanced.labels.end());
    plan_output(opts->out);
    smfp::write_feature_file(balanced.vectors, labels, balanced.dimension, opts->out);
    std::cout << "oversampled " << data.vectors.size() << " -> " << balanced.vectors.size()
              << " instances\n";
  });
}

void setup_pipeline(CLI::App& app) {
  struct Opts {
    std::string config;
    std::uint64_t seed = 0;
    std::string report_out;
  };
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "pipeline", "Run enrich -> featurize -> train -> eval end to end from a JSON config");
  sub->add_option("--config", opts->config, "Pipeline config (JSON)")->required();
  CLI::Option* seed_opt = sub->add_option("--seed", opts->seed, "Override the config's seed");
  sub->add_option("--report-out", opts->report_out, "Also write the report here");
  sub->callback([opts, seed_opt] {
    smfp::PipelineConfig config = smfp::parse_pipeline_config(opts->config);
    if (seed_opt->count() > 0) config.seed = opts->seed;
    const smfp::PipelineReport report = smfp::run_pipeline(config);
    const std::string rendered = smfp::report_to_json(report);
    std::cout << rendered << "\n";
    if (!opts->report_out.empty()) {
      std::ofstream out = open_output(opts->report_out);
      out << rendered << "\n";
      finish_output(out, opts->report_out);
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slang-aware social-media text preprocessing and classification toolkit"};
  app.require_subcommand(1);
  app.add_flag_callback(
      "--version",
      [] {
        std::cout << version_text();
        throw CLI::Success{};
      },
      "Print toolkit version and bundled data checksums");

  setup_kb(app);
  setup_clean(app);
  setup_disambiguate(app);
  setup_enrich(app);
  setup_featurize(app);
  setup_train(app);
  setup_eval(app);
  setup_sample(app);
  setup_split(app);
  setup_ros(app);
  setup_pipeline(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const smfp::Error& e) {
    discard_pending_outputs();
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  g_pending_outputs.clear();
  return 0;
}
