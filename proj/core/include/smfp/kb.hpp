#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smfp {

// One candidate meaning of a slang/abbreviation/acronym term: a dictionary
// definition, one usage example sentence, and related terms. source/line
// record where the sense came from, so every sense in a merged knowledge
// base stays traceable to its file of origin.
struct Sense {
  std::string definition;
  std::string usage;
  std::vector<std::string> related;
  std::string source;
  std::size_t line = 0;
  // Cleaned, tokenized usage example, precomputed when a KnowledgeBase is
  // built so the disambiguator does not re-clean glosses per post.
  std::vector<std::string> usage_tokens;
};

// A term with all its senses. key is the normalized lookup form of term;
// sense order is stable: file order within a source, then source precedence.
struct LexiconEntry {
  std::string term;
  std::string key;
  std::vector<Sense> senses;
};

// Emoticon surface form -> meaning text. Ordered map so iteration (and
// therefore merged output) is deterministic.
using EmoticonMap = std::map<std::string, std::string>;

// One named lexicon file's worth of content, the unit merge() consumes.
struct LexiconSource {
  std::string name;
  std::vector<LexiconEntry> entries;
  EmoticonMap emoticons;
};

// Lookup normalization: lower-case, strip periods, trim surrounding
// whitespace ("S.T.O.P" -> "stop"). Idempotent. Throws InvalidTerm if the
// result is empty.
std::string normalize_key(std::string_view term);

// Loads a JSON-Lines lexicon file: one {"term":..., "senses":[...]} object
// per line. Senses keep file order; duplicate terms within the file get
// their senses concatenated in encounter order. Throws ParseError (with the
// line number) for malformed lines or missing fields, ValidationError for
// content violations (zero senses, empty definition/usage, empty key).
std::vector<LexiconEntry> load_lexicon(const std::string& path, const std::string& source_name);

// Loads an emoticon TSV (<emoticon>\t<meaning> per line). Keys are
// lower-cased so they match cleaned tokens. Throws ParseError / ValidationError.
EmoticonMap load_emoticons(const std::string& path);

// The integrated knowledge base: merged lexicon entries plus the emoticon
// map. Immutable once built.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  KnowledgeBase(std::map<std::string, LexiconEntry> entries, EmoticonMap emoticons,
                std::vector<std::string> source_precedence)
      : entries_(std::move(entries)),
        emoticons_(std::move(emoticons)),
        source_precedence_(std::move(source_precedence)) {}

  const std::map<std::string, LexiconEntry>& entries() const { return entries_; }
  const EmoticonMap& emoticons() const { return emoticons_; }
  const std::vector<std::string>& source_precedence() const { return source_precedence_; }

  // Entry whose key equals normalize_key(token), or nullptr. Absence is a
  // value, not an error; tokens that normalize to nothing simply miss.
  const LexiconEntry* lookup(std::string_view token) const;

  bool has_emoticon(const std::string& token) const { return emoticons_.count(token) != 0; }

 private:
  std::map<std::string, LexiconEntry> entries_;
  EmoticonMap emoticons_;
  std::vector<std::string> source_precedence_;
};

// Merges named sources into one KnowledgeBase. Entries sharing a key union
// their senses, ordered by precedence then within-source order; emoticon
// conflicts resolve in favor of the earlier precedence source. precedence
// defaults to the input order; when given it must name each source exactly
// once. Input order does not matter beyond the default: permuting sources
// under a fixed precedence yields an identical KB. Throws ConfigError on
// duplicate or unlisted source names.
KnowledgeBase merge(std::vector<LexiconSource> sources,
                    std::vector<std::string> precedence = {});

// Convenience: load several lexicon files (source name = file stem unless
// given as "name:path") plus an optional emoticon file, then merge in the
// listed order.
KnowledgeBase load_knowledge_base(const std::vector<std::string>& lexicon_specs,
                                  const std::string& emoticon_path = "");

}  // namespace smfp
