#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "smfp/kb.hpp"

namespace smfp {

// One social-media post: raw text plus an optional binary sentiment label
// (1 positive, 0 negative).
struct RawPost {
  std::string text;
  std::optional<int> label;

  bool operator==(const RawPost&) const = default;
};

// Whitespace-tokenized cleaned text. Tokens are non-empty, whitespace-free
// and lower-case; source_text records what was tokenized.
struct TokenizedText {
  std::vector<std::string> tokens;
  std::string source_text;
};

// Text cleaner. Construction precompiles an emoticon matcher from the KB
// emoticon map so per-post cleaning stays cheap; emoticons listed there are
// protected from non-ASCII and punctuation stripping.
class Cleaner {
 public:
  explicit Cleaner(EmoticonMap emoticons = {});

  // Applies, in order: (1) URL removal, (2) @mention removal, (3) '#'
  // stripping (tag word kept), (4) non-ASCII removal (protected emoticons
  // survive), (5) squashing runs of 3+ identical letters to 2, (6) ASCII
  // lower-casing, (7) punctuation -> space except intra-word apostrophes and
  // protected emoticons (padded with spaces), (8) whitespace collapse.
  // Idempotent: clean(clean(t)) == clean(t).
  std::string clean(std::string_view text) const;

 private:
  // Longest emoticon match at text[pos], honoring token-ish boundaries for
  // keys that begin or end with a letter/digit. Returns match length, 0 if none.
  std::size_t match_emoticon(std::string_view text, std::size_t pos, bool fold_case) const;

  EmoticonMap emoticons_;
  std::size_t max_key_len_ = 0;
};

// One-shot convenience over Cleaner.
std::string clean(std::string_view text, const EmoticonMap& emoticons = {});

// Splits on whitespace; tokens are maximal non-whitespace runs in order.
// Assumes text was already cleaned (no case folding happens here).
TokenizedText tokenize(std::string_view text);

// Porter-stems pure lower-case letter tokens; anything else (emoticons,
// apostrophe forms, sentinels) passes through unchanged.
std::string stem(std::string_view token);

// Order-preserving removal of tokens found in stoplist.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stoplist);

// Loads a stop-word list: UTF-8 plain text, one lower-case word per line.
std::unordered_set<std::string> load_stoplist(const std::string& path);

}  // namespace smfp
