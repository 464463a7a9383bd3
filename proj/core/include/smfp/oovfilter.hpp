#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "smfp/kb.hpp"
#include "smfp/normalize.hpp"

namespace smfp {

// Routing class for a token. Precedence on classification is total:
// emoticon > kbterm > word > oov. KB terms outrank dictionary words on
// purpose — a slang sense of an ordinary English word must still reach the
// disambiguator.
enum class TokenClass { word, kbterm, emoticon, oov };

const char* token_class_name(TokenClass klass);

struct ClassifiedToken {
  std::string token;
  TokenClass klass;
};

// The English dictionary used to split word from oov.
struct Wordlist {
  std::unordered_set<std::string> words;

  bool contains(const std::string& w) const { return words.count(w) != 0; }
  std::size_t size() const { return words.size(); }
};

// Loads a wordlist file: one lower-case word per line, no duplicates.
// Throws ValidationError on duplicates, embedded whitespace, or upper-case
// entries; IoError if unreadable.
Wordlist load_wordlist(const std::string& path);

// Classifies one lower-case token by the precedence above.
ClassifiedToken classify_token(const std::string& token, const KnowledgeBase& kb,
                               const Wordlist& wordlist);

// Element-wise classify_token over a tokenized post, order preserved.
std::vector<ClassifiedToken> classify_all(const TokenizedText& text, const KnowledgeBase& kb,
                                          const Wordlist& wordlist);

}  // namespace smfp
