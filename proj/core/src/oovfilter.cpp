#include "smfp/oovfilter.hpp"

#include "smfp/errors.hpp"
#include "smfp/version.hpp"
#include "strutil.hpp"

namespace smfp {

const char* token_class_name(TokenClass klass) {
  switch (klass) {
    case TokenClass::word:
      return "word";
    case TokenClass::kbterm:
      return "kbterm";
    case TokenClass::emoticon:
      return "emoticon";
    case TokenClass::oov:
      return "oov";
  }
  return "oov";
}

Wordlist load_wordlist(const std::string& path) {
  const std::string content = read_file(path);
  Wordlist out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    std::string_view line(content.data() + pos,
                          (nl == std::string::npos ? content.size() : nl) - pos);
    ++line_no;
    line = detail::strip_cr(line);
    if (!line.empty()) {
      std::string word(line);
      for (char c : word) {
        if (c >= 'A' && c <= 'Z') {
          throw ValidationError(path + ": wordlist entries must be lower-case (line " +
                                std::to_string(line_no) + ")");
        }
        if (detail::is_space(c)) {
          throw ValidationError(path + ": wordlist entry contains whitespace (line " +
                                std::to_string(line_no) + ")");
        }
      }
      if (!out.words.insert(std::move(word)).second) {
        throw ValidationError(path + ": duplicate wordlist entry (line " +
                              std::to_string(line_no) + ")");
      }
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

ClassifiedToken classify_token(const std::string& token, const KnowledgeBase& kb,
                               const Wordlist& wordlist) {
  if (kb.has_emoticon(token)) {
    return {token, TokenClass::emoticon};
  }
  if (kb.lookup(token) != nullptr) {
    return {token, TokenClass::kbterm};
  }
  if (wordlist.contains(token)) {
    return {token, TokenClass::word};
  }
  return {token, TokenClass::oov};
}

std::vector<ClassifiedToken> classify_all(const TokenizedText& text, const KnowledgeBase& kb,
                                          const Wordlist& wordlist) {
  std::vector<ClassifiedToken> out;
  out.reserve(text.tokens.size());
  for (const auto& t : text.tokens) {
    out.push_back(classify_token(t, kb, wordlist));
  }
  return out;
}

}  // namespace smfp
