#include "smfp/normalize.hpp"

#include <regex>

#include "smfp/errors.hpp"
#include "smfp/porter.hpp"
#include "smfp/version.hpp"
#include "strutil.hpp"

namespace smfp {

using detail::ascii_lower_char;
using detail::is_ascii_alnum;
using detail::is_ascii_letter;
using detail::is_space;

Cleaner::Cleaner(EmoticonMap emoticons) : emoticons_(std::move(emoticons)) {
  for (const auto& [key, meaning] : emoticons_) {
    (void)meaning;
    if (key.size() > max_key_len_) max_key_len_ = key.size();
  }
}

std::size_t Cleaner::match_emoticon(std::string_view text, std::size_t pos,
                                    bool fold_case) const {
  if (emoticons_.empty()) return 0;
  const std::size_t room = text.size() - pos;
  const std::size_t cap = room < max_key_len_ ? room : max_key_len_;
  for (std::size_t len = cap; len >= 1; --len) {
    std::string candidate(text.substr(pos, len));
    if (fold_case) candidate = detail::ascii_lower(candidate);
    const auto it = emoticons_.find(candidate);
    if (it == emoticons_.end()) continue;
    // Keys that start or end in a letter/digit ("xd") must sit on a token
    // boundary, or they would fire inside ordinary words.
    if (is_ascii_alnum(candidate.front()) && pos > 0 && is_ascii_alnum(text[pos - 1])) {
      continue;
    }
    if (is_ascii_alnum(candidate.back()) && pos + len < text.size() &&
        is_ascii_alnum(text[pos + len])) {
      continue;
    }
    return len;
  }
  return 0;
}

std::string Cleaner::clean(std::string_view text) const {
  // (1) URLs, (2) @mentions, (3) '#' marks. std::regex works on std::string.
  static const std::regex url_re(R"((\bhttps?://\S+)|(\bwww\.\S+))", std::regex::icase);
  static const std::regex mention_re(R"(@[A-Za-z0-9_]+)");
  std::string s = std::regex_replace(std::string(text), url_re, "");
  s = std::regex_replace(s, mention_re, "");
  std::string no_hash;
  no_hash.reserve(s.size());
  for (char c : s) {
    if (c != '#') no_hash.push_back(c);
  }

  // (4) Drop non-ASCII bytes, preserving any KB-listed emoticon sequences.
  std::string ascii_only;
  ascii_only.reserve(no_hash.size());
  for (std::size_t i = 0; i < no_hash.size();) {
    const std::size_t len = match_emoticon(no_hash, i, /*fold_case=*/true);
    if (len > 0) {
      ascii_only.append(no_hash, i, len);
      i += len;
      continue;
    }
    if (static_cast<unsigned char>(no_hash[i]) < 0x80) {
      ascii_only.push_back(no_hash[i]);
    }
    ++i;
  }

  // (5) Squash runs of >= 3 identical letters down to 2. Case-insensitive so
  // the post-lower-case text cannot re-grow a run ("SSSs" -> "SS" -> "ss").
  std::string squashed;
  squashed.reserve(ascii_only.size());
  std::size_t run = 0;
  for (std::size_t i = 0; i < ascii_only.size(); ++i) {
    const char c = ascii_only[i];
    if (i > 0 && is_ascii_letter(c) &&
        ascii_lower_char(c) == ascii_lower_char(ascii_only[i - 1])) {
      ++run;
    } else {
      run = 1;
    }
    if (run <= 2 || !is_ascii_letter(c)) {
      squashed.push_back(c);
    }
  }

  // (6) Lower-case.
  std::string lowered = detail::ascii_lower(squashed);

  // (7) Punctuation -> single spaces, keeping letters, digits, intra-word
  // apostrophes and protected emoticons (padded with spaces so they always
  // tokenize on their own).
  std::string spaced;
  spaced.reserve(lowered.size() + 8);
  for (std::size_t i = 0; i < lowered.size();) {
    const std::size_t len = match_emoticon(lowered, i, /*fold_case=*/false);
    if (len > 0) {
      spaced.push_back(' ');
      spaced.append(lowered, i, len);
      spaced.push_back(' ');
      i += len;
      continue;
    }
    const char c = lowered[i];
    if (is_ascii_alnum(c)) {
      spaced.push_back(c);
    } else if (c == '\'' && !spaced.empty() && is_ascii_letter(spaced.back()) &&
               i + 1 < lowered.size() && is_ascii_letter(lowered[i + 1]) &&
               match_emoticon(lowered, i + 1, /*fold_case=*/false) == 0) {
      // Intra-word judged against the emitted text: emoticon padding inserts
      // spaces, and an apostrophe orphaned by one must dissolve now or a
      // second cleaning pass would see (and drop) a dangling quote.
      spaced.push_back(c);
    } else {
      spaced.push_back(' ');
    }
    ++i;
  }

  // (8) Collapse whitespace runs and trim.
  std::string out;
  out.reserve(spaced.size());
  bool pending_space = false;
  for (char c : spaced) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

std::string clean(std::string_view text, const EmoticonMap& emoticons) {
  return Cleaner(emoticons).clean(text);
}

TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  out.source_text.assign(text);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) {
      out.tokens.emplace_back(text.substr(start, i - start));
    }
  }
  return out;
}

std::string stem(std::string_view token) {
  if (token.empty()) return std::string(token);
  for (char c : token) {
    if (c < 'a' || c > 'z') return std::string(token);
  }
  return porter_stem(token);
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stoplist) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (stoplist.count(t) == 0) out.push_back(t);
  }
  return out;
}

std::unordered_set<std::string> load_stoplist(const std::string& path) {
  const std::string content = read_file(path);
  std::unordered_set<std::string> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    std::string_view line(content.data() + pos,
                          (nl == std::string::npos ? content.size() : nl) - pos);
    ++line_no;
    line = detail::trim(detail::strip_cr(line));
    if (!line.empty()) {
      out.emplace(line);
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace smfp
