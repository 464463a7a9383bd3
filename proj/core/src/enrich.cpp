#include "smfp/enrich.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "smfp/errors.hpp"
#include "smfp/version.hpp"
#include "strutil.hpp"

namespace smfp {

namespace {

// Shared TSV walker: calls fn(key_field, value_field, line_no) per line.
template <typename Fn>
void for_each_tsv_line(const std::string& path, Fn&& fn) {
  const std::string content = read_file(path);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    std::string_view line(content.data() + pos,
                          (nl == std::string::npos ? content.size() : nl) - pos);
    ++line_no;
    line = detail::strip_cr(line);
    if (!detail::trim(line).empty()) {
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos) {
        throw ParseError(path + ": expected two tab-separated fields", line_no);
      }
      fn(detail::trim(line.substr(0, tab)), detail::trim(line.substr(tab + 1)), line_no);
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
}

}  // namespace

FrequencyTable load_frequencies(const std::string& path) {
  FrequencyTable out;
  for_each_tsv_line(path, [&](std::string_view word, std::string_view count_text,
                              std::size_t line_no) {
    std::uint64_t count = 0;
    const auto [ptr, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size()) {
      throw ParseError(path + ": count is not a non-negative integer", line_no);
    }
    if (!out.emplace(std::string(word), count).second) {
      throw ValidationError(path + ": duplicate word \"" + std::string(word) + "\" (line " +
                            std::to_string(line_no) + ")");
    }
  });
  return out;
}

PolarityLexicon load_polarity(const std::string& path) {
  PolarityLexicon out;
  for_each_tsv_line(path, [&](std::string_view term, std::string_view value,
                              std::size_t line_no) {
    int polarity = 0;
    if (value == "+1" || value == "1") {
      polarity = 1;
    } else if (value == "-1") {
      polarity = -1;
    } else {
      throw ParseError(path + ": polarity must be +1 or -1", line_no);
    }
    std::string key;
    try {
      key = normalize_key(term);
    } catch (const InvalidTerm& e) {
      throw ValidationError(path + ": " + e.what() + " (line " + std::to_string(line_no) + ")");
    }
    if (!out.emplace(std::move(key), polarity).second) {
      throw ValidationError(path + ": duplicate term (line " + std::to_string(line_no) + ")");
    }
  });
  return out;
}

const char* edit_kind_name(EditKind kind) {
  switch (kind) {
    case EditKind::kb_substitution:
      return "kb-substitution";
    case EditKind::spellfix:
      return "spellfix";
    case EditKind::emoticon:
      return "emoticon";
  }
  return "kb-substitution";
}

const char* enrich_mode_name(EnrichMode mode) {
  return mode == EnrichMode::smfp ? "smfp" : "baseline";
}

std::vector<std::string> replay_trace(std::vector<std::string> tokens,
                                      const std::vector<TraceEdit>& trace) {
  for (const auto& edit : trace) {
    if (edit.position >= tokens.size() || tokens[edit.position] != edit.before) {
      throw ValidationError("trace does not line up with tokens at position " +
                            std::to_string(edit.position));
    }
    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(edit.position));
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(edit.position),
                  edit.after.begin(), edit.after.end());
  }
  return tokens;
}

namespace {

// Splices `replacement` over position `pos`, recording the edit. Returns how
// many tokens now stand where one stood before.
std::size_t apply_edit(std::vector<std::string>& tokens, std::size_t pos, EditKind kind,
                       std::vector<std::string> replacement, std::vector<TraceEdit>* trace) {
  if (trace != nullptr) {
    trace->push_back({kind, pos, tokens[pos], replacement});
  }
  tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(pos));
  tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                replacement.begin(), replacement.end());
  return replacement.size();
}

}  // namespace

std::vector<std::string> substitute_definitions(const std::vector<std::string>& tokens,
                                                const std::vector<Disambiguation>& disambiguations,
                                                const EmoticonMap& emoticons,
                                                std::vector<TraceEdit>* trace) {
  std::vector<std::string> out = tokens;
  std::size_t next = 0;  // next pending disambiguation
  const Cleaner cleaner{emoticons};
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (next < disambiguations.size() && out[pos] == disambiguations[next].term) {
      const auto def_tokens = tokenize(cleaner.clean(disambiguations[next].definition)).tokens;
      const std::size_t advanced =
          apply_edit(out, pos, EditKind::kb_substitution, def_tokens, trace);
      pos += advanced;
      ++next;
    } else {
      ++pos;
    }
  }
  return out;
}

namespace {

// All strings one edit away from token: deletes, adjacent transposes,
// replaces and inserts over the lower-case ASCII alphabet.
std::vector<std::string> edits1(const std::string& token) {
  static const char* kAlphabet = "abcdefghijklmnopqrstuvwxyz";
  std::vector<std::string> out;
  const std::size_t n = token.size();
  out.reserve(n * 54 + 26);
  for (std::size_t i = 0; i < n; ++i) {  // deletes
    out.push_back(token.substr(0, i) + token.substr(i + 1));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {  // transposes
    std::string t = token;
    std::swap(t[i], t[i + 1]);
    out.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < n; ++i) {  // replaces
    for (const char* a = kAlphabet; *a != '\0'; ++a) {
      if (token[i] == *a) continue;
      std::string t = token;
      t[i] = *a;
      out.push_back(std::move(t));
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {  // inserts
    for (const char* a = kAlphabet; *a != '\0'; ++a) {
      out.push_back(token.substr(0, i) + *a + token.substr(i));
    }
  }
  return out;
}

// Highest-frequency candidate; ties break lexicographically. Unlisted
// dictionary words count as frequency zero.
std::string pick_best(const std::vector<std::string>& candidates, const FrequencyTable& freq) {
  const std::string* best = nullptr;
  std::uint64_t best_count = 0;
  for (const auto& c : candidates) {
    const auto it = freq.find(c);
    const std::uint64_t count = (it == freq.end()) ? 0 : it->second;
    if (best == nullptr || count > best_count || (count == best_count && c < *best)) {
      best = &c;
      best_count = count;
    }
  }
  return *best;
}

}  // namespace

std::string spell_correct(const std::string& token, const Wordlist& wordlist,
                          const FrequencyTable& freq) {
  if (token.empty() || wordlist.contains(token)) {
    return token;
  }
  const std::vector<std::string> first = edits1(token);

  std::unordered_set<std::string> seen;
  std::vector<std::string> candidates;
  for (const auto& e : first) {
    if (wordlist.contains(e) && seen.insert(e).second) {
      candidates.push_back(e);
    }
  }
  if (!candidates.empty()) {
    return pick_best(candidates, freq);
  }

  seen.clear();
  for (const auto& e1 : first) {
    for (const auto& e2 : edits1(e1)) {
      if (wordlist.contains(e2) && seen.insert(e2).second) {
        candidates.push_back(e2);
      }
    }
  }
  if (!candidates.empty()) {
    return pick_best(candidates, freq);
  }
  return token;
}

std::vector<std::string> replace_emoticons(const std::vector<std::string>& tokens,
                                           const KnowledgeBase& kb,
                                           std::vector<TraceEdit>* trace) {
  std::vector<std::string> out = tokens;
  std::size_t pos = 0;
  while (pos < out.size()) {
    const auto it = kb.emoticons().find(out[pos]);
    if (it == kb.emoticons().end()) {
      ++pos;
      continue;
    }
    const auto meaning_tokens = tokenize(detail::ascii_lower(it->second)).tokens;
    pos += apply_edit(out, pos, EditKind::emoticon, meaning_tokens, trace);
  }
  return out;
}

EnrichedPost enrich_post(const RawPost& raw, const KnowledgeBase& kb, const Wordlist& wordlist,
                         const FrequencyTable& freq, EnrichMode mode,
                         const PolarityLexicon* polarity) {
  EnrichedPost out;

  if (mode == EnrichMode::baseline) {
    // The generic pipeline strips punctuation with no emoticon awareness.
    out.tokens = tokenize(clean(raw.text)).tokens;
    if (polarity != nullptr) {
      TokenizedText tt;
      tt.tokens = out.tokens;
      const auto classified = classify_all(tt, kb, wordlist);
      for (std::size_t pos = 0; pos < out.tokens.size(); ++pos) {
        if (classified[pos].klass != TokenClass::kbterm) continue;
        const auto it = polarity->find(normalize_key(out.tokens[pos]));
        if (it == polarity->end()) continue;  // unlisted slang stays verbatim
        const std::string sentinel = it->second > 0 ? "slang_pos" : "slang_neg";
        apply_edit(out.tokens, pos, EditKind::kb_substitution, {sentinel}, &out.trace);
      }
    }
  } else {
    const Cleaner cleaner{kb.emoticons()};
    const TokenizedText toks = tokenize(cleaner.clean(raw.text));
    const auto classified = classify_all(toks, kb, wordlist);
    const auto disambiguations = disambiguate_all(classified, kb);

    out.tokens = toks.tokens;
    // Parallel class tags; substituted-in words get TokenClass::word so the
    // later stages leave them alone (definition words are trusted spellings).
    std::vector<TokenClass> klass;
    klass.reserve(classified.size());
    for (const auto& ct : classified) klass.push_back(ct.klass);

    // Splices `replacement` over `pos` in tokens and klass together, tagging
    // the inserted tokens as plain words. Returns the next position to look at.
    const auto splice = [&](std::size_t pos, EditKind kind,
                            const std::vector<std::string>& replacement) {
      apply_edit(out.tokens, pos, kind, replacement, &out.trace);
      klass.erase(klass.begin() + static_cast<std::ptrdiff_t>(pos));
      klass.insert(klass.begin() + static_cast<std::ptrdiff_t>(pos), replacement.size(),
                   TokenClass::word);
      return pos + replacement.size();
    };

    std::size_t next = 0;
    std::size_t pos = 0;
    while (pos < out.tokens.size()) {
      if (klass[pos] == TokenClass::kbterm) {
        const auto def_tokens =
            tokenize(cleaner.clean(disambiguations[next].definition)).tokens;
        ++next;
        pos = splice(pos, EditKind::kb_substitution, def_tokens);
      } else {
        ++pos;
      }
    }

    for (pos = 0; pos < out.tokens.size(); ++pos) {
      if (klass[pos] != TokenClass::oov) continue;
      const std::string fixed = spell_correct(out.tokens[pos], wordlist, freq);
      if (fixed != out.tokens[pos]) {
        apply_edit(out.tokens, pos, EditKind::spellfix, {fixed}, &out.trace);
        klass[pos] = TokenClass::word;
      }
    }

    pos = 0;
    while (pos < out.tokens.size()) {
      if (klass[pos] == TokenClass::emoticon) {
        const auto it = kb.emoticons().find(out.tokens[pos]);
        std::vector<std::string> meaning_tokens;
        if (it != kb.emoticons().end()) {
          meaning_tokens = tokenize(detail::ascii_lower(it->second)).tokens;
        }
        pos = splice(pos, EditKind::emoticon, meaning_tokens);
      } else {
        ++pos;
      }
    }
  }

  out.stemmed.reserve(out.tokens.size());
  for (const auto& t : out.tokens) {
    out.stemmed.push_back(stem(t));
  }
  return out;
}

}  // namespace smfp
