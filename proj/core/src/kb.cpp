#include "smfp/kb.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "json.hpp"
#include "smfp/errors.hpp"
#include "smfp/normalize.hpp"
#include "smfp/version.hpp"
#include "strutil.hpp"

namespace smfp {

using nlohmann::json;

std::string normalize_key(std::string_view term) {
  std::string out;
  out.reserve(term.size());
  for (char c : detail::trim(term)) {
    if (c == '.') continue;
    out.push_back(detail::ascii_lower_char(c));
  }
  const std::string_view trimmed = detail::trim(out);
  if (trimmed.empty()) {
    throw InvalidTerm("term is empty after normalization: \"" + std::string(term) + "\"");
  }
  return std::string(trimmed);
}

namespace {

// Parses one lexicon line that already survived json::parse.
LexiconEntry parse_entry(const json& doc, const std::string& path,
                         const std::string& source_name, std::size_t line_no) {
  if (!doc.is_object() || !doc.contains("term") || !doc["term"].is_string() ||
      !doc.contains("senses") || !doc["senses"].is_array()) {
    throw ParseError(path + ": lexicon line must be {\"term\": ..., \"senses\": [...]}",
                     line_no);
  }
  LexiconEntry entry;
  entry.term = doc["term"].get<std::string>();
  for (const json& s : doc["senses"]) {
    if (!s.is_object() || !s.contains("definition") || !s["definition"].is_string() ||
        !s.contains("usage") || !s["usage"].is_string()) {
      throw ParseError(path + ": sense must carry string \"definition\" and \"usage\"",
                       line_no);
    }
    Sense sense;
    sense.definition = s["definition"].get<std::string>();
    sense.usage = s["usage"].get<std::string>();
    if (s.contains("related")) {
      if (!s["related"].is_array()) {
        throw ParseError(path + ": \"related\" must be an array of strings", line_no);
      }
      for (const json& r : s["related"]) {
        if (!r.is_string()) {
          throw ParseError(path + ": \"related\" must be an array of strings", line_no);
        }
        sense.related.push_back(r.get<std::string>());
      }
    }
    if (detail::trim(sense.definition).empty() || detail::trim(sense.usage).empty()) {
      throw ValidationError(path + ": sense with empty definition or usage (line " +
                            std::to_string(line_no) + ")");
    }
    sense.source = source_name;
    sense.line = line_no;
    entry.senses.push_back(std::move(sense));
  }
  if (entry.senses.empty()) {
    throw ValidationError(path + ": entry \"" + entry.term + "\" has zero senses (line " +
                          std::to_string(line_no) + ")");
  }
  try {
    entry.key = normalize_key(entry.term);
  } catch (const InvalidTerm& e) {
    throw ValidationError(path + ": " + e.what() + " (line " + std::to_string(line_no) + ")");
  }
  return entry;
}

}  // namespace

std::vector<LexiconEntry> load_lexicon(const std::string& path,
                                       const std::string& source_name) {
  const std::string content = read_file(path);
  std::vector<LexiconEntry> entries;
  std::map<std::string, std::size_t> by_key;  // key -> index into entries

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    std::string_view line(content.data() + pos,
                          (nl == std::string::npos ? content.size() : nl) - pos);
    ++line_no;
    line = detail::strip_cr(line);
    if (!detail::trim(line).empty()) {
      json doc;
      try {
        doc = json::parse(line);
      } catch (const json::exception& e) {
        throw ParseError(path + ": invalid JSON: " + e.what(), line_no);
      }
      LexiconEntry entry = parse_entry(doc, path, source_name, line_no);
      const auto it = by_key.find(entry.key);
      if (it == by_key.end()) {
        by_key.emplace(entry.key, entries.size());
        entries.push_back(std::move(entry));
      } else {
        // Duplicate term within one file: senses concatenate in encounter order.
        auto& existing = entries[it->second].senses;
        std::move(entry.senses.begin(), entry.senses.end(), std::back_inserter(existing));
      }
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return entries;
}

EmoticonMap load_emoticons(const std::string& path) {
  const std::string content = read_file(path);
  EmoticonMap out;
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
        throw ParseError(path + ": expected <emoticon>\\t<meaning>", line_no);
      }
      const std::string key = detail::ascii_lower(detail::trim(line.substr(0, tab)));
      const std::string meaning{detail::trim(line.substr(tab + 1))};
      if (key.empty() || meaning.empty()) {
        throw ParseError(path + ": empty emoticon or meaning", line_no);
      }
      if (!out.emplace(key, meaning).second) {
        throw ValidationError(path + ": duplicate emoticon \"" + key + "\" (line " +
                              std::to_string(line_no) + ")");
      }
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

const LexiconEntry* KnowledgeBase::lookup(std::string_view token) const {
  std::string key;
  try {
    key = normalize_key(token);
  } catch (const InvalidTerm&) {
    return nullptr;  // nothing normalizes to nothing
  }
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

KnowledgeBase merge(std::vector<LexiconSource> sources, std::vector<std::string> precedence) {
  std::set<std::string> seen;
  for (const auto& src : sources) {
    if (!seen.insert(src.name).second) {
      throw ConfigError("duplicate source name: \"" + src.name + "\"");
    }
  }
  if (precedence.empty()) {
    for (const auto& src : sources) precedence.push_back(src.name);
  } else {
    std::set<std::string> listed(precedence.begin(), precedence.end());
    if (listed.size() != precedence.size()) {
      throw ConfigError("precedence lists a source name twice");
    }
    if (listed != seen) {
      throw ConfigError("precedence must name each source exactly once");
    }
  }

  std::map<std::string, LexiconEntry> entries;
  EmoticonMap emoticons;
  for (const auto& name : precedence) {
    const auto src = std::find_if(sources.begin(), sources.end(),
                                  [&](const LexiconSource& s) { return s.name == name; });
    for (const auto& entry : src->entries) {
      auto [it, inserted] = entries.emplace(entry.key, entry);
      if (inserted) {
        for (auto& s : it->second.senses) {
          if (s.source.empty()) s.source = name;
        }
      } else {
        for (const auto& s : entry.senses) {
          it->second.senses.push_back(s);
          if (it->second.senses.back().source.empty()) {
            it->second.senses.back().source = name;
          }
        }
      }
    }
    // Earlier precedence wins on emoticon conflicts: emplace never overwrites.
    for (const auto& [key, meaning] : src->emoticons) {
      emoticons.emplace(key, meaning);
    }
  }

  // Pre-tokenize usage examples once against the final emoticon map.
  const Cleaner cleaner{emoticons};
  for (auto& [key, entry] : entries) {
    (void)key;
    for (auto& sense : entry.senses) {
      sense.usage_tokens = tokenize(cleaner.clean(sense.usage)).tokens;
    }
  }
  return KnowledgeBase(std::move(entries), std::move(emoticons), std::move(precedence));
}

KnowledgeBase load_knowledge_base(const std::vector<std::string>& lexicon_specs,
                                  const std::string& emoticon_path) {
  std::vector<LexiconSource> sources;
  for (const auto& spec : lexicon_specs) {
    std::string name;
    std::string path;
    const std::size_t colon = spec.find(':');
    if (colon != std::string::npos && colon > 0) {
      name = spec.substr(0, colon);
      path = spec.substr(colon + 1);
    } else {
      path = spec;
      // Default source name: file stem.
      std::size_t slash = path.find_last_of("/\\");
      name = (slash == std::string::npos) ? path : path.substr(slash + 1);
      const std::size_t dot = name.find_last_of('.');
      if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    }
    LexiconSource src;
    src.name = name;
    src.entries = load_lexicon(path, name);
    sources.push_back(std::move(src));
  }
  if (!sources.empty() && !emoticon_path.empty()) {
    sources.front().emoticons = load_emoticons(emoticon_path);
  } else if (sources.empty() && !emoticon_path.empty()) {
    LexiconSource src;
    src.name = "emoticons";
    src.emoticons = load_emoticons(emoticon_path);
    sources.push_back(std::move(src));
  }
  return merge(std::move(sources));
}

}  // namespace smfp
