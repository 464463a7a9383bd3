#include "smfp/lesk.hpp"

#include <unordered_set>

#include "smfp/errors.hpp"
#include "smfp/normalize.hpp"

namespace smfp {

int relatedness(const std::vector<std::string>& context_tokens,
                const std::vector<std::string>& usage_tokens) {
  const std::unordered_set<std::string> context(context_tokens.begin(), context_tokens.end());
  std::unordered_set<std::string> counted;
  int overlap = 0;
  for (const auto& t : usage_tokens) {
    if (context.count(t) != 0 && counted.insert(t).second) {
      ++overlap;
    }
  }
  return overlap;
}

Disambiguation disambiguate_term(const std::string& term,
                                 const std::vector<std::string>& post_tokens,
                                 const LexiconEntry& entry, const EmoticonMap& emoticons) {
  if (entry.senses.empty()) {
    throw EmptySenses("entry \"" + entry.term + "\" has no senses");
  }
  Disambiguation out;
  out.term = term;
  out.scores.reserve(entry.senses.size());

  int best = -1;
  for (std::size_t i = 0; i < entry.senses.size(); ++i) {
    const Sense& sense = entry.senses[i];
    int overlap = 0;
    if (!sense.usage_tokens.empty()) {
      overlap = relatedness(post_tokens, sense.usage_tokens);
    } else {
      overlap = relatedness(post_tokens, tokenize(clean(sense.usage, emoticons)).tokens);
    }
    out.scores.push_back({static_cast<int>(i), overlap});
    if (overlap > best) {
      best = overlap;
      out.chosen = static_cast<int>(i);
    }
  }
  out.definition = entry.senses[static_cast<std::size_t>(out.chosen)].definition;
  out.confident = best > 0;
  return out;
}

std::vector<Disambiguation> disambiguate_all(const std::vector<ClassifiedToken>& classified,
                                             const KnowledgeBase& kb) {
  std::vector<std::string> post_tokens;
  post_tokens.reserve(classified.size());
  for (const auto& ct : classified) {
    post_tokens.push_back(ct.token);
  }

  std::vector<Disambiguation> out;
  for (const auto& ct : classified) {
    if (ct.klass != TokenClass::kbterm) continue;
    const LexiconEntry* entry = kb.lookup(ct.token);
    if (entry == nullptr) continue;  // classification guarantees a hit
    out.push_back(disambiguate_term(ct.token, post_tokens, *entry, kb.emoticons()));
  }
  return out;
}

}  // namespace smfp
