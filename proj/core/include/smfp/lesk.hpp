#pragma once

#include <string>
#include <vector>

#include "smfp/kb.hpp"
#include "smfp/oovfilter.hpp"

namespace smfp {

// Overlap score of one sense: |unique-token-set(post) ∩ unique-token-set(usage)|.
struct SenseScore {
  int sense_index = 0;
  int overlap = 0;
};

// Outcome of disambiguating one term occurrence. chosen is the smallest
// sense index attaining the maximum overlap; confident is false when every
// sense scored zero (the first sense then stands in as a fallback and is
// still substituted downstream, where consumers may filter on the flag).
struct Disambiguation {
  std::string term;
  int chosen = 0;
  std::string definition;
  std::vector<SenseScore> scores;
  bool confident = false;
};

// Number of distinct token types the two lists share. Symmetric; duplicate
// tokens never inflate the count; the term under disambiguation is not
// excluded from matching.
int relatedness(const std::vector<std::string>& context_tokens,
                const std::vector<std::string>& usage_tokens);

// Scores every sense of entry against the post and picks the argmax
// (smallest index on ties). post_tokens must be the cleaned tokens of the
// whole post. Senses carrying precomputed usage tokens use them; otherwise
// usage text is cleaned here with the given emoticon map. Throws EmptySenses
// if entry has no senses.
Disambiguation disambiguate_term(const std::string& term,
                                 const std::vector<std::string>& post_tokens,
                                 const LexiconEntry& entry,
                                 const EmoticonMap& emoticons = {});

// One Disambiguation per kbterm token, in token order, each computed against
// the ORIGINAL full token list (never against partially substituted text).
// Identical kbterm occurrences therefore yield identical results.
std::vector<Disambiguation> disambiguate_all(const std::vector<ClassifiedToken>& classified,
                                             const KnowledgeBase& kb);

}  // namespace smfp
