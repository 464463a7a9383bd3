#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "smfp/kb.hpp"
#include "smfp/lesk.hpp"
#include "smfp/normalize.hpp"
#include "smfp/oovfilter.hpp"

namespace smfp {

// Word -> corpus count, used to rank spelling-correction candidates.
using FrequencyTable = std::unordered_map<std::string, std::uint64_t>;

// Loads a frequency TSV (<word>\t<count> per line).
FrequencyTable load_frequencies(const std::string& path);

// Slang term -> polarity (+1 / -1) for the baseline's one-line slang
// classifier. Keys are normalized like KB keys.
using PolarityLexicon = std::unordered_map<std::string, int>;

// Loads a polarity TSV (<term>\t<+1|-1> per line).
PolarityLexicon load_polarity(const std::string& path);

// One applied rewrite, replayable: at `position` in the then-current token
// sequence, token `before` was replaced by the tokens in `after` (possibly
// empty, possibly several).
enum class EditKind { kb_substitution, spellfix, emoticon };

const char* edit_kind_name(EditKind kind);

struct TraceEdit {
  EditKind kind;
  std::size_t position = 0;
  std::string before;
  std::vector<std::string> after;
};

// Result of enriching one post. tokens is the post-substitution,
// pre-stemming sequence; stemmed is the final pipeline output. Replaying
// trace over the original cleaned tokens reproduces tokens exactly (see
// replay_trace).
struct EnrichedPost {
  std::vector<std::string> tokens;
  std::vector<TraceEdit> trace;
  std::vector<std::string> stemmed;
};

// Applies a recorded trace to a token sequence. Throws ValidationError if an
// edit does not line up (position out of range or `before` mismatch).
std::vector<std::string> replay_trace(std::vector<std::string> tokens,
                                      const std::vector<TraceEdit>& trace);

// Replaces each kbterm token by the cleaned, tokenized words of its chosen
// definition, left to right. disambiguations must come from these tokens in
// order (as produced by disambiguate_all); pairing is by matching term text.
// Surrounding token order is preserved. Optionally records trace edits.
std::vector<std::string> substitute_definitions(const std::vector<std::string>& tokens,
                                                const std::vector<Disambiguation>& disambiguations,
                                                const EmoticonMap& emoticons = {},
                                                std::vector<TraceEdit>* trace = nullptr);

// Noisy-channel spelling correction. In-dictionary tokens come back
// unchanged; otherwise the highest-frequency dictionary word at edit
// distance 1 wins, then distance 2, then the token itself. Candidate edits
// are deletes/transposes/replaces/inserts over ASCII letters; frequency ties
// break lexicographically.
std::string spell_correct(const std::string& token, const Wordlist& wordlist,
                          const FrequencyTable& freq);

// Replaces every token exactly matching a KB emoticon key by the tokenized
// meaning text. Optionally records trace edits.
std::vector<std::string> replace_emoticons(const std::vector<std::string>& tokens,
                                           const KnowledgeBase& kb,
                                           std::vector<TraceEdit>* trace = nullptr);

enum class EnrichMode { smfp, baseline };

const char* enrich_mode_name(EnrichMode mode);

// Runs the whole enrichment for one post.
//
// smfp mode: clean -> tokenize -> classify -> disambiguate (against the
// original tokens) -> substitute definitions -> spell-correct surviving oov
// tokens -> replace emoticons -> stem.
//
// baseline mode: clean (no emoticon protection) -> tokenize -> optional
// slang-polarity substitution (kbterm -> "slang_pos"/"slang_neg" when the
// term is listed; kept verbatim otherwise) -> stem. No disambiguation, no
// spell-check, no emoticon meanings.
EnrichedPost enrich_post(const RawPost& raw, const KnowledgeBase& kb, const Wordlist& wordlist,
                         const FrequencyTable& freq, EnrichMode mode,
                         const PolarityLexicon* polarity = nullptr);

}  // namespace smfp
