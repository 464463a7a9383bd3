#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smfp/normalize.hpp"

namespace smfp {

enum class CorpusFormat { csv, jsonl };

// "csv" / "jsonl" -> enum; anything else throws ConfigError.
CorpusFormat parse_format(std::string_view name);
const char* format_name(CorpusFormat format);

struct CorpusOrigin {
  std::string path;
  CorpusFormat format = CorpusFormat::jsonl;
  std::uint64_t checksum = 0;  // FNV-1a of the raw file bytes
};

// An ordered collection of posts. Order equals file order — systematic
// sampling depends on it.
struct Corpus {
  std::vector<RawPost> posts;
  CorpusOrigin origin;
};

// Loads a corpus file.
//
// CSV: required header `label,text`, RFC-style quoting (embedded commas,
// quotes and newlines inside double-quoted fields; "" escapes a quote). An
// empty label field means unlabeled.
//
// JSONL: one {"label":0|1,"text":"..."} object per line; "label" optional.
//
// Throws ParseError with the record number for structural problems and
// ValidationError for labels outside {0,1}.
Corpus load_corpus(const std::string& path, CorpusFormat format);

// Writes a corpus losslessly: load_corpus(write_corpus(c)) == c, including
// label presence/absence and post order. CSV text fields are always quoted.
void write_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format);

}  // namespace smfp
