#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smfp/learn.hpp"

namespace smfp {

// Intermediate file formats connecting the CLI stages.
//
// Token documents (enrich output / featurize input): JSON Lines, one
// {"tokens": ["...", ...]} object per line, plus "label" when known.
//
// Feature sets (featurize output / train & eval input): JSON Lines whose
// first line is a {"dimension": D} header, followed by one
// {"indices": [...], "label": 0|1?} object per vector.

struct TokenDoc {
  std::vector<std::string> tokens;
  std::optional<int> label;
};

void write_token_docs(const std::vector<TokenDoc>& docs, const std::string& path);
std::vector<TokenDoc> load_token_docs(const std::string& path);

void write_feature_file(const std::vector<FeatureVector>& vectors,
                        const std::vector<std::optional<int>>& labels,
                        std::size_t dimension, const std::string& path);

struct FeatureFile {
  std::vector<FeatureVector> vectors;
  std::vector<std::optional<int>> labels;
  std::size_t dimension = 0;
};

FeatureFile load_feature_file(const std::string& path);

// Feature file -> LabeledSet; throws ValidationError if any row is unlabeled.
LabeledSet to_labeled_set(const FeatureFile& file);

}  // namespace smfp
