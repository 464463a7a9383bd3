#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace smfp {

// All contiguous n-grams of the token list, in order, each rendered as the
// window's tokens joined by single spaces. Empty if fewer than n tokens.
// Throws InvalidArgument when n == 0.
std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens, int n);

// Top-K n-gram vocabulary mapping grams to dense column indices.
//
// Selection per n: count gram frequencies over the corpus, keep the K most
// frequent (ties broken lexicographically ascending), then assign indices
// block by block in ascending n, selection order within a block. Index
// blocks therefore concatenate: all unigram columns first, then bigrams, and
// so on.
class Vocabulary {
 public:
  struct Entry {
    int n = 0;
    std::string gram;
  };

  Vocabulary() = default;
  Vocabulary(std::vector<Entry> entries, std::map<int, std::size_t> k_per_n);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<int>& n_sizes() const { return n_sizes_; }
  const std::map<int, std::size_t>& k_per_n() const { return k_per_n_; }

  std::optional<std::size_t> index_of(int n, const std::string& gram) const;

 private:
  std::vector<Entry> entries_;
  std::vector<int> n_sizes_;
  std::map<int, std::size_t> k_per_n_;
  std::unordered_map<std::string, std::size_t> index_;  // "<n>\t<gram>" -> column
};

// Builds the vocabulary over a corpus of token lists. k_per_n must assign a
// positive K to every n in n_sizes (InvalidArgument otherwise). An empty
// corpus yields an empty vocabulary. Counting is order-free, so permuting
// documents cannot change the result.
Vocabulary build_vocab(const std::vector<std::vector<std::string>>& corpus,
                       const std::vector<int>& n_sizes,
                       const std::map<int, std::size_t>& k_per_n);

// Sparse binary presence vector: indices strictly increasing, all < dimension.
struct FeatureVector {
  std::vector<std::size_t> indices;
  std::size_t dimension = 0;

  bool operator==(const FeatureVector&) const = default;
};

// Index i is active iff vocabulary gram i occurs at least once among the
// token list's n-grams for its n. Monotone: adding tokens never clears a bit.
FeatureVector vectorize(const std::vector<std::string>& tokens, const Vocabulary& vocab);

// TSV persistence: one `<n>\t<gram>\t<index>` line per column, index order.
void save_vocabulary(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocabulary(const std::string& path);

}  // namespace smfp
