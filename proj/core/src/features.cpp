#include "smfp/features.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "smfp/errors.hpp"
#include "smfp/version.hpp"
#include "strutil.hpp"

namespace smfp {

std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens, int n) {
  if (n <= 0) {
    throw InvalidArgument("n-gram size must be >= 1, got " + std::to_string(n));
  }
  const std::size_t width = static_cast<std::size_t>(n);
  std::vector<std::string> out;
  if (tokens.size() < width) return out;
  out.reserve(tokens.size() - width + 1);
  for (std::size_t i = 0; i + width <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (std::size_t j = 1; j < width; ++j) {
      gram += ' ';
      gram += tokens[i + j];
    }
    out.push_back(std::move(gram));
  }
  return out;
}

namespace {

std::string index_key(int n, const std::string& gram) {
  return std::to_string(n) + '\t' + gram;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<Entry> entries, std::map<int, std::size_t> k_per_n)
    : entries_(std::move(entries)), k_per_n_(std::move(k_per_n)) {
  std::set<int> ns;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    ns.insert(entries_[i].n);
    index_.emplace(index_key(entries_[i].n, entries_[i].gram), i);
  }
  n_sizes_.assign(ns.begin(), ns.end());
}

std::optional<std::size_t> Vocabulary::index_of(int n, const std::string& gram) const {
  const auto it = index_.find(index_key(n, gram));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocab(const std::vector<std::vector<std::string>>& corpus,
                       const std::vector<int>& n_sizes,
                       const std::map<int, std::size_t>& k_per_n) {
  std::vector<int> ns = n_sizes;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (int n : ns) {
    const auto it = k_per_n.find(n);
    if (it == k_per_n.end() || it->second == 0) {
      throw InvalidArgument("top-K must be positive for n=" + std::to_string(n));
    }
  }

  std::vector<Vocabulary::Entry> entries;
  for (int n : ns) {
    std::unordered_map<std::string, std::uint64_t> counts;
    for (const auto& doc : corpus) {
      for (auto& gram : extract_ngrams(doc, n)) {
        ++counts[gram];
      }
    }
    std::vector<std::pair<std::string, std::uint64_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    const std::size_t keep = std::min(ranked.size(), k_per_n.at(n));
    for (std::size_t i = 0; i < keep; ++i) {
      entries.push_back({n, std::move(ranked[i].first)});
    }
  }
  std::map<int, std::size_t> cutoffs;
  for (int n : ns) cutoffs[n] = k_per_n.at(n);
  return Vocabulary(std::move(entries), std::move(cutoffs));
}

FeatureVector vectorize(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
  std::set<std::size_t> active;
  for (int n : vocab.n_sizes()) {
    for (const auto& gram : extract_ngrams(tokens, n)) {
      const auto idx = vocab.index_of(n, gram);
      if (idx.has_value()) active.insert(*idx);
    }
  }
  FeatureVector out;
  out.indices.assign(active.begin(), active.end());
  out.dimension = vocab.size();
  return out;
}

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open file for writing: " + path);
  }
  for (std::size_t i = 0; i < vocab.entries().size(); ++i) {
    const auto& e = vocab.entries()[i];
    out << e.n << '\t' << e.gram << '\t' << i << '\n';
  }
  if (!out.good()) {
    throw IoError("write failure on file: " + path);
  }
}

Vocabulary load_vocabulary(const std::string& path) {
  const std::string content = read_file(path);
  std::vector<Vocabulary::Entry> entries;
  std::map<int, std::size_t> counts_per_n;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    std::string_view line(content.data() + pos,
                          (nl == std::string::npos ? content.size() : nl) - pos);
    ++line_no;
    line = detail::strip_cr(line);
    if (!line.empty()) {
      const std::size_t t1 = line.find('\t');
      const std::size_t t2 = (t1 == std::string_view::npos)
                                 ? std::string_view::npos
                                 : line.find('\t', t1 + 1);
      if (t1 == std::string_view::npos || t2 == std::string_view::npos) {
        throw ParseError(path + ": expected <n>\\t<gram>\\t<index>", line_no);
      }
      int n = 0;
      std::size_t index = 0;
      const std::string_view n_text = line.substr(0, t1);
      const std::string_view idx_text = line.substr(t2 + 1);
      const auto [p1, e1] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
      const auto [p2, e2] =
          std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), index);
      if (e1 != std::errc() || p1 != n_text.data() + n_text.size() || n <= 0 ||
          e2 != std::errc() || p2 != idx_text.data() + idx_text.size()) {
        throw ParseError(path + ": bad n or index field", line_no);
      }
      if (index != entries.size()) {
        throw ValidationError(path + ": indices must run 0..N-1 in order (line " +
                              std::to_string(line_no) + ")");
      }
      entries.push_back({n, std::string(line.substr(t1 + 1, t2 - t1 - 1))});
      ++counts_per_n[n];
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  // The original K cutoffs are not persisted; the selected column counts
  // stand in for them on reload.
  return Vocabulary(std::move(entries), std::move(counts_per_n));
}

}  // namespace smfp
