#include "smfp/dataio.hpp"

#include <fstream>

#include "json.hpp"
#include "smfp/errors.hpp"
#include "smfp/version.hpp"
#include "strutil.hpp"

namespace smfp {

using nlohmann::json;

namespace {

// Iterates non-blank JSONL lines, handing each parsed document to fn.
template <typename Fn>
void for_each_json_line(const std::string& path, Fn&& fn) {
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
      json doc;
      try {
        doc = json::parse(line);
      } catch (const json::exception& e) {
        throw ParseError(path + ": invalid JSON: " + e.what(), line_no);
      }
      fn(doc, line_no);
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
}

std::optional<int> read_optional_label(const json& doc, const std::string& path,
                                       std::size_t line_no) {
  if (!doc.contains("label")) return std::nullopt;
  const json& label = doc["label"];
  if (!label.is_number_integer() || (label.get<int>() != 0 && label.get<int>() != 1)) {
    throw ValidationError(path + ": label must be 0 or 1 (line " + std::to_string(line_no) +
                          ")");
  }
  return label.get<int>();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open file for writing: " + path);
  }
  return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
  if (!out.good()) {
    throw IoError("write failure on file: " + path);
  }
}

}  // namespace

void write_token_docs(const std::vector<TokenDoc>& docs, const std::string& path) {
  std::ofstream out = open_out(path);
  for (const TokenDoc& doc : docs) {
    json j;
    if (doc.label.has_value()) j["label"] = *doc.label;
    j["tokens"] = doc.tokens;
    out << j.dump() << '\n';
  }
  finish_out(out, path);
}

std::vector<TokenDoc> load_token_docs(const std::string& path) {
  std::vector<TokenDoc> docs;
  for_each_json_line(path, [&](const json& doc, std::size_t line_no) {
    if (!doc.is_object() || !doc.contains("tokens") || !doc["tokens"].is_array()) {
      throw ParseError(path + ": each line must carry a \"tokens\" array", line_no);
    }
    TokenDoc td;
    for (const json& t : doc["tokens"]) {
      if (!t.is_string()) {
        throw ParseError(path + ": tokens must be strings", line_no);
      }
      td.tokens.push_back(t.get<std::string>());
    }
    td.label = read_optional_label(doc, path, line_no);
    docs.push_back(std::move(td));
  });
  return docs;
}

void write_feature_file(const std::vector<FeatureVector>& vectors,
                        const std::vector<std::optional<int>>& labels,
                        std::size_t dimension, const std::string& path) {
  if (!labels.empty() && labels.size() != vectors.size()) {
    throw InvalidArgument("label count does not match vector count");
  }
  std::ofstream out = open_out(path);
  json header;
  header["dimension"] = dimension;
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    json j;
    if (!labels.empty() && labels[i].has_value()) j["label"] = *labels[i];
    j["indices"] = vectors[i].indices;
    out << j.dump() << '\n';
  }
  finish_out(out, path);
}

FeatureFile load_feature_file(const std::string& path) {
  FeatureFile file;
  bool saw_header = false;
  for_each_json_line(path, [&](const json& doc, std::size_t line_no) {
    if (!saw_header) {
      if (!doc.is_object() || !doc.contains("dimension") ||
          !doc["dimension"].is_number_unsigned()) {
        throw ParseError(path + ": first line must be the {\"dimension\": D} header", line_no);
      }
      file.dimension = doc["dimension"].get<std::size_t>();
      saw_header = true;
      return;
    }
    if (!doc.is_object() || !doc.contains("indices") || !doc["indices"].is_array()) {
      throw ParseError(path + ": each row must carry an \"indices\" array", line_no);
    }
    FeatureVector v;
    v.dimension = file.dimension;
    std::size_t prev = 0;
    bool first = true;
    for (const json& idx : doc["indices"]) {
      if (!idx.is_number_unsigned()) {
        throw ParseError(path + ": indices must be non-negative integers", line_no);
      }
      const std::size_t value = idx.get<std::size_t>();
      if (value >= file.dimension || (!first && value <= prev)) {
        throw ValidationError(path + ": indices must be strictly increasing and < dimension" +
                              " (line " + std::to_string(line_no) + ")");
      }
      v.indices.push_back(value);
      prev = value;
      first = false;
    }
    file.labels.push_back(read_optional_label(doc, path, line_no));
    file.vectors.push_back(std::move(v));
  });
  if (!saw_header) {
    throw ParseError(path + ": missing {\"dimension\": D} header", 1);
  }
  return file;
}

LabeledSet to_labeled_set(const FeatureFile& file) {
  LabeledSet set;
  set.dimension = file.dimension;
  set.vectors = file.vectors;
  set.labels.reserve(file.labels.size());
  for (std::size_t i = 0; i < file.labels.size(); ++i) {
    if (!file.labels[i].has_value()) {
      throw ValidationError("row " + std::to_string(i + 1) + " is unlabeled");
    }
    set.labels.push_back(*file.labels[i]);
  }
  return set;
}

}  // namespace smfp
