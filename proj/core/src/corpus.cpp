#include "smfp/corpus.hpp"

#include <fstream>

#include "json.hpp"
#include "smfp/errors.hpp"
#include "smfp/version.hpp"
#include "strutil.hpp"

namespace smfp {

using nlohmann::json;

CorpusFormat parse_format(std::string_view name) {
  if (name == "csv") return CorpusFormat::csv;
  if (name == "jsonl") return CorpusFormat::jsonl;
  throw ConfigError("unknown corpus format \"" + std::string(name) + "\" (csv or jsonl)");
}

const char* format_name(CorpusFormat format) {
  return format == CorpusFormat::csv ? "csv" : "jsonl";
}

namespace {

std::optional<int> parse_label_field(std::string_view field, const std::string& path,
                                     std::size_t record) {
  if (field.empty()) return std::nullopt;
  if (field == "0") return 0;
  if (field == "1") return 1;
  throw ValidationError(path + ": label must be 0 or 1, got \"" + std::string(field) +
                        "\" (record " + std::to_string(record) + ")");
}

// RFC-style CSV reader specialized to two fields per record. Returns records
// as raw field pairs; quoted fields may contain commas, quotes and newlines.
std::vector<std::pair<std::string, std::string>> read_csv_records(const std::string& content,
                                                                  const std::string& path) {
  std::vector<std::pair<std::string, std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t record_no = 0;  // 0 = header

  const auto end_field = [&]() {
    fields.push_back(field);
    field.clear();
    field_was_quoted = false;
  };
  const auto end_record = [&]() {
    end_field();
    if (fields.size() == 1 && fields[0].empty()) {
      fields.clear();  // blank line, e.g. the trailing newline
      return;
    }
    if (fields.size() != 2) {
      throw ParseError(path + ": expected 2 fields, got " + std::to_string(fields.size()),
                       record_no);
    }
    records.emplace_back(std::move(fields[0]), std::move(fields[1]));
    fields.clear();
    ++record_no;
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw ParseError(path + ": quote in the middle of an unquoted field", record_no);
        }
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < content.size() && content[i + 1] == '\n') break;  // CRLF: handled at \n
        field.push_back(c);
        break;
      case '\n':
        end_record();
        break;
      default:
        if (field_was_quoted) {
          throw ParseError(path + ": text after a closing quote", record_no);
        }
        field.push_back(c);
    }
  }
  if (in_quotes) {
    throw ParseError(path + ": unterminated quoted field", record_no);
  }
  if (!field.empty() || !fields.empty()) {
    end_record();  // final record without trailing newline
  }
  return records;
}

}  // namespace

Corpus load_corpus(const std::string& path, CorpusFormat format) {
  const std::string content = read_file(path);
  Corpus out;
  out.origin.path = path;
  out.origin.format = format;
  out.origin.checksum = fnv1a64(content);

  if (format == CorpusFormat::csv) {
    const auto records = read_csv_records(content, path);
    if (records.empty() || records[0].first != "label" || records[0].second != "text") {
      throw ParseError(path + ": first record must be the header `label,text`", 0);
    }
    for (std::size_t r = 1; r < records.size(); ++r) {
      RawPost post;
      post.label = parse_label_field(records[r].first, path, r);
      post.text = records[r].second;
      out.posts.push_back(std::move(post));
    }
    return out;
  }

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
      if (!doc.is_object() || !doc.contains("text") || !doc["text"].is_string()) {
        throw ParseError(path + ": each line must be an object with string \"text\"", line_no);
      }
      RawPost post;
      post.text = doc["text"].get<std::string>();
      if (doc.contains("label")) {
        const json& label = doc["label"];
        if (!label.is_number_integer() ||
            (label.get<int>() != 0 && label.get<int>() != 1)) {
          throw ValidationError(path + ": label must be 0 or 1 (line " +
                                std::to_string(line_no) + ")");
        }
        post.label = label.get<int>();
      }
      out.posts.push_back(std::move(post));
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

namespace {

std::string csv_quote(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('"');
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void write_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open file for writing: " + path);
  }
  if (format == CorpusFormat::csv) {
    out << "label,text\n";
    for (const RawPost& post : corpus.posts) {
      if (post.label.has_value()) {
        out << *post.label;
      }
      out << ',' << csv_quote(post.text) << '\n';
    }
  } else {
    for (const RawPost& post : corpus.posts) {
      json doc;
      if (post.label.has_value()) {
        doc["label"] = *post.label;
      }
      doc["text"] = post.text;
      try {
        out << doc.dump() << '\n';
      } catch (const json::exception& e) {
        throw ValidationError(path + ": post text is not valid UTF-8: " +
                              std::string(e.what()));
      }
    }
  }
  if (!out.good()) {
    throw IoError("write failure on file: " + path);
  }
}

}  // namespace smfp
