#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smfp {

// Root of the library's exception hierarchy. Every failure raised by smfp
// derives from this, so callers can catch smfp::Error at the boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file or stream could not be read or written. Message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Structurally malformed input (bad JSON line, bad CSV record, bad TSV row).
// Carries the 1-based line/record number where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input whose content violates a domain rule (empty sense list,
// label outside {0,1}, duplicate wordlist entry, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bad run configuration: duplicate source names, unknown options, missing
// required settings.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A term that normalizes to the empty string.
class InvalidTerm : public Error {
 public:
  using Error::Error;
};

// A lexicon entry with no senses reached the disambiguator.
class EmptySenses : public Error {
 public:
  using Error::Error;
};

// An argument outside an operation's stated domain (every == 0, empty softmax
// input, empty test set, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Training data unusable for supervised learning (empty, or only one class).
class DegenerateData : public Error {
 public:
  using Error::Error;
};

// A feature vector whose dimension does not match the model it is applied to.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace smfp
