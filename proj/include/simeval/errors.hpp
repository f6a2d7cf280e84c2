#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace simeval {

// Base for every toolkit error. Subclasses map onto the CLI exit-code
// contract: ConfigError -> 1, ParseError/ValidationError -> 2,
// ProviderError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input data. line == 0 means "no specific line".
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// Structurally valid input violating a cross-record invariant
// (duplicate keys, broken rank sequences, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Embedding-provider failures (transport, contract, store misses).
class ProviderError : public Error {
 public:
  explicit ProviderError(const std::string& msg,
                         std::vector<std::size_t> failing_indices = {},
                         int status = 0)
      : Error(msg),
        failing_indices_(std::move(failing_indices)),
        status_(status) {}
  // Indices of the input texts whose batch failed, when known.
  const std::vector<std::size_t>& failing_indices() const {
    return failing_indices_;
  }
  int status() const { return status_; }

 private:
  std::vector<std::size_t> failing_indices_;
  int status_ = 0;
};

// A precomputed store has no vector for the requested text.
class LookupMissError : public ProviderError {
 public:
  LookupMissError(const std::string& msg, std::string text_hash)
      : ProviderError(msg), text_hash_(std::move(text_hash)) {}
  const std::string& text_hash() const { return text_hash_; }

 private:
  std::string text_hash_;
};

}  // namespace simeval
