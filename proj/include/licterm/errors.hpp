#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace licterm {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input record. `line` is 1-based; 0 when not line oriented.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// A record parsed but broke a domain invariant (e.g. a right marked must).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string license, std::string term, const std::string& what)
      : std::runtime_error(what), license_(std::move(license)), term_(std::move(term)) {}

  const std::string& license() const noexcept { return license_; }
  const std::string& term() const noexcept { return term_; }

 private:
  std::string license_;
  std::string term_;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}

  /// Byte offset into the raw input where parsing failed.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class DuplicateVersion : public FormatError {
 public:
  using FormatError::FormatError;
};

class InvalidThreshold : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace licterm
