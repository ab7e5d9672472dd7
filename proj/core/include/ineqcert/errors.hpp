#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ineqcert {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by an interval that contains zero, or a non-removable singularity.
class PoleError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a lemma-style check does not hold (e.g. a non-positive denominator coefficient).
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed structured input such as a certificate or catalog file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset, std::vector<std::string> expected)
      : Error(format(message, offset, expected)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t offset,
                            const std::vector<std::string>& expected) {
    std::string out = "syntax error at offset " + std::to_string(offset) + ": " + message;
    if (!expected.empty()) {
      out += " (expected one of:";
      for (const auto& e : expected) out += " " + e;
      out += ")";
    }
    return out;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace ineqcert
