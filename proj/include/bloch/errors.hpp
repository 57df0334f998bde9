#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bloch {

// Input outside the domain of an operation (z in {0,1}, bad side tag, FT+ violation, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text record. line() is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A parsed record that fails validation; index() names the offending simplex.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::size_t index, std::size_t line, const std::string& what)
      : std::runtime_error("simplex " + std::to_string(index) + " (line " + std::to_string(line) +
                           "): " + what),
        index_(index),
        line_(line) {}
  std::size_t index() const noexcept { return index_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t index_;
  std::size_t line_;
};

}  // namespace bloch
