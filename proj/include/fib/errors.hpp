#pragma once

#include <stdexcept>
#include <string>

namespace fib {

// Malformed input text (presentation DSL, braid spec). Line/column are
// 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int column = 0)
      : std::runtime_error("parse error at line " + std::to_string(line) +
                           (column > 0 ? ", column " + std::to_string(column) : "") +
                           ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Structurally well-formed input that violates a semantic requirement
// (non-vanishing phi on a relator, braid closure not a knot, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A cover construction was asked for a coset action that does not reach
// every coset.
class NotTransitiveError : public ValidationError {
 public:
  explicit NotTransitiveError(const std::string& msg) : ValidationError(msg) {}
};

// A hard resource cap was exceeded (generator/relator counts, matrix side,
// polynomial degree spread, symmetric-group degree). Never downgraded to an
// approximation.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace fib
