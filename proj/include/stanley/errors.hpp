#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "stanley/bigint.hpp"

namespace stanley {

/// Input violates a documented precondition (negative pile, non-partition, ...).
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class precondition_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

class illegal_move : public std::invalid_argument {
 public:
  explicit illegal_move(std::size_t index, const std::string& why)
      : std::invalid_argument("illegal move " + std::to_string(index) + ": " + why),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Malformed text; offset is the 0-based character position of the problem.
class parse_error : public std::invalid_argument {
 public:
  parse_error(std::size_t offset, const std::string& what)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Enumeration refused because the number of plays exceeds the caller's limit.
class limit_exceeded : public std::runtime_error {
 public:
  limit_exceeded(BigInt count, const std::string& limit)
      : std::runtime_error("play count " + count.str() + " exceeds limit " + limit),
        count_(std::move(count)) {}

  const BigInt& count() const noexcept { return count_; }

 private:
  BigInt count_;
};

/// A brute-force oracle was asked for something beyond its configured size bound.
class bound_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact division that must be integral was not. Signals a bug or a bad fit.
class integrality_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stanley
