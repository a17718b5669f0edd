#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace checksums {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonDigitCharacter : public Error {
 public:
  NonDigitCharacter(std::size_t position, char ch)
      : Error("non-digit character '" + std::string(1, ch) + "' at position " +
              std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NonBitCharacter : public Error {
 public:
  NonBitCharacter(std::size_t position, char ch)
      : Error("non-bit character '" + std::string(1, ch) + "' at position " +
              std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& context)
      : Error("empty input: " + context) {}
};

class WrongLength : public Error {
 public:
  WrongLength(const std::string& what, std::size_t expected, std::size_t got)
      : Error(what + " must have " + std::to_string(expected) +
              " elements, got " + std::to_string(got)),
        expected_(expected),
        got_(got) {}
  std::size_t expected() const { return expected_; }
  std::size_t got() const { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t size)
      : Error("index " + std::to_string(index) + " out of range for size " +
              std::to_string(size)),
        index_(index),
        size_(size) {}
  std::size_t index() const { return index_; }
  std::size_t size() const { return size_; }

 private:
  std::size_t index_;
  std::size_t size_;
};

// Bit stream that cannot hold a message: the length must be a positive
// multiple of five covering at least one digit plus the check digit.
class BadLength : public Error {
 public:
  explicit BadLength(std::size_t got)
      : Error("bit length " + std::to_string(got) +
              " is not a multiple of 5 that is at least 10"),
        got_(got) {}
  std::size_t got() const { return got_; }

 private:
  std::size_t got_;
};

class InvalidCodeword : public Error {
 public:
  explicit InvalidCodeword(std::size_t block)
      : Error("block " + std::to_string(block) +
              " is not a valid codeword (bit weight is not 3)"),
        block_(block) {}
  std::size_t block() const { return block_; }

 private:
  std::size_t block_;
};

class ChecksumMismatch : public Error {
 public:
  explicit ChecksumMismatch(unsigned total)
      : Error("digit total " + std::to_string(total) +
              " is not divisible by 10"),
        total_(total) {}
  unsigned total() const { return total_; }

 private:
  unsigned total_;
};

class DomainTooLarge : public Error {
 public:
  DomainTooLarge(std::uint64_t size, std::uint64_t cap)
      : Error("domain of " + std::to_string(size) +
              " values exceeds the enumeration cap of " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::uint64_t size() const { return size_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

class PredicateFailure : public Error {
 public:
  PredicateFailure(std::string environment, const std::string& message)
      : Error("predicate failed on " + environment + ": " + message),
        environment_(std::move(environment)) {}
  const std::string& environment() const { return environment_; }

 private:
  std::string environment_;
};

}  // namespace checksums
