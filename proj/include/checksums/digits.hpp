#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "checksums/errors.hpp"

namespace checksums {

// A decimal digit, value 0..9.
using Digit = std::uint8_t;

// An immutable sequence of decimal digits. Leading zeros are significant:
// a digit string is an identifier, not a number, and is never normalized
// through its numeric value.
class DigitString {
 public:
  DigitString() = default;
  DigitString(std::initializer_list<int> digits);
  explicit DigitString(std::vector<Digit> digits);

  // Reads digits from text. Spaces, hyphens and '|' are accepted as group
  // separators and ignored. Throws NonDigitCharacter (position refers to
  // the original text) for anything else, EmptyInput if no digits remain.
  static DigitString parse(std::string_view text);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<Digit>& digits() const { return digits_; }
  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  // The digits read as one base-10 number; the empty string reads as 0.
  // Supports at most 19 digits (the value must fit in 64 bits); throws
  // std::overflow_error beyond that.
  std::uint64_t to_number() const;

  // Digits as text; group > 0 inserts '|' between groups of that size.
  std::string str(std::size_t group = 0) const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::vector<Digit> digits_;
};

DigitString append_digit(const DigitString& ds, Digit d);

std::ostream& operator<<(std::ostream& os, const DigitString& ds);

// An ISBN-10: nine body digits plus a check value in 0..10, where 10 is
// written as 'X'.
class IsbnBody {
 public:
  IsbnBody(DigitString digits, int check);

  // Accepts the same separators as DigitString::parse plus a final 'X' or
  // 'x' standing for a check value of 10.
  static IsbnBody parse(std::string_view text);

  const DigitString& digits() const { return digits_; }
  int check() const { return check_; }

  // The ten positional values: nine digits followed by the check value.
  std::array<std::uint8_t, 10> values() const;

  std::string str() const;

  friend bool operator==(const IsbnBody&, const IsbnBody&) = default;

 private:
  DigitString digits_;
  std::uint8_t check_;
};

std::ostream& operator<<(std::ostream& os, const IsbnBody& body);

}  // namespace checksums
