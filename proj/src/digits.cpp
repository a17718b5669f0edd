#include "checksums/digits.hpp"

#include <stdexcept>
#include <utility>

namespace checksums {

namespace {

bool is_separator(char c) { return c == ' ' || c == '-' || c == '|'; }

Digit checked_digit(int value) {
  if (value < 0 || value > 9) {
    throw Error("digit value " + std::to_string(value) + " out of range 0..9");
  }
  return static_cast<Digit>(value);
}

}  // namespace

DigitString::DigitString(std::initializer_list<int> digits) {
  digits_.reserve(digits.size());
  for (int d : digits) digits_.push_back(checked_digit(d));
}

DigitString::DigitString(std::vector<Digit> digits) : digits_(std::move(digits)) {
  for (Digit d : digits_) checked_digit(d);
}

DigitString DigitString::parse(std::string_view text) {
  std::vector<Digit> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (is_separator(c)) continue;
    if (c < '0' || c > '9') throw NonDigitCharacter(i, c);
    out.push_back(static_cast<Digit>(c - '0'));
  }
  if (out.empty()) throw EmptyInput("no digits in text");
  return DigitString(std::move(out));
}

std::uint64_t DigitString::to_number() const {
  if (digits_.size() > 19) {
    throw std::overflow_error("digit string of " +
                              std::to_string(digits_.size()) +
                              " digits does not fit in 64 bits");
  }
  std::uint64_t n = 0;
  for (Digit d : digits_) n = n * 10 + d;
  return n;
}

std::string DigitString::str(std::size_t group) const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (group > 0 && i > 0 && i % group == 0) out.push_back('|');
    out.push_back(static_cast<char>('0' + digits_[i]));
  }
  return out;
}

DigitString append_digit(const DigitString& ds, Digit d) {
  std::vector<Digit> out = ds.digits();
  out.push_back(d);
  return DigitString(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const DigitString& ds) {
  return os << ds.str();
}

IsbnBody::IsbnBody(DigitString digits, int check) : digits_(std::move(digits)) {
  if (digits_.size() != 9) {
    throw WrongLength("ISBN body", 9, digits_.size());
  }
  if (check < 0 || check > 10) {
    throw Error("ISBN check value " + std::to_string(check) +
                " out of range 0..10");
  }
  check_ = static_cast<std::uint8_t>(check);
}

IsbnBody IsbnBody::parse(std::string_view text) {
  std::vector<int> values;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (is_separator(c)) continue;
    if (c >= '0' && c <= '9') {
      values.push_back(c - '0');
    } else if (c == 'X' || c == 'x') {
      values.push_back(10);
    } else {
      throw NonDigitCharacter(i, c);
    }
    positions.push_back(i);
  }
  if (values.empty()) throw EmptyInput("no digits in text");
  if (values.size() != 10) throw WrongLength("ISBN", 10, values.size());
  std::vector<Digit> body;
  body.reserve(9);
  for (std::size_t k = 0; k < 9; ++k) {
    // 'X' is only meaningful as the check position.
    if (values[k] == 10) throw NonDigitCharacter(positions[k], 'X');
    body.push_back(static_cast<Digit>(values[k]));
  }
  return IsbnBody(DigitString(std::move(body)), values[9]);
}

std::array<std::uint8_t, 10> IsbnBody::values() const {
  std::array<std::uint8_t, 10> out{};
  for (std::size_t i = 0; i < 9; ++i) out[i] = digits_[i];
  out[9] = check_;
  return out;
}

std::string IsbnBody::str() const {
  std::string out = digits_.str();
  out.push_back(check_ == 10 ? 'X' : static_cast<char>('0' + check_));
  return out;
}

std::ostream& operator<<(std::ostream& os, const IsbnBody& body) {
  return os << body.str();
}

}  // namespace checksums
