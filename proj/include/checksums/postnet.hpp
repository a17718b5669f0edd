#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "checksums/digits.hpp"

namespace checksums {

using Bit = std::uint8_t;

// An immutable sequence of bits.
class BitString {
 public:
  BitString() = default;
  BitString(std::initializer_list<int> bits);
  explicit BitString(std::vector<Bit> bits);

  // Reads '0'/'1' characters; spaces, hyphens and '|' are ignored. Throws
  // NonBitCharacter (position refers to the original text) otherwise.
  static BitString parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<Bit>& bits() const { return bits_; }
  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }

  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<Bit> bits_;
};

std::ostream& operator<<(std::ostream& os, const BitString& bits);

// One five-bit block. Valid codewords carry exactly three 1s, so any single
// flipped bit leaves a block with weight 2 or 4 — never another codeword.
using Codeword = std::array<Bit, 5>;

inline constexpr std::size_t kCodewordBits = 5;

unsigned codeword_weight(const Codeword& cw);
bool is_valid_codeword(const Codeword& cw);

// Fixed digit-to-codeword table: the bitwise complement of the two-of-five
// postal bar code, which maps the ten digits onto all ten weight-3 words.
Codeword encode_digit(Digit d);

// Inverse of encode_digit. Throws InvalidCodeword (reporting block_index)
// when the block is not in the codebook.
Digit decode_codeword(const Codeword& cw, std::size_t block_index = 0);

// The digit that brings the digit total up to a multiple of 10.
Digit message_check_digit(const DigitString& ds);

// Appends the check digit, then encodes every digit into five bits.
// Throws EmptyInput for an empty message.
BitString encode_message(const DigitString& ds);

// Strict inverse of encode_message: every block must be a valid codeword
// and the digit total must be divisible by 10. Returns the digits without
// the check digit. Throws BadLength, InvalidCodeword, or ChecksumMismatch.
DigitString decode_message(const BitString& bits);

struct CorrectionReport {
  enum class Status { clean, corrected, uncorrectable };

  Status status;
  // The message digits (check digit removed); present unless uncorrectable.
  std::optional<DigitString> recovered;
  // Set when status == corrected:
  std::size_t block = 0;  // which block was repaired
  Codeword received{};    // the block as received
  Digit corrected_to = 0;
  // Set when status == uncorrectable:
  std::string reason;
};

// Single-bit error recovery. A flipped bit leaves exactly one block with
// weight != 3, which pins the corrupted position; the mod-10 checksum then
// pins the digit value, and the repaired block must sit within Hamming
// distance 1 of what was received. Throws BadLength only; all other
// outcomes are reported in the CorrectionReport.
CorrectionReport detect_and_correct(const BitString& bits);

}  // namespace checksums
