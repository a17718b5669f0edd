#pragma once

#include <cstddef>

#include "checksums/digits.hpp"
#include "checksums/postnet.hpp"

namespace checksums {

// Returns ds with position n replaced by d. Throws IndexOutOfRange.
DigitString change_nth_digit(const DigitString& ds, std::size_t n, Digit d);

// Returns ds with positions n and n+1 exchanged. Throws IndexOutOfRange
// unless n + 1 < size.
DigitString transpose_nth(const DigitString& ds, std::size_t n);

// Returns bits with position i inverted. Throws IndexOutOfRange.
BitString flip_bit(const BitString& bits, std::size_t i);

// A mutation is effective when it actually changed the value; substituting
// a digit with itself or transposing two equal digits is a no-op that no
// checksum could be expected to notice.
bool is_effective(const DigitString& original, const DigitString& mutated);
bool is_effective(const BitString& original, const BitString& mutated);

enum class MutationKind { substitute, transpose, flip_bit };

// One injected error, validated against the length of the value it is
// meant for.
struct Mutation {
  MutationKind kind;
  std::size_t pos = 0;
  Digit digit = 0;  // substitute payload
  std::size_t target_length = 0;

  static Mutation substitute(std::size_t pos, Digit digit,
                             std::size_t target_length);
  static Mutation transpose(std::size_t pos, std::size_t target_length);
  static Mutation bit_flip(std::size_t pos, std::size_t target_length);
};

// Applies a digit mutation (substitute or transpose).
DigitString apply(const Mutation& m, const DigitString& ds);

// Applies a bit mutation (flip_bit).
BitString apply(const Mutation& m, const BitString& bits);

}  // namespace checksums
