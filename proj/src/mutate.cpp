#include "checksums/mutate.hpp"

#include <utility>

namespace checksums {

DigitString change_nth_digit(const DigitString& ds, std::size_t n, Digit d) {
  if (n >= ds.size()) throw IndexOutOfRange(n, ds.size());
  std::vector<Digit> out = ds.digits();
  out[n] = d;
  return DigitString(std::move(out));
}

DigitString transpose_nth(const DigitString& ds, std::size_t n) {
  if (n + 1 >= ds.size()) throw IndexOutOfRange(n, ds.size());
  std::vector<Digit> out = ds.digits();
  std::swap(out[n], out[n + 1]);
  return DigitString(std::move(out));
}

BitString flip_bit(const BitString& bits, std::size_t i) {
  if (i >= bits.size()) throw IndexOutOfRange(i, bits.size());
  std::vector<Bit> out = bits.bits();
  out[i] = out[i] ? 0 : 1;
  return BitString(std::move(out));
}

bool is_effective(const DigitString& original, const DigitString& mutated) {
  return !(original == mutated);
}

bool is_effective(const BitString& original, const BitString& mutated) {
  return !(original == mutated);
}

Mutation Mutation::substitute(std::size_t pos, Digit digit,
                              std::size_t target_length) {
  if (pos >= target_length) throw IndexOutOfRange(pos, target_length);
  if (digit > 9) throw Error("substitute payload must be a digit 0..9");
  return Mutation{MutationKind::substitute, pos, digit, target_length};
}

Mutation Mutation::transpose(std::size_t pos, std::size_t target_length) {
  if (pos + 1 >= target_length) throw IndexOutOfRange(pos, target_length);
  return Mutation{MutationKind::transpose, pos, 0, target_length};
}

Mutation Mutation::bit_flip(std::size_t pos, std::size_t target_length) {
  if (pos >= target_length) throw IndexOutOfRange(pos, target_length);
  return Mutation{MutationKind::flip_bit, pos, 0, target_length};
}

DigitString apply(const Mutation& m, const DigitString& ds) {
  switch (m.kind) {
    case MutationKind::substitute: return change_nth_digit(ds, m.pos, m.digit);
    case MutationKind::transpose: return transpose_nth(ds, m.pos);
    case MutationKind::flip_bit: break;
  }
  throw Error("bit flips apply to bit strings, not digit strings");
}

BitString apply(const Mutation& m, const BitString& bits) {
  if (m.kind != MutationKind::flip_bit) {
    throw Error("digit mutations apply to digit strings, not bit strings");
  }
  return flip_bit(bits, m.pos);
}

}  // namespace checksums
