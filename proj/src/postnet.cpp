#include "checksums/postnet.hpp"

#include <utility>

namespace checksums {

namespace {

bool is_separator(char c) { return c == ' ' || c == '-' || c == '|'; }

Bit checked_bit(int value) {
  if (value != 0 && value != 1) {
    throw Error("bit value " + std::to_string(value) + " out of range 0..1");
  }
  return static_cast<Bit>(value);
}

// Complement of the two-of-five postal bar code (0 = 11000, 1 = 00011,
// 2 = 00101, 3 = 00110, 4 = 01001, 5 = 01010, 6 = 01100, 7 = 10001,
// 8 = 10010, 9 = 10100). Complementing maps the digits onto all ten
// weight-3 words.
constexpr std::array<Codeword, 10> kCodebook{{
    {0, 0, 1, 1, 1},  // 0
    {1, 1, 1, 0, 0},  // 1
    {1, 1, 0, 1, 0},  // 2
    {1, 1, 0, 0, 1},  // 3
    {1, 0, 1, 1, 0},  // 4
    {1, 0, 1, 0, 1},  // 5
    {1, 0, 0, 1, 1},  // 6
    {0, 1, 1, 1, 0},  // 7
    {0, 1, 1, 0, 1},  // 8
    {0, 1, 0, 1, 1},  // 9
}};

Codeword block_at(const BitString& bits, std::size_t block) {
  Codeword cw{};
  for (std::size_t j = 0; j < kCodewordBits; ++j) {
    cw[j] = bits[block * kCodewordBits + j];
  }
  return cw;
}

unsigned hamming_distance(const Codeword& a, const Codeword& b) {
  unsigned d = 0;
  for (std::size_t j = 0; j < kCodewordBits; ++j) d += a[j] != b[j];
  return d;
}

void require_message_length(std::size_t bits) {
  if (bits % kCodewordBits != 0 || bits < 2 * kCodewordBits) {
    throw BadLength(bits);
  }
}

}  // namespace

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) bits_.push_back(checked_bit(b));
}

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) checked_bit(b);
}

BitString BitString::parse(std::string_view text) {
  std::vector<Bit> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (is_separator(c)) continue;
    if (c != '0' && c != '1') throw NonBitCharacter(i, c);
    out.push_back(static_cast<Bit>(c - '0'));
  }
  if (out.empty()) throw EmptyInput("no bits in text");
  return BitString(std::move(out));
}

std::string BitString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (Bit b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::ostream& operator<<(std::ostream& os, const BitString& bits) {
  return os << bits.str();
}

unsigned codeword_weight(const Codeword& cw) {
  unsigned w = 0;
  for (Bit b : cw) w += b;
  return w;
}

bool is_valid_codeword(const Codeword& cw) { return codeword_weight(cw) == 3; }

Codeword encode_digit(Digit d) {
  if (d > 9) throw Error("digit value " + std::to_string(d) + " out of range 0..9");
  return kCodebook[d];
}

Digit decode_codeword(const Codeword& cw, std::size_t block_index) {
  for (std::size_t d = 0; d < kCodebook.size(); ++d) {
    if (kCodebook[d] == cw) return static_cast<Digit>(d);
  }
  throw InvalidCodeword(block_index);
}

Digit message_check_digit(const DigitString& ds) {
  unsigned sum = 0;
  for (Digit d : ds) sum += d;
  return static_cast<Digit>((10 - sum % 10) % 10);
}

BitString encode_message(const DigitString& ds) {
  if (ds.empty()) throw EmptyInput("cannot encode an empty message");
  std::vector<Bit> out;
  out.reserve((ds.size() + 1) * kCodewordBits);
  DigitString full = append_digit(ds, message_check_digit(ds));
  for (Digit d : full) {
    Codeword cw = encode_digit(d);
    out.insert(out.end(), cw.begin(), cw.end());
  }
  return BitString(std::move(out));
}

DigitString decode_message(const BitString& bits) {
  require_message_length(bits.size());
  std::size_t blocks = bits.size() / kCodewordBits;
  std::vector<Digit> digits;
  digits.reserve(blocks);
  unsigned sum = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    Digit d = decode_codeword(block_at(bits, b), b);
    digits.push_back(d);
    sum += d;
  }
  if (sum % 10 != 0) throw ChecksumMismatch(sum);
  digits.pop_back();  // drop the check digit
  return DigitString(std::move(digits));
}

CorrectionReport detect_and_correct(const BitString& bits) {
  require_message_length(bits.size());
  std::size_t blocks = bits.size() / kCodewordBits;

  std::vector<Codeword> received;
  received.reserve(blocks);
  std::vector<std::size_t> invalid;
  for (std::size_t b = 0; b < blocks; ++b) {
    received.push_back(block_at(bits, b));
    if (!is_valid_codeword(received.back())) invalid.push_back(b);
  }

  CorrectionReport report{};
  if (invalid.size() > 1) {
    report.status = CorrectionReport::Status::uncorrectable;
    report.reason = std::to_string(invalid.size()) +
                    " blocks are invalid; more than one bit error";
    return report;
  }

  if (invalid.empty()) {
    std::vector<Digit> digits;
    digits.reserve(blocks);
    unsigned sum = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      digits.push_back(decode_codeword(received[b], b));
      sum += digits.back();
    }
    if (sum % 10 != 0) {
      report.status = CorrectionReport::Status::uncorrectable;
      report.reason = "every block is a valid codeword but the digit total " +
                      std::to_string(sum) + " is not divisible by 10";
      return report;
    }
    digits.pop_back();
    report.status = CorrectionReport::Status::clean;
    report.recovered = DigitString(std::move(digits));
    return report;
  }

  // Exactly one corrupted block: the checksum pins the digit it must hold.
  std::size_t bad = invalid.front();
  std::vector<Digit> digits(blocks, 0);
  unsigned sum = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    if (b == bad) continue;
    digits[b] = decode_codeword(received[b], b);
    sum += digits[b];
  }
  Digit implied = static_cast<Digit>((10 - sum % 10) % 10);
  if (hamming_distance(received[bad], encode_digit(implied)) > 1) {
    report.status = CorrectionReport::Status::uncorrectable;
    report.reason = "block " + std::to_string(bad) +
                    " is more than one bit away from the codeword the "
                    "checksum requires";
    return report;
  }
  digits[bad] = implied;
  digits.pop_back();
  report.status = CorrectionReport::Status::corrected;
  report.recovered = DigitString(std::move(digits));
  report.block = bad;
  report.received = received[bad];
  report.corrected_to = implied;
  return report;
}

}  // namespace checksums
