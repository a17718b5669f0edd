#pragma once

#include <array>
#include <span>
#include <string_view>

#include "checksums/digits.hpp"

namespace checksums {

enum class SchemeId { airline, routing, luhn, isbn10 };

std::string_view scheme_name(SchemeId id);
SchemeId scheme_from_name(std::string_view name);  // throws Error on unknown

// Static shape of a scheme: how long its strings are and which modular
// equation the check digit satisfies.
struct SchemeSpec {
  SchemeId id;
  std::size_t total_length;  // digits including the check position
  unsigned modulus;
  std::string_view weighting;  // per-position weighting, described
};

const SchemeSpec& scheme_spec(SchemeId id);
std::span<const SchemeSpec> all_schemes();

inline constexpr std::size_t kAirlineLength = 15;
inline constexpr std::size_t kRoutingLength = 9;
inline constexpr std::size_t kLuhnLength = 16;
inline constexpr std::size_t kIsbnLength = 10;

// Routing weights cycle 7, 3, 9 starting at position 0.
inline constexpr std::array<unsigned, 3> kRoutingWeights{7, 3, 9};

// Check digit of a 14-digit ticket body: the body read as one number,
// reduced mod 7. Folds digit by digit, so no word-size limit applies.
Digit airline_check_digit(const DigitString& body);

// A 15-digit ticket is valid when its last digit is the check digit of the
// first fourteen.
bool validate_airline(const DigitString& ticket);

// 7*d0 + 3*d1 + 9*d2 + 7*d3 + ... over a 9-digit routing number.
unsigned routing_weighted_sum(const DigitString& route);

// Valid when the weighted sum is divisible by 10.
bool validate_routing(const DigitString& route);

// Doubled-digit sum, walking from the rightmost digit leftward and doubling
// every second digit (folding results above 9 by subtracting 9). Accepts any
// non-empty string; throws EmptyInput otherwise.
unsigned luhn_sum(const DigitString& card);

// A 16-digit card number is valid when its doubled-digit sum is divisible
// by 10.
bool validate_luhn(const DigitString& card);

// 10*v0 + 9*v1 + ... + 1*v9 over exactly ten positional values.
unsigned isbn_weighted_sum(std::span<const std::uint8_t> values);

// Valid when the weighted sum over digits and check value is divisible
// by 11.
bool validate_isbn10(const IsbnBody& body);

// Appends the unique check digit that makes the scheme equation hold, for
// the three pure-digit schemes (airline: 14-digit body, routing: 8,
// luhn: 15). For ISBN-10 use complete_isbn10 — its check value may be 10.
DigitString complete_check_digit(SchemeId id, const DigitString& body);

// Completes a nine-digit ISBN body with its check value (0..10).
IsbnBody complete_isbn10(const DigitString& body);

}  // namespace checksums
