#include "checksums/schemes.hpp"

namespace checksums {

namespace {

constexpr std::array<SchemeSpec, 4> kSpecs{{
    {SchemeId::airline, kAirlineLength, 7, "body read as a number (powers of 10)"},
    {SchemeId::routing, kRoutingLength, 10, "weights cycle 7, 3, 9"},
    {SchemeId::luhn, kLuhnLength, 10, "every second digit doubled from the right"},
    {SchemeId::isbn10, kIsbnLength, 11, "weights descend 10, 9, ..., 1"},
}};

}  // namespace

std::string_view scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::airline: return "airline";
    case SchemeId::routing: return "routing";
    case SchemeId::luhn: return "luhn";
    case SchemeId::isbn10: return "isbn10";
  }
  throw Error("unknown scheme id");
}

SchemeId scheme_from_name(std::string_view name) {
  for (const SchemeSpec& spec : kSpecs) {
    if (scheme_name(spec.id) == name) return spec.id;
  }
  throw Error("unknown scheme '" + std::string(name) +
              "' (expected airline, routing, luhn or isbn10)");
}

const SchemeSpec& scheme_spec(SchemeId id) {
  return kSpecs[static_cast<std::size_t>(id)];
}

std::span<const SchemeSpec> all_schemes() { return kSpecs; }

Digit airline_check_digit(const DigitString& body) {
  if (body.size() != kAirlineLength - 1) {
    throw WrongLength("airline ticket body", kAirlineLength - 1, body.size());
  }
  unsigned rem = 0;
  for (Digit d : body) rem = (rem * 10 + d) % 7;
  return static_cast<Digit>(rem);
}

bool validate_airline(const DigitString& ticket) {
  if (ticket.size() != kAirlineLength) {
    throw WrongLength("airline ticket", kAirlineLength, ticket.size());
  }
  unsigned rem = 0;
  for (std::size_t i = 0; i + 1 < ticket.size(); ++i) {
    rem = (rem * 10 + ticket[i]) % 7;
  }
  return ticket[kAirlineLength - 1] == rem;
}

unsigned routing_weighted_sum(const DigitString& route) {
  if (route.size() != kRoutingLength) {
    throw WrongLength("routing number", kRoutingLength, route.size());
  }
  unsigned sum = 0;
  for (std::size_t i = 0; i < route.size(); ++i) {
    sum += kRoutingWeights[i % 3] * route[i];
  }
  return sum;
}

bool validate_routing(const DigitString& route) {
  return routing_weighted_sum(route) % 10 == 0;
}

unsigned luhn_sum(const DigitString& card) {
  if (card.empty()) throw EmptyInput("luhn sum of no digits");
  unsigned sum = 0;
  // j counts positions from the right; every odd one is doubled.
  for (std::size_t j = 0; j < card.size(); ++j) {
    unsigned v = card[card.size() - 1 - j];
    if (j % 2 == 1) {
      v *= 2;
      if (v > 9) v -= 9;
    }
    sum += v;
  }
  return sum;
}

bool validate_luhn(const DigitString& card) {
  if (card.size() != kLuhnLength) {
    throw WrongLength("card number", kLuhnLength, card.size());
  }
  return luhn_sum(card) % 10 == 0;
}

unsigned isbn_weighted_sum(std::span<const std::uint8_t> values) {
  if (values.size() != 10) {
    throw WrongLength("ISBN value sequence", 10, values.size());
  }
  unsigned sum = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    sum += static_cast<unsigned>(10 - i) * values[i];
  }
  return sum;
}

bool validate_isbn10(const IsbnBody& body) {
  auto values = body.values();
  return isbn_weighted_sum(values) % 11 == 0;
}

DigitString complete_check_digit(SchemeId id, const DigitString& body) {
  switch (id) {
    case SchemeId::airline:
      return append_digit(body, airline_check_digit(body));
    case SchemeId::routing: {
      if (body.size() != kRoutingLength - 1) {
        throw WrongLength("routing body", kRoutingLength - 1, body.size());
      }
      unsigned sum = 0;
      for (std::size_t i = 0; i < body.size(); ++i) {
        sum += kRoutingWeights[i % 3] * body[i];
      }
      // The check position carries weight 9, whose inverse mod 10 is 9.
      unsigned d = 9 * ((10 - sum % 10) % 10) % 10;
      return append_digit(body, static_cast<Digit>(d));
    }
    case SchemeId::luhn: {
      if (body.size() != kLuhnLength - 1) {
        throw WrongLength("card body", kLuhnLength - 1, body.size());
      }
      unsigned sum = 0;
      // Position from the right once the check digit is appended is
      // size - i, so body digits at even i get doubled.
      for (std::size_t i = 0; i < body.size(); ++i) {
        unsigned v = body[i];
        if ((body.size() - i) % 2 == 1) {
          v *= 2;
          if (v > 9) v -= 9;
        }
        sum += v;
      }
      return append_digit(body, static_cast<Digit>((10 - sum % 10) % 10));
    }
    case SchemeId::isbn10:
      throw Error("ISBN-10 check values run 0..10; use complete_isbn10");
  }
  throw Error("unknown scheme id");
}

IsbnBody complete_isbn10(const DigitString& body) {
  if (body.size() != kIsbnLength - 1) {
    throw WrongLength("ISBN body", kIsbnLength - 1, body.size());
  }
  unsigned sum = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    sum += static_cast<unsigned>(10 - i) * body[i];
  }
  return IsbnBody(body, static_cast<int>((11 - sum % 11) % 11));
}

}  // namespace checksums
