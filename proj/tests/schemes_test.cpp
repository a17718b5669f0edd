#include "checksums/schemes.hpp"
#include "doctest.h"

using checksums::DigitString;
using checksums::IsbnBody;
using checksums::SchemeId;

TEST_CASE("scheme names round-trip") {
  for (const checksums::SchemeSpec& spec : checksums::all_schemes()) {
    CHECK(checksums::scheme_from_name(checksums::scheme_name(spec.id)) ==
          spec.id);
  }
  CHECK_THROWS_AS(checksums::scheme_from_name("ean13"), checksums::Error);
}

TEST_CASE("scheme specs pin length and modulus") {
  CHECK(checksums::scheme_spec(SchemeId::airline).total_length == 15);
  CHECK(checksums::scheme_spec(SchemeId::airline).modulus == 7);
  CHECK(checksums::scheme_spec(SchemeId::routing).total_length == 9);
  CHECK(checksums::scheme_spec(SchemeId::routing).modulus == 10);
  CHECK(checksums::scheme_spec(SchemeId::luhn).total_length == 16);
  CHECK(checksums::scheme_spec(SchemeId::luhn).modulus == 10);
  CHECK(checksums::scheme_spec(SchemeId::isbn10).total_length == 10);
  CHECK(checksums::scheme_spec(SchemeId::isbn10).modulus == 11);
  CHECK(checksums::all_schemes().size() == 4);
}

TEST_CASE("airline check digit is the body mod 7") {
  // 12345678901234 = 7 * 1763668414462, so the check digit is 0.
  CHECK(checksums::airline_check_digit(DigitString::parse("12345678901234")) ==
        0);
  CHECK(checksums::airline_check_digit(DigitString::parse("10000000000000")) ==
        3);
  CHECK(checksums::airline_check_digit(DigitString::parse("42000000000000")) ==
        0);
  CHECK_THROWS_AS(checksums::airline_check_digit(DigitString::parse("123")),
                  checksums::WrongLength);
}

TEST_CASE("airline validation compares the last digit against the body") {
  CHECK(checksums::validate_airline(DigitString::parse("123456789012340")));
  CHECK(checksums::validate_airline(DigitString::parse("100000000000003")));
  CHECK(checksums::validate_airline(DigitString::parse("420000000000000")));
  CHECK_FALSE(
      checksums::validate_airline(DigitString::parse("123456789012341")));
  CHECK_FALSE(
      checksums::validate_airline(DigitString::parse("100000000000000")));
  CHECK_THROWS_AS(
      checksums::validate_airline(DigitString::parse("12345678901234")),
      checksums::WrongLength);
}

TEST_CASE("airline folding agrees with reading the body as a number") {
  // Small enough to fit in 64 bits, so to_number gives an independent check.
  for (const char* text :
       {"12345678901234", "98765432109876", "00000000000001",
        "77777777777777", "10987654321098"}) {
    DigitString body = DigitString::parse(text);
    CHECK(checksums::airline_check_digit(body) == body.to_number() % 7);
  }
}

TEST_CASE("routing weighted sum cycles 7,3,9") {
  CHECK(checksums::routing_weighted_sum(DigitString::parse("388007000")) ==
        180);
  CHECK(checksums::routing_weighted_sum(DigitString::parse("614700000")) ==
        130);
  CHECK(checksums::routing_weighted_sum(DigitString::parse("494700000")) ==
        140);
  CHECK(checksums::routing_weighted_sum(DigitString::parse("100000000")) == 7);
  CHECK(checksums::validate_routing(DigitString::parse("388007000")));
  CHECK_FALSE(checksums::validate_routing(DigitString::parse("100000000")));
  CHECK_THROWS_AS(checksums::routing_weighted_sum(DigitString::parse("1234")),
                  checksums::WrongLength);
}

TEST_CASE("luhn sum doubles every second digit from the right") {
  CHECK(checksums::luhn_sum(DigitString{5}) == 5);
  CHECK(checksums::luhn_sum(DigitString{5, 9}) == 10);
  CHECK(checksums::luhn_sum(DigitString{9, 5}) == 14);
  CHECK(checksums::luhn_sum(DigitString::parse("4539148803436467")) == 80);
  CHECK(checksums::luhn_sum(DigitString::parse("4111111111111111")) == 30);
  CHECK_THROWS_AS(checksums::luhn_sum(DigitString{}), checksums::EmptyInput);
}

TEST_CASE("luhn validation accepts classic 16-digit card numbers") {
  CHECK(checksums::validate_luhn(DigitString::parse("4539148803436467")));
  CHECK(checksums::validate_luhn(DigitString::parse("4111111111111111")));
  CHECK_FALSE(checksums::validate_luhn(DigitString::parse("4111111111111112")));
  CHECK_THROWS_AS(checksums::validate_luhn(DigitString::parse("41111")),
                  checksums::WrongLength);
}

TEST_CASE("isbn weighted sum uses descending weights 10..1") {
  IsbnBody body = IsbnBody::parse("0306406152");
  CHECK(checksums::isbn_weighted_sum(body.values()) == 132);
  CHECK(checksums::validate_isbn10(body));
  CHECK(checksums::validate_isbn10(IsbnBody::parse("100000001X")));
  CHECK_FALSE(checksums::validate_isbn10(IsbnBody::parse("0306406151")));
  std::array<std::uint8_t, 3> three{1, 2, 3};
  CHECK_THROWS_AS(checksums::isbn_weighted_sum(three), checksums::WrongLength);
}

TEST_CASE("completion appends the unique check digit") {
  CHECK(checksums::complete_check_digit(SchemeId::airline,
                                        DigitString::parse("10000000000000")) ==
        DigitString::parse("100000000000003"));
  CHECK(checksums::complete_check_digit(SchemeId::routing,
                                        DigitString::parse("38800700")) ==
        DigitString::parse("388007000"));
  CHECK(checksums::complete_check_digit(SchemeId::luhn,
                                        DigitString::parse("453914880343646")) ==
        DigitString::parse("4539148803436467"));
  CHECK_THROWS_AS(checksums::complete_check_digit(
                      SchemeId::isbn10, DigitString::parse("030640615")),
                  checksums::Error);
  CHECK_THROWS_AS(checksums::complete_check_digit(SchemeId::routing,
                                                  DigitString::parse("123")),
                  checksums::WrongLength);
}

TEST_CASE("completed values validate, for every scheme") {
  const char* bodies[] = {"00000000000000", "12345678901234", "99999999999999"};
  for (const char* b : bodies) {
    CHECK(checksums::validate_airline(checksums::complete_check_digit(
        SchemeId::airline, DigitString::parse(b))));
  }
  const char* routes[] = {"00000000", "12345678", "99999999", "05550555"};
  for (const char* b : routes) {
    CHECK(checksums::validate_routing(checksums::complete_check_digit(
        SchemeId::routing, DigitString::parse(b))));
  }
  const char* cards[] = {"000000000000000", "411111111111111",
                         "999999999999999"};
  for (const char* b : cards) {
    CHECK(checksums::validate_luhn(checksums::complete_check_digit(
        SchemeId::luhn, DigitString::parse(b))));
  }
}

TEST_CASE("isbn completion may produce the X check value") {
  CHECK(checksums::complete_isbn10(DigitString::parse("030640615")).check() ==
        2);
  IsbnBody ten = checksums::complete_isbn10(DigitString::parse("100000001"));
  CHECK(ten.check() == 10);
  CHECK(ten.str() == "100000001X");
  CHECK(checksums::validate_isbn10(ten));
  CHECK_THROWS_AS(checksums::complete_isbn10(DigitString::parse("1234")),
                  checksums::WrongLength);
}
