#include <sstream>
#include <stdexcept>

#include "checksums/digits.hpp"
#include "doctest.h"

using checksums::Digit;
using checksums::DigitString;
using checksums::IsbnBody;

TEST_CASE("digit string construction checks digit range") {
  DigitString ds{4, 2, 1};
  CHECK(ds.size() == 3);
  CHECK(ds[0] == 4);
  CHECK(ds[2] == 1);
  CHECK_FALSE(ds.empty());
  CHECK(DigitString{}.empty());
  CHECK_THROWS_AS((DigitString{4, 12, 1}), checksums::Error);
  CHECK_THROWS_AS((DigitString{-1}), checksums::Error);
  CHECK_THROWS_AS(DigitString(std::vector<Digit>{0, 10}), checksums::Error);
}

TEST_CASE("parse reads digits and skips group separators") {
  CHECK(DigitString::parse("421") == DigitString{4, 2, 1});
  CHECK(DigitString::parse("12 34-56|78") ==
        DigitString{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(DigitString::parse("0") == DigitString{0});
}

TEST_CASE("parse reports the offending character and raw position") {
  try {
    DigitString::parse("12x4");
    FAIL("expected NonDigitCharacter");
  } catch (const checksums::NonDigitCharacter& e) {
    CHECK(e.position() == 2);
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
  }
  // Positions count separators too: the bad character sits at offset 3.
  try {
    DigitString::parse("1 2z");
    FAIL("expected NonDigitCharacter");
  } catch (const checksums::NonDigitCharacter& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(DigitString::parse(""), checksums::EmptyInput);
  CHECK_THROWS_AS(DigitString::parse(" - |"), checksums::EmptyInput);
}

TEST_CASE("to_number reads the digits as one base-10 value") {
  CHECK(DigitString::parse("00421").to_number() == 421);
  CHECK(DigitString{}.to_number() == 0);
  CHECK(DigitString::parse("9999999999999999999").to_number() ==
        9999999999999999999ULL);
  CHECK_THROWS_AS(DigitString::parse("12345678901234567890").to_number(),
                  std::overflow_error);
}

TEST_CASE("str renders digits with optional grouping") {
  DigitString ds = DigitString::parse("123456789");
  CHECK(ds.str() == "123456789");
  CHECK(ds.str(3) == "123|456|789");
  CHECK(ds.str(4) == "1234|5678|9");
  std::ostringstream os;
  os << ds;
  CHECK(os.str() == "123456789");
}

TEST_CASE("append_digit leaves the original untouched") {
  DigitString ds{4, 2};
  DigitString longer = append_digit(ds, 1);
  CHECK(longer == DigitString{4, 2, 1});
  CHECK(ds == DigitString{4, 2});
}

TEST_CASE("isbn body carries nine digits and a check value up to 10") {
  IsbnBody body(DigitString::parse("030640615"), 2);
  CHECK(body.digits().size() == 9);
  CHECK(body.check() == 2);
  CHECK(body.str() == "0306406152");
  auto values = body.values();
  CHECK(values[0] == 0);
  CHECK(values[8] == 5);
  CHECK(values[9] == 2);

  IsbnBody ten(DigitString::parse("100000001"), 10);
  CHECK(ten.str() == "100000001X");
  CHECK(ten.values()[9] == 10);

  CHECK_THROWS_AS(IsbnBody(DigitString::parse("12345678"), 0),
                  checksums::WrongLength);
  CHECK_THROWS_AS(IsbnBody(DigitString::parse("123456789"), 11),
                  checksums::Error);
}

TEST_CASE("isbn parse accepts X only in the check position") {
  IsbnBody body = IsbnBody::parse("0-306-40615-2");
  CHECK(body.str() == "0306406152");
  CHECK(IsbnBody::parse("100000001x").check() == 10);
  CHECK(IsbnBody::parse("100000001X") == IsbnBody::parse("1 0000 0001 X"));

  CHECK_THROWS_AS(IsbnBody::parse("12345678"), checksums::WrongLength);
  CHECK_THROWS_AS(IsbnBody::parse("12345678901"), checksums::WrongLength);
  CHECK_THROWS_AS(IsbnBody::parse(""), checksums::EmptyInput);
  try {
    IsbnBody::parse("12345678X9");
    FAIL("expected NonDigitCharacter");
  } catch (const checksums::NonDigitCharacter& e) {
    CHECK(e.position() == 8);
  }
  CHECK_THROWS_AS(IsbnBody::parse("123456789y"), checksums::NonDigitCharacter);
}
