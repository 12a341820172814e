#include <doctest.h>

#include "creutz/angle.hpp"
#include "creutz/errors.hpp"
#include "creutz/types.hpp"

using creutz::parse_angle;
using creutz::pi;

TEST_CASE("multiples of pi") {
  CHECK(parse_angle("pi") == pi);
  CHECK(parse_angle("-pi") == -pi);
  CHECK(parse_angle("pi/2") == pi / 2);
  CHECK(parse_angle("-3pi/2") == -3 * pi / 2);
  CHECK(parse_angle("3*pi/4") == 3 * pi / 4);
  CHECK(parse_angle("0.5pi") == 0.5 * pi);
  CHECK(parse_angle(" 2 pi ") == 2 * pi);
  CHECK(parse_angle("+pi") == pi);
}

TEST_CASE("decimal radians") {
  CHECK(parse_angle("1.25") == 1.25);
  CHECK(parse_angle("-0.5e-1") == -0.05);
  CHECK(parse_angle("+2") == 2.0);
  CHECK(parse_angle("0") == 0.0);
}

TEST_CASE("decimal text round-trips exactly") {
  CHECK(parse_angle("3.1415926535897931") == pi);
  CHECK(parse_angle("1.5707963267948966") == pi / 2);
}

TEST_CASE("garbage is rejected with the field name") {
  for (const char* bad : {"", "garbage", "pi/", "pi/0", "2pi3", "--pi", "pi/x", "nan", "inf", "1e999"}) {
    CAPTURE(bad);
    try {
      parse_angle(bad, "phi");
      FAIL("accepted");
    } catch (const creutz::InvalidParameter& e) {
      CHECK(e.field() == "phi");
    }
  }
}
