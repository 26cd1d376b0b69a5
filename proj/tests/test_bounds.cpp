#include <doctest.h>

#include <stdexcept>

#include "ooc/bounds.hpp"

using namespace ooc;
using boost::multiprecision::cpp_int;

TEST_CASE("johnson_capacity examples") {
  CHECK(johnson_capacity(19, 3, 1).C == 3);
  CHECK(johnson_capacity(25, 3, 1).C == 4);
  CHECK(johnson_capacity(13, 3, 1).C == 2);
  CHECK_THROWS_AS(johnson_capacity(19, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(johnson_capacity(19, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(johnson_capacity(3, 3, 1), std::invalid_argument);
}

TEST_CASE("johnson_number examples") {
  CHECK(johnson_number(3, 3) == 19);
  CHECK(johnson_number(1, 3) == 7);
  CHECK(johnson_number(4, 3) == 25);
  CHECK_THROWS_AS(johnson_number(3, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(johnson_number(0, 3), std::invalid_argument);
}

TEST_CASE("capacity of the Johnson number round-trips") {
  for (int C = 1; C <= 100; ++C)
    for (int w = 2; w <= 10; ++w) CHECK(johnson_capacity(johnson_number(C, w), w, 1).C == C);
}

TEST_CASE("capacity is nondecreasing in n") {
  for (int w = 3; w <= 7; ++w)
    for (int lambda = 1; lambda < w; ++lambda) {
      cpp_int previous = 0;
      for (int n = w + 1; n <= 200; ++n) {
        const auto c = johnson_capacity(n, w, lambda).C;
        CHECK(c >= previous);
        previous = c;
      }
    }
}

TEST_CASE("single floor of the exact product, no intermediate rounding") {
  // n = 12: (11 * 10 * 9) / (5 * 4 * 3 * 2) = 990 / 120 -> 8; nested floors give 7.
  CHECK(johnson_capacity(13, 5, 3).C == 11);
  CHECK(johnson_capacity(12, 5, 3).C == 8);
  CHECK(johnson_capacity_nested(12, 5, 3).C == 7);
  CHECK(johnson_capacity(7, 5, 3).C == 1);
  CHECK(johnson_capacity_nested(7, 5, 3).C == 0);
  CHECK(johnson_capacity_nested(19, 3, 1).C == 3);
}

TEST_CASE("no overflow for long codes") {
  // floor(prod_{k=1..9}(10^6 - k) / 10!), computed with Python big integers.
  const cpp_int expected("275560791685954185974226391830832142533978457499");
  CHECK(johnson_capacity(1000000, 10, 9).C == expected);
  CHECK(johnson_capacity_nested(1000000, 10, 9).C == expected);
}
