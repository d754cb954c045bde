#include <array>

#include "doctest.h"
#include "oracles.hpp"
#include "tevelev/errors.hpp"
#include "tevelev/exactmath.hpp"

using namespace tev;

TEST_SUITE("exactmath") {
  TEST_CASE("binom_gen examples") {
    CHECK(binom_gen(5, 2) == 10);
    CHECK(binom_gen(-1, 3) == -1);
    CHECK(binom_gen(3, -1) == 0);
    CHECK(binom_gen(0, 0) == 1);
    CHECK(binom_gen(2, 5) == 0);
    CHECK(binom_gen(-3, 2) == 6);  // (1+x)^-3 = 1 - 3x + 6x^2 - ...
  }

  TEST_CASE("binom_gen matches the brute-force series on a window") {
    for (std::int64_t a = -12; a <= 12; ++a) {
      for (std::int64_t b = -3; b <= 12; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(binom_gen(a, b) == oracle::series_binom(a, b));
      }
    }
  }

  TEST_CASE("Pascal holds for every sign of the top") {
    for (std::int64_t a = -20; a <= 20; ++a) {
      for (std::int64_t b = 1; b <= 15; ++b) {
        CHECK(binom_gen(a, b) == binom_gen(a - 1, b) + binom_gen(a - 1, b - 1));
      }
    }
  }

  TEST_CASE("agrees with the factorial formula in the classical range") {
    for (std::int64_t a = 0; a <= 30; ++a) {
      for (std::int64_t b = 0; b <= a; ++b) {
        CHECK(binom_gen(a, b) == factorial(a) / (factorial(b) * factorial(a - b)));
      }
    }
  }

  TEST_CASE("Vandermonde on random small arguments") {
    oracle::Gen gen(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int m = gen.uniform(0, 12), n = gen.uniform(0, 12), r = gen.uniform(0, 24);
      BigInt sum = 0;
      for (int k = 0; k <= r; ++k) sum += binom_gen(m, k) * binom_gen(n, r - k);
      CHECK(sum == binom_gen(m + n, r));
    }
  }

  TEST_CASE("large arguments do not overflow") {
    CHECK(binom_gen(200, 100) == BigInt("90548514656103281165404177077484163874504589675413336841320"));
    CHECK(factorial(30) == BigInt("265252859812191058636308480000000"));
  }

  TEST_CASE("multinomial") {
    const std::array<std::int64_t, 4> a{1, 1, 1, 1}, b{3, 0, 0, 0}, c{2, 1, 1, 0};
    CHECK(multinomial(4, a) == 24);
    CHECK(multinomial(3, b) == 1);
    CHECK(multinomial(4, c) == 12);
    const std::array<std::int64_t, 2> bad{1, 1};
    CHECK_THROWS_AS(multinomial(3, bad), Error);
    try {
      multinomial(3, bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PartsMismatch);
    }
  }

  TEST_CASE("pow_int, is_integer, to_decimal") {
    CHECK(pow_int(3, 4) == 81);
    CHECK(pow_int(-2, 3) == -8);
    CHECK(pow_int(7, 0) == 1);
    CHECK(is_integer(BigRational(6, 3)));
    BigRational half(1, 2);
    CHECK_FALSE(is_integer(half));
    CHECK(to_decimal(half) == "1/2");
    CHECK(to_decimal(BigRational(-4)) == "-4");
    CHECK(to_decimal(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
  }

  TEST_CASE("rationals stay normalized") {
    BigRational q = BigRational(1, 2) + BigRational(1, 6);
    CHECK(q.get_num() == 2);
    CHECK(q.get_den() == 3);
  }

  TEST_CASE("Series arithmetic") {
    const Series inv = Series::one_plus_x_pow(-1, 5);
    for (std::size_t j = 0; j < 5; ++j) CHECK(inv[j] == BigRational(j % 2 == 0 ? 1 : -1));
    const Series one = Series::one_plus_x_pow(1, 5) * inv;
    CHECK(one[0] == 1);
    for (std::size_t j = 1; j < 5; ++j) CHECK(one[j] == 0);
    CHECK(Series::one_plus_x_pow(3, 6).pow(2)[3] == 20);
    const Series shorter{1, 2};
    CHECK((shorter * inv).order() == 2);
    CHECK(inv.coeff(10) == 0);
    CHECK((inv - inv).coeff(2) == 0);
  }
}
