#include <cmath>
#include <numbers>
#include <random>

#include "coxtwist/cyclotomic.hpp"
#include "coxtwist/error.hpp"
#include "doctest.h"

using namespace coxtwist;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);
  auto p105 = cyclotomic_polynomial(105);
  CHECK(p105[7] == -2);
  CHECK(CyclotomicRing(120).degree() == 32);
}

TEST_CASE("embedding identities for twice the cosines") {
  auto R = CyclotomicRing::get(120);
  CHECK(CycNumber::two_cos(R, 2).is_zero());
  CHECK(CycNumber::two_cos(R, 3) == CycNumber::integer(R, 1));
  auto g = CycNumber::two_cos(R, 5);
  CHECK(g * g == g + CycNumber::integer(R, 1));
  auto h = CycNumber::two_cos(R, 6);
  CHECK(h * h == CycNumber::integer(R, 3));
  auto f = CycNumber::two_cos(R, 4);
  CHECK(f * f == CycNumber::integer(R, 2));
  // 4B^2 + 2B - 1 = 0 for B = -cos(pi/5)
  auto B = -g * CycNumber(R, R->constant(1), 2);
  CHECK((CycNumber::integer(R, 4) * B * B + CycNumber::integer(R, 2) * B
         - CycNumber::integer(R, 1))
            .is_zero());
  CHECK(std::fabs(static_cast<double>(g.to_long_double()) - 2 * std::cos(std::numbers::pi / 5))
        < 1e-12);
}

TEST_CASE("field inverse") {
  auto            R = CyclotomicRing::get(24);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = R->zero();
    for (auto& x : c) {
      x = coeff(rng);
    }
    CycNumber a(R, c, 1 + trial % 5);
    if (a.is_zero()) {
      continue;
    }
    CHECK(a * a.inverse() == CycNumber::integer(R, 1));
  }
  CHECK_THROWS(CycNumber::integer(R, 0).inverse());
}

TEST_CASE("overflow is reported, never wrapped") {
  auto R   = CyclotomicRing::get(12);
  auto big = CycNumber::integer(R, std::int64_t{1} << 40);
  CHECK_THROWS_AS(big * big * big, ArithmeticLimit);
}

TEST_CASE("powers of the root of unity") {
  auto R = CyclotomicRing::get(10);
  CHECK(R->zeta_power(10) == R->constant(1));
  CHECK(R->zeta_power(5) == R->constant(-1));
  CHECK(R->zeta_power(-1) == R->zeta_power(9));
  CHECK(R->zeta_power(23) == R->zeta_power(3));
}
