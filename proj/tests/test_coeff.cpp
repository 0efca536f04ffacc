#include <adaptsym/coeff.hpp>

#include <cmath>

#include "doctest.h"

using namespace adaptsym;

TEST_SUITE_BEGIN("coeff");

TEST_CASE("fractions normalize") {
  Frac f(6, -4);
  CHECK(f.num == -3);
  CHECK(f.den == 2);
  CHECK(Frac(0, 7) == Frac(0));
  CHECK((Frac(1, 3) + Frac(1, 6)) == Frac(1, 2));
  CHECK((Frac(2, 3) * Frac(3, 4)) == Frac(1, 2));
  CHECK((Frac(1, 2) / Frac(3, 2)) == Frac(1, 3));
}

TEST_CASE("surd multiplication table") {
  CHECK(Coeff::sqrt2() * Coeff::sqrt2() == Coeff(2));
  CHECK(Coeff::sqrt3() * Coeff::sqrt3() == Coeff(3));
  CHECK(Coeff::sqrt2() * Coeff::sqrt3() ==
        Coeff(Frac(0), Frac(0), Frac(0), Frac(1)));
  // sqrt6 * sqrt6 = 6, sqrt2 * sqrt6 = 2 sqrt3
  Coeff s6 = Coeff::sqrt2() * Coeff::sqrt3();
  CHECK(s6 * s6 == Coeff(6));
  CHECK(Coeff::sqrt2() * s6 == Coeff::sqrt3() * Coeff(2));
}

TEST_CASE("conjugate products collapse to rationals") {
  Coeff x(Frac(1), Frac(1), Frac(0), Frac(0));  // 1 + sqrt2
  Coeff y(Frac(1), Frac(-1), Frac(0), Frac(0));
  CHECK(x * y == Coeff(-1));
}

TEST_CASE("inverse") {
  Coeff x(Frac(1, 2), Frac(1, 3), Frac(-2), Frac(1, 6));
  CHECK(x * x.inverse() == Coeff(1));
  CHECK(Coeff::inv_sqrt2() == Coeff::sqrt2().inverse());
  CHECK(Coeff::inv_sqrt3() == Coeff::sqrt3().inverse());
}

TEST_CASE("numeric value") {
  CHECK(Coeff::sqrt2().value() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  Coeff x(Frac(1, 4), Frac(-1, 2), Frac(2, 3), Frac(0));
  double expect = 0.25 - 0.5 * std::sqrt(2.0) + (2.0 / 3.0) * std::sqrt(3.0);
  CHECK(x.value() == doctest::Approx(expect).epsilon(1e-15));
}

TEST_SUITE_END();
