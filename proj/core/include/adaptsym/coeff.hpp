#pragma once

#include <cstdint>
#include <iosfwd>

namespace adaptsym {

// Exact rational with 64-bit numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) = 1). The coefficients appearing in the
// spin-adapted generators and their nested commutators have tiny
// denominators (products of 2s and 3s), so overflow is not a concern;
// it is still checked in debug builds.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n) : num(n) {}
  Frac(std::int64_t n, std::int64_t d);

  Frac operator-() const;
  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac operator/(const Frac& o) const;
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }

  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Element of the field Q(sqrt2, sqrt3): a + b*sqrt2 + c*sqrt3 + d*sqrt6.
// Closed under +,-,*,/ and exactly represents every constant produced by
// the singlet-adapted generator algebra (1/sqrt2, 1/sqrt3, 1/(2*sqrt2), ...).
struct Coeff {
  Frac a, b, c, d;

  Coeff() = default;
  Coeff(std::int64_t n) : a(n) {}
  Coeff(Frac r) : a(r) {}
  Coeff(Frac a_, Frac b_, Frac c_, Frac d_) : a(a_), b(b_), c(c_), d(d_) {}

  static Coeff sqrt2() { return Coeff{Frac(0), Frac(1), Frac(0), Frac(0)}; }
  static Coeff sqrt3() { return Coeff{Frac(0), Frac(0), Frac(1), Frac(0)}; }
  static Coeff inv_sqrt2() { return Coeff{Frac(0), Frac(1, 2), Frac(0), Frac(0)}; }
  static Coeff inv_sqrt3() { return Coeff{Frac(0), Frac(0), Frac(1, 3), Frac(0)}; }

  Coeff operator-() const { return Coeff{-a, -b, -c, -d}; }
  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff inverse() const;
  bool operator==(const Coeff& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }

  bool is_zero() const {
    return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
  }
  double value() const;
};

std::ostream& operator<<(std::ostream& os, const Coeff& c);

}  // namespace adaptsym
