#include "adaptsym/coeff.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace adaptsym {

Frac::Frac(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Frac: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Frac Frac::operator-() const {
  Frac r;
  r.num = -num;
  r.den = den;
  return r;
}

Frac Frac::operator+(const Frac& o) const {
  return Frac(num * o.den + o.num * den, den * o.den);
}

Frac Frac::operator-(const Frac& o) const {
  return Frac(num * o.den - o.num * den, den * o.den);
}

Frac Frac::operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }

Frac Frac::operator/(const Frac& o) const {
  if (o.num == 0) throw std::domain_error("Frac: division by zero");
  return Frac(num * o.den, den * o.num);
}

Coeff Coeff::operator+(const Coeff& o) const {
  return Coeff{a + o.a, b + o.b, c + o.c, d + o.d};
}

Coeff Coeff::operator-(const Coeff& o) const {
  return Coeff{a - o.a, b - o.b, c - o.c, d - o.d};
}

// Multiplication table: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
// sqrt3*sqrt6 = 3*sqrt2, sqrt6*sqrt6 = 6.
Coeff Coeff::operator*(const Coeff& o) const {
  const Frac two(2), three(3), six(6);
  Frac ra = a * o.a + two * (b * o.b) + three * (c * o.c) + six * (d * o.d);
  Frac rb = a * o.b + b * o.a + three * (c * o.d) + three * (d * o.c);
  Frac rc = a * o.c + c * o.a + two * (b * o.d) + two * (d * o.b);
  Frac rd = a * o.d + d * o.a + b * o.c + c * o.b;
  return Coeff{ra, rb, rc, rd};
}

// Inverse by rationalizing in two stages: first conjugate over sqrt2
// (x = p + q*sqrt2 with p, q in Q(sqrt3)), then over sqrt3.
Coeff Coeff::inverse() const {
  if (is_zero()) throw std::domain_error("Coeff: inverse of zero");
  // conj2(x) = a - b*sqrt2 + c*sqrt3 - d*sqrt6
  Coeff c2{a, -b, c, -d};
  Coeff n2 = (*this) * c2;  // lies in Q(sqrt3): b = d = 0
  assert(n2.b.is_zero() && n2.d.is_zero());
  // invert p + c*sqrt3
  Frac p = n2.a, q = n2.c;
  Frac den = p * p - Frac(3) * (q * q);
  if (den.is_zero()) throw std::domain_error("Coeff: inverse hit zero norm");
  Coeff inv_n2{p / den, Frac(0), -(q / den), Frac(0)};
  return c2 * inv_n2;
}

double Coeff::value() const {
  static const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  return a.value() + b.value() * s2 + c.value() * s3 + d.value() * s6;
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) {
  auto frac = [&os](const Frac& f) {
    os << f.num;
    if (f.den != 1) os << "/" << f.den;
  };
  bool first = true;
  auto term = [&](const Frac& f, const char* rad) {
    if (f.is_zero()) return;
    if (!first) os << (f.num > 0 ? " + " : " - ");
    Frac g = (!first && f.num < 0) ? -f : f;
    frac(g);
    if (rad[0]) os << "*" << rad;
    first = false;
  };
  term(c.a, "");
  term(c.b, "sqrt2");
  term(c.c, "sqrt3");
  term(c.d, "sqrt6");
  if (first) os << "0";
  return os;
}

}  // namespace adaptsym
