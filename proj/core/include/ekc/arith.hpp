#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ekc {

using Int = std::int64_t;
using Integer = mpz_class;
using Rational = mpq_class;

// Nonnegative remainder; n > 0.
Int mod(Int a, Int n);
Int mulmod(Int a, Int b, Int n);
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int gcd(Int a, Int b);
// lcm with the convention lcm(a, 0) = 0.
Int lcm(Int a, Int b);
// Inverse of a modulo n; requires gcd(a, n) = 1.
Int inverse_mod(Int a, Int n);
// Exponent of the prime l in n (n != 0).
int ord(Int n, Int l);
Int ipow(Int base, int e);
std::vector<Int> prime_factors(Int n);

Int to_int(const Integer& z);
Rational make_rational(Int num, Int den = 1);
Integer floor_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
// Numerator of a rational in lowest terms (sign kept).
Integer numerator(const Rational& q);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// An element of Q/mZ with m >= 0; m = 0 means an exact rational.
class Residue {
 public:
  Residue() = default;
  Residue(Rational value, Rational modulus);
  static Residue mod1(const Rational& v) { return Residue(v, Rational(1)); }

  const Rational& value() const { return value_; }
  const Rational& modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator-() const;
  Residue scaled(const Rational& c) const;  // requires c integral when reducing mod m
  // Coarsen to Q/nZ; n must divide the current modulus (or the current modulus is 0).
  Residue reduce(const Rational& n) const;
  bool is_zero() const { return value_ == 0; }
  bool operator==(const Residue& o) const;
  bool operator!=(const Residue& o) const { return !(*this == o); }
  std::string str() const { return to_string(value_); }

 private:
  void canonicalise();
  Rational value_{0};
  Rational modulus_{0};
};

// true iff b divides a in Q (a/b is an integer); b = 0 divides only 0.
bool rational_divides(const Rational& b, const Rational& a);

}  // namespace ekc
