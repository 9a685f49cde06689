#include "ekc/arith.hpp"

#include <numeric>

#include "ekc/error.hpp"

namespace ekc {

Int mod(Int a, Int n) {
  ensure(n > 0, "mod: nonpositive modulus");
  Int r = a % n;
  return r < 0 ? r + n : r;
}

Int mulmod(Int a, Int b, Int n) {
  __int128 r = static_cast<__int128>(mod(a, n)) * mod(b, n) % n;
  return static_cast<Int>(r);
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw MathError("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw MathError("integer overflow in multiplication");
  return r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  return checked_mul(std::abs(a) / g, std::abs(b));
}

Int inverse_mod(Int a, Int n) {
  if (n == 1) return 0;
  Int t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr != 0) {
    Int q = r / nr;
    Int tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  require(r == 1, "inverse_mod: not a unit");
  return mod(t, n);
}

int ord(Int n, Int l) {
  ensure(n != 0 && l > 1, "ord: bad arguments");
  int e = 0;
  while (n % l == 0) {
    n /= l;
    ++e;
  }
  return e;
}

Int ipow(Int base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  n = std::abs(n);
  for (Int l = 2; l * l <= n; ++l) {
    if (n % l == 0) {
      out.push_back(l);
      while (n % l == 0) n /= l;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int to_int(const Integer& z) {
  require(z.fits_slong_p(), "integer does not fit in 64 bits");
  return z.get_si();
}

Rational make_rational(Int num, Int den) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Integer numerator(const Rational& q) { return q.get_num(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw MathError("bad rational: " + s);
  q.canonicalize();
  return q;
}

bool rational_divides(const Rational& b, const Rational& a) {
  if (b == 0) return a == 0;
  Rational r = a / b;
  return r.get_den() == 1;
}

Residue::Residue(Rational value, Rational modulus) : value_(std::move(value)), modulus_(std::move(modulus)) {
  require(modulus_ >= 0, "negative residue modulus");
  canonicalise();
}

void Residue::canonicalise() {
  value_.canonicalize();
  modulus_.canonicalize();
  if (modulus_ > 0) {
    Rational k(floor(value_ / modulus_));
    value_ -= k * modulus_;
  }
}

Residue Residue::operator+(const Residue& o) const {
  require(modulus_ == o.modulus_, "residue modulus mismatch");
  return Residue(value_ + o.value_, modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  require(modulus_ == o.modulus_, "residue modulus mismatch");
  return Residue(value_ - o.value_, modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

Residue Residue::scaled(const Rational& c) const {
  require(modulus_ == 0 || c.get_den() == 1, "non-integral scaling of a residue");
  return Residue(value_ * c, modulus_);
}

Residue Residue::reduce(const Rational& n) const {
  require(n >= 0, "negative modulus");
  if (n == modulus_) return *this;
  require(n != 0, "cannot lift a residue to Q");
  require(modulus_ == 0 || rational_divides(n, modulus_), "illegal coarsening of residue modulus");
  return Residue(value_, n);
}

bool Residue::operator==(const Residue& o) const { return modulus_ == o.modulus_ && value_ == o.value_; }

}  // namespace ekc
