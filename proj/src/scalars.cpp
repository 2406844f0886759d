#include "sph/scalars.hpp"

namespace sph {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeFieldElem::PrimeFieldElem(long value, long p) : p_(p) {
  if (!is_prime(p)) throw field_error("modulus " + std::to_string(p) + " is not prime");
  r_ = value % p;
  if (r_ < 0) r_ += p;
}

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem& o) const {
  check(o);
  return PrimeFieldElem(r_ + o.r_, p_);
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem& o) const {
  check(o);
  return PrimeFieldElem(r_ - o.r_, p_);
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem& o) const {
  check(o);
  return PrimeFieldElem((r_ * o.r_) % p_, p_);
}

PrimeFieldElem PrimeFieldElem::operator/(const PrimeFieldElem& o) const {
  check(o);
  return *this * o.inverse();
}

PrimeFieldElem PrimeFieldElem::operator-() const { return PrimeFieldElem(-r_, p_); }

PrimeFieldElem PrimeFieldElem::inverse() const {
  if (r_ == 0) throw division_by_zero();
  // extended Euclid
  long a = r_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    long q = a / b;
    long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return PrimeFieldElem(x0, p_);
}

PrimeFieldElem PrimeFieldElem::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt k = e;
  PrimeFieldElem base = *this, acc(1, p_);
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

FieldValue FieldValue::rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return FieldValue(q);
}

FieldValue FieldValue::of_int(long n, long p) {
  if (p == 0) return rational(n);
  return mod_p(n, p);
}

bool FieldValue::is_zero() const {
  if (is_rational()) return rational_value() == 0;
  return prime_value().residue() == 0;
}

bool FieldValue::is_one() const {
  if (is_rational()) return rational_value() == 1;
  return prime_value().residue() == 1;
}

void FieldValue::check(const FieldValue& o) const {
  if (is_rational() != o.is_rational()) throw field_mismatch();
  if (!is_rational() && prime_value().modulus() != o.prime_value().modulus())
    throw field_mismatch();
}

FieldValue FieldValue::operator+(const FieldValue& o) const {
  check(o);
  if (is_rational()) return FieldValue(Rational(rational_value() + o.rational_value()));
  return FieldValue(prime_value() + o.prime_value());
}

FieldValue FieldValue::operator-(const FieldValue& o) const {
  check(o);
  if (is_rational()) return FieldValue(Rational(rational_value() - o.rational_value()));
  return FieldValue(prime_value() - o.prime_value());
}

FieldValue FieldValue::operator*(const FieldValue& o) const {
  check(o);
  if (is_rational()) return FieldValue(Rational(rational_value() * o.rational_value()));
  return FieldValue(prime_value() * o.prime_value());
}

FieldValue FieldValue::operator/(const FieldValue& o) const {
  check(o);
  if (o.is_zero()) throw division_by_zero();
  if (is_rational()) return FieldValue(Rational(rational_value() / o.rational_value()));
  return FieldValue(prime_value() / o.prime_value());
}

FieldValue FieldValue::operator-() const {
  if (is_rational()) return FieldValue(Rational(-rational_value()));
  return FieldValue(-prime_value());
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw division_by_zero();
  if (is_rational()) return FieldValue(Rational(1 / rational_value()));
  return FieldValue(prime_value().inverse());
}

FieldValue FieldValue::pow(const BigInt& e) const {
  if (!is_rational()) return FieldValue(prime_value().pow(e));
  if (e < 0) return inverse().pow(-e);
  if (!e.fits_ulong_p()) throw field_error("rational power exponent too large");
  unsigned long k = e.get_ui();
  Rational acc(1), base = rational_value();
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return FieldValue(acc);
}

bool FieldValue::operator==(const FieldValue& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return rational_value() == o.rational_value();
  return prime_value() == o.prime_value();
}

std::string FieldValue::str() const {
  if (is_rational()) return rational_value().get_str();
  return std::to_string(prime_value().residue());
}

FieldValue field_inverse(const FieldValue& x) { return x.inverse(); }

std::optional<long> multiplicative_order(const FieldValue& x, long cap) {
  if (x.is_zero()) throw field_error("zero has no multiplicative order");
  FieldValue acc = x;
  for (long e = 1; e <= cap; ++e) {
    if (acc.is_one()) return e;
    acc = acc * x;
  }
  return std::nullopt;
}

}  // namespace sph
