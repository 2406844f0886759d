#pragma once

// Exact field arithmetic shared by every other module: arbitrary-precision
// rationals (GMP-backed) and prime fields F_p.  No floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace sph {

using BigInt = mpz_class;
using Rational = mpq_class;

struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct division_by_zero : field_error {
  division_by_zero() : field_error("division by zero") {}
};
struct field_mismatch : field_error {
  field_mismatch() : field_error("operands belong to different fields") {}
};

bool is_prime(long n);

/// An element of F_p, p prime.  The modulus is checked at construction.
class PrimeFieldElem {
 public:
  PrimeFieldElem(long value, long p);

  long residue() const { return r_; }
  long modulus() const { return p_; }

  PrimeFieldElem operator+(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-(const PrimeFieldElem& o) const;
  PrimeFieldElem operator*(const PrimeFieldElem& o) const;
  PrimeFieldElem operator/(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-() const;
  PrimeFieldElem inverse() const;
  PrimeFieldElem pow(const BigInt& e) const;

  bool operator==(const PrimeFieldElem& o) const {
    return p_ == o.p_ && r_ == o.r_;
  }

 private:
  void check(const PrimeFieldElem& o) const {
    if (p_ != o.p_) throw field_mismatch();
  }
  long r_;
  long p_;
};

/// Tagged union of Rational and PrimeFieldElem.  Binary operations demand
/// matching tags (and moduli); characteristic 0 is the Rational tag.
class FieldValue {
 public:
  FieldValue() : v_(Rational(0)) {}
  FieldValue(const Rational& q) : v_(q) {}
  FieldValue(const PrimeFieldElem& e) : v_(e) {}
  static FieldValue rational(long num, long den = 1);
  static FieldValue mod_p(long value, long p) {
    return FieldValue(PrimeFieldElem(value, p));
  }
  /// The integer n in the field of characteristic p (p = 0 means Q).
  static FieldValue of_int(long n, long p);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  long characteristic() const {
    return is_rational() ? 0 : std::get<PrimeFieldElem>(v_).modulus();
  }
  const Rational& rational_value() const { return std::get<Rational>(v_); }
  const PrimeFieldElem& prime_value() const {
    return std::get<PrimeFieldElem>(v_);
  }

  bool is_zero() const;
  bool is_one() const;

  FieldValue operator+(const FieldValue& o) const;
  FieldValue operator-(const FieldValue& o) const;
  FieldValue operator*(const FieldValue& o) const;
  FieldValue operator/(const FieldValue& o) const;
  FieldValue operator-() const;
  FieldValue inverse() const;
  FieldValue pow(const BigInt& e) const;

  bool operator==(const FieldValue& o) const;
  bool operator!=(const FieldValue& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check(const FieldValue& o) const;
  std::variant<Rational, PrimeFieldElem> v_;
};

FieldValue field_inverse(const FieldValue& x);

/// Least e <= cap with x^e = 1, or nullopt ("exceeds cap").  x must be nonzero.
std::optional<long> multiplicative_order(const FieldValue& x, long cap);

}  // namespace sph
