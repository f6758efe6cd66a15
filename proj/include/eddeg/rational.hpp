#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eddeg {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator; the canonical zero is 0/1. Thin value wrapper over GMP.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : q_(static_cast<long>(n)) {}
  Rational(long n, long d);
  explicit Rational(const mpq_class& q) : q_(q) { canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  static Rational from_string(const std::string& text);

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  Rational inverse() const;
  Rational mul_int(long k) const { return Rational(mpq_class(q_ * k)); }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }

  // "a" for integers, "a/b" otherwise.
  std::string to_string() const;

 private:
  void canonicalize() { q_.canonicalize(); }
  mpq_class q_;
};

}  // namespace eddeg
