#pragma once

#include <string>
#include <vector>

#include "eddeg/rational.hpp"

namespace eddeg {

// Univariate polynomial in the symbol n over Q; the currency of the
// symbolic Euler-characteristic computations.
class NPoly {
 public:
  NPoly() = default;
  NPoly(long k) : c_{Rational(k)} { trim(); }  // NOLINT(google-explicit-constructor)
  NPoly(Rational k) : c_{std::move(k)} { trim(); }  // NOLINT
  explicit NPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  // The symbol n itself.
  static NPoly n() { return NPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
  // n(n-1)/2 and n(n-1)(n-2)/6.
  static NPoly choose2();
  static NPoly choose3();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }

  NPoly operator-() const;
  NPoly operator+(const NPoly& o) const;
  NPoly operator-(const NPoly& o) const;
  NPoly operator*(const NPoly& o) const;
  NPoly& operator+=(const NPoly& o) { return *this = *this + o; }
  NPoly& operator-=(const NPoly& o) { return *this = *this - o; }
  NPoly scaled(const Rational& r) const;

  bool operator==(const NPoly& o) const { return c_ == o.c_; }
  bool operator!=(const NPoly& o) const { return c_ != o.c_; }

  Rational eval(const Rational& x) const;
  // Evaluation that must land on an integer; throws NotInteger otherwise.
  long long eval_int(long x) const;

  // "9/2*n^3 - 21/2*n^2 + 8*n - 4"
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace eddeg
