#include "eddeg/npoly.hpp"

#include "eddeg/errors.hpp"

namespace eddeg {

NPoly NPoly::choose2() {
  NPoly v = n();
  return (v * (v - NPoly(1))).scaled(Rational(1, 2));
}

NPoly NPoly::choose3() {
  NPoly v = n();
  return (v * (v - NPoly(1)) * (v - NPoly(2))).scaled(Rational(1, 6));
}

NPoly NPoly::operator-() const {
  NPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

NPoly NPoly::operator+(const NPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return NPoly(std::move(c));
}

NPoly NPoly::operator-(const NPoly& o) const { return *this + (-o); }

NPoly NPoly::operator*(const NPoly& o) const {
  if (c_.empty() || o.c_.empty()) return NPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return NPoly(std::move(c));
}

NPoly NPoly::scaled(const Rational& r) const {
  NPoly out(*this);
  for (auto& c : out.c_) c *= r;
  out.trim();
  return out;
}

Rational NPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

long long NPoly::eval_int(long x) const {
  Rational v = eval(Rational(x));
  if (!v.is_integer())
    throw NotInteger("value " + v.to_string() + " at n=" + std::to_string(x) +
                     " is not an integer");
  return v.numerator().get_si();
}

std::string NPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].to_string();
    bool negative = coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (i == 0) {
      power = "";
    } else if (i == 1) {
      power = "n";
    } else {
      power = "n^" + std::to_string(i);
    }
    if (power.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += power;
    } else {
      out += coeff + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace eddeg
