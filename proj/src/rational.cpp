#include "eddeg/rational.hpp"

#include "eddeg/errors.hpp"

namespace eddeg {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(n, d);
  canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw SyntaxError("malformed rational literal '" + text + "'", 0);
  q.canonicalize();
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  return Rational(q);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace eddeg
