#include "eddeg/chow.hpp"

#include "eddeg/errors.hpp"

namespace eddeg {

BlowupClass BlowupClass::operator+(const BlowupClass& o) const {
  BlowupClass r;
  r.c0_ = c0_ + o.c0_;
  r.h1_ = h1_ + o.h1_;
  r.e1_ = e1_ + o.e1_;
  r.h2_ = h2_ + o.h2_;
  r.e2_ = e2_ + o.e2_;
  r.h3_ = h3_ + o.h3_;
  r.e3_ = e3_ + o.e3_;
  return r;
}

BlowupClass BlowupClass::operator-(const BlowupClass& o) const {
  BlowupClass r;
  r.c0_ = c0_ - o.c0_;
  r.h1_ = h1_ - o.h1_;
  r.e1_ = e1_ - o.e1_;
  r.h2_ = h2_ - o.h2_;
  r.e2_ = e2_ - o.e2_;
  r.h3_ = h3_ - o.h3_;
  r.e3_ = e3_ - o.e3_;
  return r;
}

BlowupClass BlowupClass::operator*(const BlowupClass& o) const {
  // H- and E-towers never mix: H * E_i = 0 and E_i * E_j = 0 for i != j, so
  // (sum E_i)^k = sum E_i^k. Degrees above 3 vanish.
  BlowupClass r;
  r.c0_ = c0_ * o.c0_;
  r.h1_ = c0_ * o.h1_ + h1_ * o.c0_;
  r.e1_ = c0_ * o.e1_ + e1_ * o.c0_;
  r.h2_ = c0_ * o.h2_ + h2_ * o.c0_ + h1_ * o.h1_;
  r.e2_ = c0_ * o.e2_ + e2_ * o.c0_ + e1_ * o.e1_;
  r.h3_ = c0_ * o.h3_ + h3_ * o.c0_ + h1_ * o.h2_ + h2_ * o.h1_;
  r.e3_ = c0_ * o.e3_ + e3_ * o.c0_ + e1_ * o.e2_ + e2_ * o.e1_;
  return r;
}

BlowupClass BlowupClass::scaled(const NPoly& f) const {
  BlowupClass r;
  r.c0_ = c0_ * f;
  r.h1_ = h1_ * f;
  r.e1_ = e1_ * f;
  r.h2_ = h2_ * f;
  r.e2_ = e2_ * f;
  r.h3_ = h3_ * f;
  r.e3_ = e3_ * f;
  return r;
}

bool BlowupClass::operator==(const BlowupClass& o) const {
  return c0_ == o.c0_ && h1_ == o.h1_ && e1_ == o.e1_ && h2_ == o.h2_ &&
         e2_ == o.e2_ && h3_ == o.h3_ && e3_ == o.e3_;
}

BlowupClass BlowupClass::graded_piece(int d) const {
  BlowupClass r;
  switch (d) {
    case 0: r.c0_ = c0_; break;
    case 1: r.h1_ = h1_; r.e1_ = e1_; break;
    case 2: r.h2_ = h2_; r.e2_ = e2_; break;
    case 3: r.h3_ = h3_; r.e3_ = e3_; break;
    default: break;
  }
  return r;
}

bool BlowupClass::is_zero() const {
  return c0_.is_zero() && h1_.is_zero() && e1_.is_zero() && h2_.is_zero() &&
         e2_.is_zero() && h3_.is_zero() && e3_.is_zero();
}

BlowupClass BlowupClass::inverse_of_unit() const {
  if (!(c0_ == NPoly(1)))
    throw InternalError("inverse_of_unit needs degree-0 part 1");
  BlowupClass x = *this - one();
  BlowupClass x2 = x * x;
  BlowupClass x3 = x2 * x;
  return one() - x + x2 - x3;
}

NPoly BlowupClass::integrate() const {
  for (int d = 0; d < 3; ++d)
    if (!graded_piece(d).is_zero())
      throw NotTopDegree("class is not concentrated in top degree: " + describe());
  // Each of the n aggregated exceptional cubes integrates to 1.
  return h3_ + e3_ * NPoly::n();
}

std::string BlowupClass::describe() const {
  auto piece = [](const NPoly& f, const char* name) -> std::string {
    if (f.is_zero()) return "";
    return std::string(" + (") + f.to_string() + ")*" + name;
  };
  std::string s;
  s += piece(c0_, "1");
  s += piece(h1_, "H");
  s += piece(e1_, "SE");
  s += piece(h2_, "H^2");
  s += piece(e2_, "SE^2");
  s += piece(h3_, "H^3");
  s += piece(e3_, "SE^3");
  return s.empty() ? "0" : s.substr(3);
}

BlowupClass chern_total_blowup() {
  const BlowupClass one = BlowupClass::one();
  const BlowupClass h = BlowupClass::hyperplane();
  const BlowupClass e = BlowupClass::exceptional_sum();
  BlowupClass ambient = (one + h) * (one + h) * (one + h) * (one + h);
  // Per blown-up point: (1+E)(1-E)^3 - 1, summed over the points. The
  // aggregated E computes the sum directly since distinct E_i never meet.
  BlowupClass correction = (one + e) * (one - e) * (one - e) * (one - e) - one;
  return ambient + correction;
}

BlowupClass distance_divisor_class() {
  // Twice the pullback of a general line section through each camera chart:
  // each projection pulls a line back to H - E_i, and the distance sphere
  // has bidegree 2 in every image plane.
  return BlowupClass::hyperplane().scaled(NPoly::n().scaled(Rational(2))) -
         BlowupClass::exceptional_sum().scaled(NPoly(2));
}

}  // namespace eddeg
