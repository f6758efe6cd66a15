#pragma once

#include "eddeg/npoly.hpp"

namespace eddeg {

// Class in the Chow ring of P^3 blown up at n general points, truncated at
// degree 3, with the n exceptional divisors aggregated: every input here is
// symmetric in the blown-up points, so a class is determined by the
// coefficients of {1, H, sum E_i, H^2, sum E_i^2, H^3, sum E_i^3}. The
// aggregation is compatible with the products H*E_i = 0 and E_i*E_j = 0 for
// i != j, and the degree map sends H^3 -> 1 and each E_i^3 -> 1.
class BlowupClass {
 public:
  BlowupClass() = default;

  static BlowupClass scalar(NPoly a) {
    BlowupClass c;
    c.c0_ = std::move(a);
    return c;
  }
  static BlowupClass one() { return scalar(NPoly(1)); }
  // H: the pullback of a general hyperplane.
  static BlowupClass hyperplane() {
    BlowupClass c;
    c.h1_ = NPoly(1);
    return c;
  }
  // Sum of the n exceptional planes.
  static BlowupClass exceptional_sum() {
    BlowupClass c;
    c.e1_ = NPoly(1);
    return c;
  }

  const NPoly& part_1() const { return c0_; }
  const NPoly& part_h() const { return h1_; }
  const NPoly& part_e() const { return e1_; }
  const NPoly& part_h2() const { return h2_; }
  const NPoly& part_e2() const { return e2_; }
  const NPoly& part_h3() const { return h3_; }
  const NPoly& part_e3() const { return e3_; }

  BlowupClass operator+(const BlowupClass& o) const;
  BlowupClass operator-(const BlowupClass& o) const;
  BlowupClass operator*(const BlowupClass& o) const;
  BlowupClass& operator+=(const BlowupClass& o) { return *this = *this + o; }
  BlowupClass scaled(const NPoly& f) const;

  bool operator==(const BlowupClass& o) const;

  // The degree-d graded piece (0 <= d <= 3).
  BlowupClass graded_piece(int d) const;
  bool is_zero() const;

  // Multiplicative inverse of a class with degree-0 part 1, truncated at
  // degree 3: 1 - x + x^2 - x^3 for x the positive-degree part.
  BlowupClass inverse_of_unit() const;

  // Degree map on the top graded piece; throws NotTopDegree when a lower
  // piece survives. Symbolic in n (each of the n exceptional cubes counts 1).
  NPoly integrate() const;

  std::string describe() const;

 private:
  NPoly c0_, h1_, e1_, h2_, e2_, h3_, e3_;
};

// Total Chern class of the blowup of P^3 at n points:
// (1+H)^4 + sum_i ((1+E_i)(1-E_i)^3 - 1), truncated at degree 3.
BlowupClass chern_total_blowup();

// Class of the distance-sphere divisor: 2n H - 2 sum E_i.
BlowupClass distance_divisor_class();

}  // namespace eddeg
