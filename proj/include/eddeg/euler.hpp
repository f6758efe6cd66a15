#pragma once

#include <string>
#include <vector>

#include "eddeg/chow.hpp"
#include "eddeg/milnor.hpp"
#include "eddeg/npoly.hpp"

namespace eddeg {

// Topological route to the ED degree of the multiview variety: Euler
// characteristics of the compactified total space, of the divisor cut out
// by a generic distance sphere, and of the boundary at infinity, combined
// by inclusion-exclusion. Everything is exact and symbolic in the camera
// count n; evaluate the returned polynomials for concrete values.

// chi of P^3 blown up at n points: 2n + 4, via Gauss-Bonnet on the total
// Chern class.
NPoly chi_blowup();

// chi of a smooth member of the distance-sphere linear system:
// 8n^3 - 16n^2 + 12n.
NPoly chi_smooth_member();

// Whitney strata of the distance-sphere divisor with their local models and
// the Euler characteristics of the strata off a generic smooth member.
struct StratumRow {
  std::string name;
  NPoly stratum_count;     // number of strata of this shape
  MilnorModelTag model;
  long long milnor_chi;    // reduced fiber chi of the local model
  NPoly chi_off_member;    // chi(stratum minus a generic member)
};
std::vector<StratumRow> distance_divisor_strata();

// chi of the (singular) distance-sphere divisor itself: 4n^3 - 9n^2 + 9n,
// by correcting the smooth member with the strata's Milnor data.
NPoly chi_distance_divisor();

// chi of the boundary at infinity: n^3/6 - 3n^2/2 + 16n/3, by
// inclusion-exclusion over 1-, 2- and 3-fold intersections.
NPoly chi_boundary();

// chi of (distance divisor) ∩ (boundary): -n^3/3 + 13n/3, via the census of
// the boundary curves and their intersections.
NPoly chi_distance_boundary();

// The ED degree: -(chi_blowup - chi_distance_divisor - chi_boundary +
// chi_distance_boundary), i.e. 9/2 n^3 - 21/2 n^2 + 8n - 4.
NPoly ed_degree_via_euler();

// One row of the verification table at a concrete camera count.
struct EulerRow {
  long n;
  long long chi_total;
  long long chi_member;
  long long chi_divisor;
  long long chi_infinity;
  long long chi_intersection;
  long long ed_degree;
};
EulerRow euler_row(long n);

}  // namespace eddeg
