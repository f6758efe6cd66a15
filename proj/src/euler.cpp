#include "eddeg/euler.hpp"

namespace eddeg {

NPoly chi_blowup() {
  // Gauss-Bonnet: chi = degree of c3.
  return chern_total_blowup().graded_piece(3).integrate();
}

NPoly chi_smooth_member() {
  // Adjunction: c(T_member) = c(T_total) / (1 + [D]) restricted to the
  // member; Gauss-Bonnet integrates c2 of that against [D].
  BlowupClass d = distance_divisor_class();
  BlowupClass chern_member =
      chern_total_blowup() * (BlowupClass::one() + d).inverse_of_unit();
  return (chern_member.graded_piece(2) * d).integrate();
}

std::vector<StratumRow> distance_divisor_strata() {
  const NPoly n = NPoly::n();
  std::vector<StratumRow> rows;
  rows.push_back({"smooth_locus", NPoly(1), MilnorModelTag::smooth,
                  model_fiber_chi(make_milnor_model(MilnorModelTag::smooth)),
                  NPoly(0)});
  // Along each line where two boundary planes meet, the divisor is a
  // transverse node except at finitely many pinch points. Off a generic
  // member the nodal curve is a sphere minus 3n + 2 points.
  rows.push_back({"pair_node_curve", NPoly::choose2(), MilnorModelTag::node,
                  model_fiber_chi(make_milnor_model(MilnorModelTag::node)),
                  NPoly(2) - (n.scaled(Rational(3)) + NPoly(2))});
  // Four pinch points on each such line.
  rows.push_back({"pair_pinch_points", NPoly::choose2(), MilnorModelTag::umbrella,
                  model_fiber_chi(make_milnor_model(MilnorModelTag::umbrella)),
                  NPoly(4)});
  // One triple point for each triple of boundary planes.
  rows.push_back({"triple_points", NPoly::choose3(), MilnorModelTag::triple,
                  model_fiber_chi(make_milnor_model(MilnorModelTag::triple)),
                  NPoly(1)});
  return rows;
}

NPoly chi_distance_divisor() {
  // chi(member) - chi(divisor) = sum over strata of mu * chi(stratum off
  // the member); only singular strata contribute.
  NPoly correction(0);
  for (const auto& row : distance_divisor_strata())
    correction += row.stratum_count.scaled(Rational(row.milnor_chi)) * row.chi_off_member;
  return chi_smooth_member() - correction;
}

NPoly chi_boundary() {
  const NPoly n = NPoly::n();
  // n boundary divisors of chi 4, pairwise meeting in spheres, triples in
  // points, no fourfold intersections.
  return n.scaled(Rational(4)) - NPoly::choose2().scaled(Rational(2)) +
         NPoly::choose3();
}

NPoly chi_distance_boundary() {
  const NPoly n = NPoly::n();
  // Curve census: per camera two conjugate sphere curves (chi 2 each), per
  // pair one sphere curve; each pair line meets the four adjacent curves in
  // single points, and the pair curves of a triple share one point.
  NPoly spheres = n.scaled(Rational(2)) + n.scaled(Rational(2)) +
                  NPoly::choose2().scaled(Rational(2));
  NPoly pair_meets = (n * (n - NPoly(1))).scaled(Rational(2));
  NPoly triple_meets = NPoly::choose3().scaled(Rational(2));
  return spheres - pair_meets - triple_meets;
}

NPoly ed_degree_via_euler() {
  // The variety has odd dimension 3, so the signed Euler characteristic of
  // the affine piece off the distance sphere is negated.
  NPoly chi_off = chi_blowup() - chi_distance_divisor() - chi_boundary() +
                  chi_distance_boundary();
  return -chi_off;
}

EulerRow euler_row(long n) {
  EulerRow row;
  row.n = n;
  row.chi_total = chi_blowup().eval_int(n);
  row.chi_member = chi_smooth_member().eval_int(n);
  row.chi_divisor = chi_distance_divisor().eval_int(n);
  row.chi_infinity = chi_boundary().eval_int(n);
  row.chi_intersection = chi_distance_boundary().eval_int(n);
  row.ed_degree = ed_degree_via_euler().eval_int(n);
  return row;
}

}  // namespace eddeg
