#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eddeg/euler.hpp"
#include "eddeg/multiview.hpp"
#include "eddeg/parse.hpp"

using namespace eddeg;

namespace {

NPoly npoly(std::vector<Rational> ascending) { return NPoly(std::move(ascending)); }

}  // namespace

TEST_CASE("npoly arithmetic and printing") {
  NPoly n = NPoly::n();
  NPoly f = n * n * n;
  CHECK(f.eval_int(3) == 27);
  CHECK(NPoly::choose2().eval_int(5) == 10);
  CHECK(NPoly::choose3().eval_int(6) == 20);
  NPoly ed = npoly({Rational(-4), Rational(8), Rational(-21, 2), Rational(9, 2)});
  CHECK(ed.to_string() == "9/2*n^3 - 21/2*n^2 + 8*n - 4");
  CHECK(ed.eval_int(3) == 47);
  CHECK_THROWS_AS(npoly({Rational(1, 2)}).eval_int(1), NotInteger);
}

TEST_CASE("degree map normalizations") {
  BlowupClass h = BlowupClass::hyperplane();
  BlowupClass e = BlowupClass::exceptional_sum();
  CHECK((h * h * h).integrate() == NPoly(1));
  CHECK((h * h * e).is_zero());
  // Each exceptional cube counts one; aggregated over n points.
  CHECK((e * e * e).integrate() == NPoly::n());
  CHECK((e * e * e).integrate().eval_int(1) == 1);
  CHECK_THROWS_AS((BlowupClass::one() + h * h * h).integrate(), NotTopDegree);
}

TEST_CASE("total Chern class of the blown-up space") {
  BlowupClass c = chern_total_blowup();
  CHECK(c.graded_piece(0) == BlowupClass::one());
  // c1 = 4H - 2 sum E_i.
  CHECK(c.graded_piece(1) ==
        BlowupClass::hyperplane().scaled(NPoly(4)) -
            BlowupClass::exceptional_sum().scaled(NPoly(2)));
  // c2 = 6H^2: the exceptional degree-2 coefficient cancels.
  BlowupClass h = BlowupClass::hyperplane();
  CHECK(c.graded_piece(2) == (h * h).scaled(NPoly(6)));
  CHECK(c.graded_piece(3).integrate() == NPoly(2) * NPoly::n() + NPoly(4));

  // Noether's formula pins the expansion: chi(O) = 1 on a rational
  // threefold, so the degree of c1 c2 is 24 independently of n.
  CHECK((c.graded_piece(1) * c.graded_piece(2)).integrate() == NPoly(24));
}

TEST_CASE("chi of the blown-up space") {
  // One blowup: 4 + 3 - 1 from additivity.
  CHECK(chi_blowup().eval_int(1) == 6);
  CHECK(chi_blowup().eval_int(2) == 8);
  CHECK(chi_blowup().eval_int(3) == 10);
  CHECK(chi_blowup() == NPoly(2) * NPoly::n() + NPoly(4));
}

TEST_CASE("distance divisor class") {
  BlowupClass d = distance_divisor_class();
  BlowupClass h = BlowupClass::hyperplane();
  BlowupClass e = BlowupClass::exceptional_sum();
  CHECK(d == h.scaled(NPoly(2) * NPoly::n()) - e.scaled(NPoly(2)));
  // Meets a general line in 2n points.
  CHECK((d * h * h).integrate() == NPoly(2) * NPoly::n());
  // Against the exceptional squares the minus convention gives -2 per point.
  CHECK((d * e * e).integrate() == NPoly(-2) * NPoly::n());
}

TEST_CASE("series inversion is a truncated inverse") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    BlowupClass d =
        BlowupClass::hyperplane().scaled(NPoly(Rational(rng.int_in(-9, 9)))) +
        BlowupClass::exceptional_sum().scaled(NPoly(Rational(rng.int_in(-9, 9))));
    BlowupClass unit = BlowupClass::one() + d;
    CHECK(unit * unit.inverse_of_unit() == BlowupClass::one());
  }
}

TEST_CASE("chi of a smooth member of the distance system") {
  CHECK(chi_smooth_member().eval_int(2) == 24);
  CHECK(chi_smooth_member().eval_int(3) == 108);
  CHECK(chi_smooth_member() ==
        npoly({Rational(0), Rational(12), Rational(-16), Rational(8)}));

  // The degree-2 piece of c(T)/(1+[D]) is (4n^2 - 8n + 6) H^2 on the nose:
  // the exceptional part cancels exactly for the adopted sign of [D].
  BlowupClass h = BlowupClass::hyperplane();
  BlowupClass ratio = chern_total_blowup() *
                      (BlowupClass::one() + distance_divisor_class()).inverse_of_unit();
  CHECK(ratio.graded_piece(2) ==
        (h * h).scaled(npoly({Rational(6), Rational(-8), Rational(4)})));
}

TEST_CASE("the printed plus sign fails the Gauss-Bonnet cross-check") {
  // With [D] = 2nH + 2*sumE the exceptional degree-2 coefficient becomes 8
  // instead of 0, and the resulting chi contradicts 8n^3 - 16n^2 + 12n:
  // both conventions are evaluated, and only the minus sign is consistent.
  BlowupClass h = BlowupClass::hyperplane();
  BlowupClass e = BlowupClass::exceptional_sum();
  BlowupClass d_plus =
      h.scaled(NPoly(2) * NPoly::n()) + e.scaled(NPoly(2));
  BlowupClass ratio =
      chern_total_blowup() * (BlowupClass::one() + d_plus).inverse_of_unit();
  CHECK(ratio.graded_piece(2) ==
        (h * h).scaled(npoly({Rational(6), Rational(-8), Rational(4)})) +
            (e * e).scaled(NPoly(8)));
  NPoly chi_plus = (ratio.graded_piece(2) * d_plus).integrate();
  CHECK(chi_plus != chi_smooth_member());
  CHECK(chi_plus - chi_smooth_member() == NPoly(16) * NPoly::n());
}

TEST_CASE("milnor numbers from the Jacobian quotient") {
  RingPtr ring = make_ring_q({"x", "y", "z"});
  std::vector<Rational> origin{Rational(0), Rational(0), Rational(0)};

  CHECK(milnor_number(parse_poly("x*y + x*z + y*z - x*y*z", ring), origin) == 1);
  CHECK(milnor_number(parse_poly("x^2 + y^2 + z^2", ring), origin) == 1);
  // Standard monomials below (x^2, y^2, z^2).
  CHECK(milnor_number(parse_poly("x^3 + y^3 + z^3", ring), origin) == 8);
  // Translation: an A1 point away from the origin.
  CHECK(milnor_number(parse_poly("(x - 1)^2 + (y - 2)^2 + z^2", ring),
                      {Rational(1), Rational(2), Rational(0)}) == 1);
  // A non-isolated singular line never stabilizes.
  CHECK_THROWS_AS(milnor_number(parse_poly("x^2", ring), origin, 12), NotIsolated);
}

TEST_CASE("model fiber Euler characteristics") {
  CHECK(model_fiber_chi(make_milnor_model(MilnorModelTag::smooth)) == 0);
  CHECK(model_fiber_chi(make_milnor_model(MilnorModelTag::node)) == -1);
  CHECK(model_fiber_chi(make_milnor_model(MilnorModelTag::umbrella)) == 1);
  CHECK(model_fiber_chi(make_milnor_model(MilnorModelTag::triple)) == 15);
}

TEST_CASE("strata of the distance divisor") {
  auto rows = distance_divisor_strata();
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].stratum_count == NPoly(1));
  CHECK(rows[0].milnor_chi == 0);
  CHECK(rows[1].stratum_count == NPoly::choose2());
  CHECK(rows[1].milnor_chi == -1);
  CHECK(rows[1].chi_off_member == NPoly(-3) * NPoly::n());
  CHECK(rows[2].stratum_count == NPoly::choose2());
  CHECK(rows[2].milnor_chi == 1);
  CHECK(rows[2].chi_off_member == NPoly(4));
  CHECK(rows[3].stratum_count == NPoly::choose3());
  CHECK(rows[3].milnor_chi == 15);
  CHECK(rows[3].chi_off_member == NPoly(1));
}

TEST_CASE("chi of the distance divisor") {
  CHECK(chi_distance_divisor().eval_int(2) == 14);
  CHECK(chi_distance_divisor().eval_int(3) == 54);
  CHECK(chi_distance_divisor() ==
        npoly({Rational(0), Rational(9), Rational(-9), Rational(4)}));
}

TEST_CASE("chi of the boundary and of the intersection") {
  CHECK(chi_boundary().eval_int(2) == 6);
  CHECK(chi_boundary().eval_int(3) == 7);
  CHECK(chi_boundary() ==
        npoly({Rational(0), Rational(16, 3), Rational(-3, 2), Rational(1, 6)}));

  CHECK(chi_distance_boundary().eval_int(2) == 6);
  CHECK(chi_distance_boundary().eval_int(3) == 4);
  CHECK(chi_distance_boundary() ==
        npoly({Rational(0), Rational(13, 3), Rational(0), Rational(-1, 3)}));

  // Binomial integrality at every small camera count.
  for (long n = 2; n <= 20; ++n) {
    CHECK_NOTHROW(chi_boundary().eval_int(n));
    CHECK_NOTHROW(chi_distance_boundary().eval_int(n));
  }
}

TEST_CASE("the inclusion-exclusion collapses to the closed form") {
  NPoly ed = ed_degree_via_euler();
  CHECK(ed == npoly({Rational(-4), Rational(8), Rational(-21, 2), Rational(9, 2)}));
  CHECK(ed.to_string() == "9/2*n^3 - 21/2*n^2 + 8*n - 4");
  CHECK(ed.eval_int(2) == 6);
  CHECK(ed.eval_int(3) == 47);

  // Exact symbolic identity between the four chi's and the closed form.
  NPoly chi_off = chi_blowup() - chi_distance_divisor() - chi_boundary() +
                  chi_distance_boundary();
  CHECK(chi_off == -ed);

  for (long n = 2; n <= 10; ++n)
    CHECK(ed.eval_int(n) == ed_degree_closed_form(static_cast<std::size_t>(n)));
}

TEST_CASE("verification table rows") {
  EulerRow r2 = euler_row(2);
  CHECK(r2.chi_total == 8);
  CHECK(r2.chi_member == 24);
  CHECK(r2.chi_divisor == 14);
  CHECK(r2.chi_infinity == 6);
  CHECK(r2.chi_intersection == 6);
  CHECK(r2.ed_degree == 6);

  EulerRow r3 = euler_row(3);
  CHECK(r3.chi_total == 10);
  CHECK(r3.chi_divisor == 54);
  CHECK(r3.chi_infinity == 7);
  CHECK(r3.chi_intersection == 4);
  CHECK(r3.ed_degree == 47);
}
