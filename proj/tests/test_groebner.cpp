#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eddeg/groebner.hpp"
#include "eddeg/parse.hpp"
#include "test_support.hpp"

using namespace eddeg;

namespace {

IdealPresentation<Rational> ideal_q(const RingPtr& ring,
                                    const std::vector<std::string>& gens) {
  std::vector<PolyQ> ps;
  for (const auto& s : gens) ps.push_back(parse_poly(s, ring));
  return IdealPresentation<Rational>::make(ring, std::move(ps));
}

}  // namespace

TEST_CASE("groebner basis examples") {
  RingPtr xy = make_ring_q({"x", "y"});

  auto linear = groebner_basis(ideal_q(xy, {"x - y", "x + y"}), MonomialOrder::lex());
  REQUIRE(linear.elements.size() == 2);
  CHECK(linear.elements[0] == parse_poly("y", xy));
  CHECK(linear.elements[1] == parse_poly("x", xy));

  auto monomial =
      groebner_basis(ideal_q(xy, {"x^2", "y^2"}), MonomialOrder::degrevlex());
  REQUIRE(monomial.elements.size() == 2);
  CHECK(monomial.elements[0] == parse_poly("y^2", xy));
  CHECK(monomial.elements[1] == parse_poly("x^2", xy));

  // Hand elimination: x = y forces 2y^2 = 1.
  auto circle_line =
      groebner_basis(ideal_q(xy, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::lex());
  REQUIRE(circle_line.elements.size() == 2);
  CHECK(circle_line.elements[0] == parse_poly("y^2 - 1/2", xy));
  CHECK(circle_line.elements[1] == parse_poly("x - y", xy));
}

TEST_CASE("normal form examples") {
  RingPtr xy = make_ring_q({"x", "y"});
  auto axes = groebner_basis(ideal_q(xy, {"x", "y"}), MonomialOrder::degrevlex());
  CHECK(normal_form(parse_poly("x - y", xy), axes).is_zero());
  CHECK(normal_form(parse_poly("1", xy), axes) == parse_poly("1", xy));

  auto mixed =
      groebner_basis(ideal_q(xy, {"x^2 - y", "y^2"}), MonomialOrder::degrevlex());
  CHECK(normal_form(parse_poly("x^3", xy), mixed) == parse_poly("x*y", xy));
}

TEST_CASE("normal form is idempotent on random input") {
  RingPtr ring = make_ring_q({"x", "y", "z"});
  auto G = groebner_basis(ideal_q(ring, {"x^2 - y", "y*z - 1", "z^3 - x"}),
                          MonomialOrder::degrevlex());
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    PolyQ f = testing::random_poly<Rational>(rng, ring);
    PolyQ r = normal_form(f, G);
    CHECK(normal_form(r, G) == r);
  }
}

TEST_CASE("quotient dimension examples") {
  RingPtr xy = make_ring_q({"x", "y"});

  auto box = groebner_basis(ideal_q(xy, {"x^2", "y^2"}), MonomialOrder::degrevlex());
  CHECK(quotient_dimension(box) == Count::of(4));

  auto two_points =
      groebner_basis(ideal_q(xy, {"x - y", "2*y^2 - 1"}), MonomialOrder::degrevlex());
  CHECK(quotient_dimension(two_points) == Count::of(2));

  auto hyperbola = groebner_basis(ideal_q(xy, {"x*y - 1"}), MonomialOrder::degrevlex());
  CHECK(!quotient_dimension(hyperbola).is_finite());
}

TEST_CASE("quotient dimension is independent of the order") {
  RingPtr xy = make_ring_q({"x", "y"});
  RingPtr xyz = make_ring_q({"x", "y", "z"});
  struct Fixture {
    RingPtr ring;
    std::vector<std::string> gens;
  };
  std::vector<Fixture> fixtures = {
      {xy, {"x^2", "y^2"}},
      {xy, {"x - y", "2*y^2 - 1"}},
      {xy, {"x^2 + y^2 - 1", "x - y"}},
      {xy, {"x^3 - 1", "y^2 - x"}},
      {xyz, {"x^2 - y", "y^2 - z", "z^2 - 1"}},
  };
  for (const auto& fx : fixtures) {
    Count reference = quotient_dimension(
        groebner_basis(ideal_q(fx.ring, fx.gens), MonomialOrder::degrevlex()));
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::block(1)}) {
      CHECK(quotient_dimension(groebner_basis(ideal_q(fx.ring, fx.gens), ord)) ==
            reference);
    }
  }
}

TEST_CASE("ideal dimension examples") {
  RingPtr xy = make_ring_q({"x", "y"});
  RingPtr xyz = make_ring_q({"x", "y", "z"});

  auto curve = groebner_basis(ideal_q(xy, {"x*y - 1"}), MonomialOrder::degrevlex());
  CHECK(ideal_dimension(curve) == 1);

  auto point = groebner_basis(ideal_q(xy, {"x", "y"}), MonomialOrder::degrevlex());
  CHECK(ideal_dimension(point) == 0);

  // A single squarefree polynomial in m variables cuts dimension m-1.
  CHECK(ideal_dimension(groebner_basis(ideal_q(xy, {"y - x^2"}),
                                       MonomialOrder::degrevlex())) == 1);
  CHECK(ideal_dimension(groebner_basis(ideal_q(xy, {"x^2 + y^2 - 1"}),
                                       MonomialOrder::degrevlex())) == 1);
  CHECK(ideal_dimension(groebner_basis(ideal_q(xyz, {"x*y*z - 1"}),
                                       MonomialOrder::degrevlex())) == 2);
  CHECK(ideal_dimension(groebner_basis(ideal_q(xyz, {"x + y + z"}),
                                       MonomialOrder::degrevlex())) == 2);

  auto unit = groebner_basis(ideal_q(xy, {"x", "x - 1"}), MonomialOrder::degrevlex());
  CHECK_THROWS_AS(ideal_dimension(unit), UnitIdeal);
}

TEST_CASE("count with inequation") {
  RingPtr xr = make_ring_q({"x"});
  auto I = ideal_q(xr, {"x^2 - x"});
  CHECK(count_with_inequation(I, parse_poly("x", xr)) == Count::of(1));
  CHECK(count_with_inequation(I, parse_poly("1", xr)) == Count::of(2));
  CHECK(count_with_inequation(I, PolyQ::zero(xr)) == Count::of(0));
  // Removing both roots leaves nothing.
  CHECK(count_with_inequation(I, parse_poly("x^2 - x", xr)) == Count::of(0));
}

TEST_CASE("computed bases verify the S-pair criterion on random ideals") {
  const std::uint64_t p = 32003;
  RingPtr ring = make_ring_fp({"x", "y", "z"}, p);
  Rng rng(97);
  int verified = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<PolyP> gens;
    const int k = 2 + static_cast<int>(rng.below(2));
    for (int i = 0; i < k; ++i) {
      PolyP f = testing::random_poly<Fp>(rng, ring, 4, 2);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    auto ideal = IdealPresentation<Fp>::make(ring, gens);
    for (bool chain : {false, true}) {
      GroebnerOptions opts;
      opts.use_chain_criterion = chain;
      auto G = groebner_basis(ideal, MonomialOrder::degrevlex(), opts);
      CHECK(is_groebner_basis_of(G, ideal));
      ++verified;
    }
  }
  CHECK(verified > 20);
}

TEST_CASE("chain criterion does not change the reduced basis") {
  RingPtr ring = make_ring_q({"x", "y", "z"});
  auto I = ideal_q(ring, {"x^2 + y^2 + z^2 - 1", "x*y - z", "x - y^2"});
  GroebnerOptions plain, chained;
  chained.use_chain_criterion = true;
  auto a = groebner_basis(I, MonomialOrder::degrevlex(), plain);
  auto b = groebner_basis(I, MonomialOrder::degrevlex(), chained);
  REQUIRE(a.elements.size() == b.elements.size());
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    CHECK(a.elements[i] == b.elements[i]);
}

TEST_CASE("random ideal combinations reduce to zero") {
  const std::uint64_t p = 32003;
  RingPtr ring = make_ring_fp({"x", "y", "z"}, p);
  Rng rng(555);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<PolyP> gens;
    for (int i = 0; i < 3; ++i) {
      PolyP f = testing::random_poly<Fp>(rng, ring, 4, 2);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    auto ideal = IdealPresentation<Fp>::make(ring, gens);
    auto G = groebner_basis(ideal, MonomialOrder::degrevlex());
    // Arbitrary members of the ideal must have normal form zero.
    PolyP member(ring);
    for (const auto& g : ideal.generators)
      member += g * testing::random_poly<Fp>(rng, ring, 3, 2);
    CHECK(normal_form(member, G).is_zero());
  }
}

TEST_CASE("random linear systems match rank analysis") {
  const std::uint64_t p = 32003;
  RingPtr ring = make_ring_fp({"x", "y", "z"}, p);
  Rng rng(113);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + rng.below(3);
    std::vector<PolyP> gens;
    // Dense affine-linear forms; track the coefficient matrix for the rank
    // oracle.
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t i = 0; i < k; ++i) {
      PolyP f(ring);
      std::vector<std::uint64_t> row;
      for (std::size_t v = 0; v < 3; ++v) {
        Fp c = FieldOps<Fp>::random(rng, *ring);
        row.push_back(c.value());
        f += PolyP::variable(ring, v).scaled(c);
      }
      f += PolyP::constant(ring, FieldOps<Fp>::random(rng, *ring));
      if (f.is_zero()) continue;
      rows.push_back(row);
      gens.push_back(f);
    }
    if (gens.empty()) continue;

    // Gaussian elimination over F_p on the homogeneous part.
    auto rank = [&]() {
      auto m = rows;
      std::size_t r = 0;
      for (std::size_t col = 0; col < 3 && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = Fp(m[r][col], p).inverse().value();
        for (std::size_t j = 0; j < 3; ++j)
          m[r][j] = Fp(m[r][j], p).operator*(Fp(inv, p)).value();
        for (std::size_t i2 = 0; i2 < m.size(); ++i2) {
          if (i2 == r || m[i2][col] == 0) continue;
          Fp f2(m[i2][col], p);
          for (std::size_t j = 0; j < 3; ++j)
            m[i2][j] = (Fp(m[i2][j], p) - f2 * Fp(m[r][j], p)).value();
        }
        ++r;
      }
      return r;
    }();

    auto G = groebner_basis(IdealPresentation<Fp>::make(ring, gens),
                            MonomialOrder::degrevlex());
    Count dim = quotient_dimension(G);
    bool inconsistent = false;
    for (const auto& g : G.elements) inconsistent = inconsistent || g.is_constant();
    if (inconsistent) {
      CHECK(dim == Count::of(0));
    } else if (rank == 3) {
      CHECK(dim == Count::of(1));
    } else {
      CHECK(!dim.is_finite());
    }
  }
}

TEST_CASE("resource limits fail loudly") {
  RingPtr xy = make_ring_q({"x", "y"});
  GroebnerOptions opts;
  opts.max_degree = 3;
  CHECK_THROWS_AS(groebner_basis(ideal_q(xy, {"x^5 - y", "y^5 - x", "x^2*y^2 - 2"}),
                                 MonomialOrder::degrevlex(), opts),
                  ResourceLimit);
}

TEST_CASE("block order eliminates its leading variables") {
  // In an elimination order, basis elements free of the first variable
  // generate the elimination ideal; for a graph ideal that recovers the
  // defining equation of the image.
  RingPtr ring = make_ring_q({"t", "x", "y"});
  auto G = groebner_basis(ideal_q(ring, {"x - t^2", "y - t^3"}),
                          MonomialOrder::block(1));
  bool found = false;
  for (const auto& g : G.elements) {
    bool uses_t = false;
    for (const auto& [m, c] : g.terms()) uses_t = uses_t || m[0] > 0;
    if (!uses_t) {
      found = found || g == parse_poly("x^3 - y^2", ring) ||
              g == parse_poly("y^2 - x^3", ring);
    }
  }
  CHECK(found);
}
