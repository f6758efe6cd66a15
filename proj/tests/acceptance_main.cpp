// Acceptance suite: drives every verification gate end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any gate fails.
//
//   acceptance_suite [--long]
//
// --long adds the n = 4 camera count (about half a minute per trial).

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eddeg/critical.hpp"
#include "eddeg/euler.hpp"
#include "eddeg/linalg.hpp"
#include "eddeg/multiview.hpp"
#include "eddeg/parse.hpp"
#include "test_support.hpp"

using namespace eddeg;
using ordered_json = nlohmann::ordered_json;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << criterion << ": " << what
            << std::endl;
  if (!ok) ++failures;
}

ordered_json run_cli_json(const std::string& args, int* exit_code) {
  static int counter = 0;
  std::string path = "/tmp/eddeg_acceptance_" + std::to_string(counter++) + ".json";
  std::string cmd = std::string(EDDEG_BIN) + " " + args + " > " + path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(path.c_str());
  if (*exit_code != 0) return ordered_json();
  return ordered_json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
}

std::string fixture(const std::string& name) {
  return std::string(EDDEG_FIXTURES_DIR) + "/" + name;
}

// Checks a multiview CLI run: exact count, >= 3 agreeing trials, >= 2
// distinct primes, >= 2 distinct seeds (each trial also draws its own rig).
bool check_multiview_run(const std::string& args, long long expected,
                         long long* observed) {
  int code = 0;
  ordered_json j = run_cli_json(args, &code);
  if (code != 0 || j.is_discarded()) return false;
  if (!(j["agreed"] == true && j["count"] == expected)) return false;
  if (j["trials"].size() < 3) return false;
  std::set<std::uint64_t> primes, seeds;
  for (const auto& t : j["trials"]) {
    primes.insert(t["prime"].get<std::uint64_t>());
    seeds.insert(t["seed"].get<std::uint64_t>());
    if (t["count"].get<long long>() != expected) return false;
  }
  *observed = j["count"].get<long long>();
  return primes.size() >= 2 && seeds.size() >= 2;
}

// --- Criterion 6 helpers: independent univariate oracles --------------------

// (t - a) + 2t(t^2 - b): coefficients by hand, degree 3.
int oracle_parabola_degree(const Rational& a, const Rational& b) {
  Rational c[4] = {-a, Rational(1) - Rational(2) * b, Rational(0), Rational(2)};
  int deg = -1;
  for (int i = 0; i < 4; ++i)
    if (!c[i].is_zero()) deg = i;
  return deg;
}

// (t - a) + 2t(t^2 - b) + 3t^2(t^3 - c): degree 5.
int oracle_twisted_cubic_degree(const Rational& a, const Rational& b,
                                const Rational& c) {
  Rational k[6] = {-a,          Rational(1) - Rational(2) * b,
                   Rational(0), Rational(2),
                   Rational(-3) * c, Rational(3)};
  int deg = -1;
  for (int i = 0; i < 6; ++i)
    if (!k[i].is_zero()) deg = i;
  return deg;
}

Protocol protocol_with(std::uint64_t seed, int trials = 3) {
  Protocol p;
  p.seed = seed;
  p.trials = trials;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_running = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--long") long_running = true;

  // 1. Multiview cross-check against the closed form, through the CLI.
  long long mv2 = 0, mv3 = 0, mv4 = 0;
  report(1, "eddeg multiview 2 returns 6 across seeds, rigs and two primes",
         check_multiview_run("multiview 2 --trials 3 --seed 11", 6, &mv2));
  report(1, "eddeg multiview 3 returns 47 across seeds, rigs and two primes",
         check_multiview_run("multiview 3 --trials 3 --seed 11", 47, &mv3));
  if (long_running) {
    report(1, "eddeg multiview 4 --long returns 148",
           check_multiview_run("multiview 4 --long --trials 3 --seed 11", 148, &mv4));
  } else {
    std::cout << "SKIP criterion-1: multiview 4 (pass --long to include it)"
              << std::endl;
  }
  report(1, "observed counts respect the cubic upper bound",
         mv2 != 0 && mv3 != 0 && mv2 <= ed_degree_upper_bound(2) &&
             mv3 <= ed_degree_upper_bound(3));
  // Camera counts past the desk scale are covered by exact arithmetic only.
  report(1, "closed form matches the published counts for n = 2..7",
         ed_degree_closed_form(2) == 6 && ed_degree_closed_form(3) == 47 &&
             ed_degree_closed_form(4) == 148 && ed_degree_closed_form(5) == 336 &&
             ed_degree_closed_form(6) == 638 && ed_degree_closed_form(7) == 1081);

  // 2. Euler-chain identities, symbolic and numeric.
  {
    const NPoly n = NPoly::n();
    bool symbolic =
        chi_blowup() == NPoly(2) * n + NPoly(4) &&
        chi_smooth_member() ==
            NPoly(std::vector<Rational>{Rational(0), Rational(12), Rational(-16),
                                        Rational(8)}) &&
        chi_distance_divisor() ==
            NPoly(std::vector<Rational>{Rational(0), Rational(9), Rational(-9),
                                        Rational(4)}) &&
        chi_boundary() ==
            NPoly(std::vector<Rational>{Rational(0), Rational(16, 3),
                                        Rational(-3, 2), Rational(1, 6)}) &&
        chi_distance_boundary() ==
            NPoly(std::vector<Rational>{Rational(0), Rational(13, 3), Rational(0),
                                        Rational(-1, 3)}) &&
        ed_degree_via_euler() ==
            NPoly(std::vector<Rational>{Rational(-4), Rational(8),
                                        Rational(-21, 2), Rational(9, 2)});
    report(2, "symbolic chi identities and the closed form", symbolic);

    bool numeric = true;
    for (long k = 2; k <= 10; ++k) {
      numeric = numeric &&
                ed_degree_via_euler().eval_int(k) ==
                    ed_degree_closed_form(static_cast<std::size_t>(k));
      numeric = numeric && chi_blowup().eval_int(k) == 2 * k + 4;
      numeric = numeric && chi_distance_divisor().eval_int(k) ==
                               4 * k * k * k - 9 * k * k + 9 * k;
    }
    report(2, "numeric agreement for n = 2..10", numeric);
  }

  // 3. Route agreement: topological chain vs symbolic counting.
  {
    bool ok2 = mv2 != 0 && ed_degree_via_euler().eval_int(2) == mv2;
    bool ok3 = mv3 != 0 && ed_degree_via_euler().eval_int(3) == mv3;
    report(3, "ed_degree_via_euler(2) equals the multiview count", ok2);
    report(3, "ed_degree_via_euler(3) equals the multiview count", ok3);
    if (long_running)
      report(3, "ed_degree_via_euler(4) equals the multiview count",
             mv4 != 0 && ed_degree_via_euler().eval_int(4) == mv4);
  }

  // 4. Linear critical counts and the conormal dimension.
  {
    auto parabola = load_variety(fixture("parabola.poly")).implicit_data();
    auto cubic = load_variety(fixture("cubic.poly")).implicit_data();
    report(4, "one critical point of a generic linear function on the parabola",
           linear_critical_count(parabola, protocol_with(20)).count == 1);
    report(4, "four critical points on x(x+1)y = 1",
           linear_critical_count(cubic, protocol_with(21)).count == 4);

    bool bezout = true;
    RingPtr xy = make_ring_q({"x", "y"});
    Rng rng(2024);
    for (int d = 2; d <= 4; ++d) {
      std::vector<PolyQ::Term> terms;
      for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
          terms.emplace_back(
              Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
              Rational(rng.int_in(-20, 20)));
      ImplicitVariety v{
          IdealPresentation<Rational>::make(xy, {PolyQ::from_terms(xy, terms)}), 1};
      bezout = bezout &&
               linear_critical_count(v, protocol_with(30 + d)).count == d * (d - 1);
    }
    report(4, "random smooth plane curves of degree 2, 3, 4 count 2, 6, 12", bezout);

    auto G = groebner_basis(conormal_ideal(parabola), MonomialOrder::degrevlex());
    report(4, "the conormal variety of the parabola has dimension 2",
           ideal_dimension(G) == 2);
  }

  // 5. Milnor constants, with the triple-point value derived on the spot.
  {
    bool models = model_fiber_chi(make_milnor_model(MilnorModelTag::smooth)) == 0 &&
                  model_fiber_chi(make_milnor_model(MilnorModelTag::node)) == -1 &&
                  model_fiber_chi(make_milnor_model(MilnorModelTag::umbrella)) == 1 &&
                  model_fiber_chi(make_milnor_model(MilnorModelTag::triple)) == 15;
    RingPtr xyz = make_ring_q({"x", "y", "z"});
    bool mu = milnor_number(parse_poly("x*y + x*z + y*z - x*y*z", xyz),
                            {Rational(0), Rational(0), Rational(0)}) == 1;
    report(5, "model fiber characteristics are (0, -1, 1, 15)", models);
    report(5, "the eightfold-cover base has Milnor number 1", mu);
  }

  // 6. Property suites.
  {
    // Seed/prime agreement on every ED fixture.
    bool agree = true;
    for (const char* name :
         {"line.poly", "circle.poly", "parabola.poly", "twisted_cubic.poly",
          "parabola.par", "twisted_cubic.par"}) {
      auto cert = ed_degree(load_variety(fixture(name)), protocol_with(60, 4));
      agree = agree && cert.agreed;
    }
    report(6, "seed and prime agreement on all ED fixtures", agree);

    // Isometry invariance under three rational rotations + translations.
    bool isometry = true;
    Rng irng(271828);
    for (const char* name : {"circle.poly", "parabola.poly"}) {
      auto variety = load_variety(fixture(name));
      const auto& data = variety.implicit_data();
      std::int64_t reference = ed_degree(variety, protocol_with(61)).count;
      for (int trial = 0; trial < 3; ++trial) {
        Rational s(irng.int_in(-50, 50), static_cast<long>(1 + irng.below(40)));
        QMat i_minus_s{{Rational(1), -s}, {s, Rational(1)}};
        QMat i_plus_s{{Rational(1), s}, {-s, Rational(1)}};
        QMat q = matrix_product(i_minus_s, matrix_inverse(i_plus_s));
        QVec shift{Rational(irng.int_in(-30, 30)), Rational(irng.int_in(-30, 30))};
        const RingPtr& ring = data.ideal.ring;
        std::map<std::string, PolyQ> images;
        for (std::size_t i = 0; i < 2; ++i) {
          PolyQ image(ring);
          for (std::size_t j = 0; j < 2; ++j)
            image += (PolyQ::variable(ring, j) - PolyQ::constant(ring, shift[j]))
                         .scaled(q[j][i]);
          images[ring->vars[i]] = image;
        }
        std::vector<PolyQ> moved;
        for (const auto& g : data.ideal.generators)
          moved.push_back(substitute(g, images, ring));
        auto transformed = VarietyPresentation::implicit(
            IdealPresentation<Rational>::make(ring, std::move(moved)), data.codim);
        isometry = isometry &&
                   ed_degree(transformed, protocol_with(62 + trial)).count == reference;
      }
    }
    report(6, "isometry invariance on the circle and the parabola", isometry);

    // Implicit/parametric agreement against the univariate oracles.
    Rng orng(314159);
    bool oracles =
        oracle_parabola_degree(Rational(orng.int_in(1, 999)),
                               Rational(orng.int_in(1, 999))) == 3 &&
        oracle_twisted_cubic_degree(Rational(orng.int_in(1, 999)),
                                    Rational(orng.int_in(1, 999)),
                                    Rational(orng.int_in(1, 999))) == 5;
    auto pi = ed_degree(load_variety(fixture("parabola.poly")), protocol_with(70));
    auto pp = ed_degree(load_variety(fixture("parabola.par")), protocol_with(71));
    auto ti = ed_degree(load_variety(fixture("twisted_cubic.poly")), protocol_with(72));
    auto tp = ed_degree(load_variety(fixture("twisted_cubic.par")), protocol_with(73));
    report(6, "implicit/parametric agreement at the oracle values 3 and 5",
           oracles && pi.count == 3 && pp.count == 3 && ti.count == 5 &&
               tp.count == 5);

    // Groebner invariants on randomized inputs.
    bool groebner_ok = true;
    RingPtr ring = make_ring_fp({"x", "y", "z"}, 32003);
    Rng grng(97531);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PolyP> gens;
      for (int i = 0; i < 2; ++i) {
        PolyP f = eddeg::testing::random_poly<Fp>(grng, ring, 4, 2);
        if (!f.is_zero()) gens.push_back(f);
      }
      if (gens.empty()) continue;
      auto ideal = IdealPresentation<Fp>::make(ring, gens);
      auto G = groebner_basis(ideal, MonomialOrder::degrevlex());
      groebner_ok = groebner_ok && is_groebner_basis_of(G, ideal);
      PolyP probe = eddeg::testing::random_poly<Fp>(grng, ring, 5, 3);
      PolyP r = normal_form(probe, G);
      groebner_ok = groebner_ok && normal_form(r, G) == r;
    }
    report(6, "S-polynomial and normal-form invariants on random ideals",
           groebner_ok);

    // Order-independence of the quotient dimension.
    bool orders = true;
    RingPtr xy = make_ring_q({"x", "y"});
    std::vector<std::vector<std::string>> fixtures = {
        {"x^2", "y^2"},
        {"x - y", "2*y^2 - 1"},
        {"x^2 + y^2 - 1", "x - y"},
        {"x^3 - 1", "y^2 - x"},
    };
    for (const auto& gens : fixtures) {
      std::vector<PolyQ> ps;
      for (const auto& s : gens) ps.push_back(parse_poly(s, xy));
      auto ideal = IdealPresentation<Rational>::make(xy, ps);
      Count ref = quotient_dimension(groebner_basis(ideal, MonomialOrder::degrevlex()));
      for (auto ord : {MonomialOrder::lex(), MonomialOrder::block(1)})
        orders = orders && quotient_dimension(groebner_basis(ideal, ord)) == ref;
    }
    report(6, "quotient dimension is independent of the monomial order", orders);
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << failures << " failing checks)" << std::endl;
  return failures == 0 ? 0 : 1;
}
