#include "eddeg/critical.hpp"

#include <algorithm>
#include <sstream>

namespace eddeg {

namespace {

Fp fp_of_rational(const Rational& x, std::uint64_t p) {
  mpz_class num = x.numerator();
  mpz_class den = x.denominator();
  std::uint64_t dn = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (dn == 0)
    throw DivisionByZero("denominator divisible by the modulus " +
                         std::to_string(p));
  return Fp(mpz_fdiv_ui(num.get_mpz_t(), p), p) * Fp(dn, p).inverse();
}

std::vector<Fp> random_point(Rng& rng, const RingPtr& ring, std::size_t n) {
  std::vector<Fp> alpha;
  alpha.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    alpha.push_back(FieldOps<Fp>::random(rng, *ring));
  return alpha;
}

std::vector<Rational> random_rational_point(Rng& rng, std::size_t n) {
  std::vector<Rational> alpha;
  alpha.reserve(n);
  for (std::size_t i = 0; i < n; ++i) alpha.push_back(Rational(rng.int_in(-10000, 10000)));
  return alpha;
}

}  // namespace

std::vector<PolyP> reduce_generators(const std::vector<PolyQ>& gens,
                                     std::uint64_t p) {
  RingPtr fp_ring = make_ring_fp(gens.front().ring()->vars, p);
  std::vector<PolyP> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(reduce_mod(g, fp_ring));
  return out;
}

std::vector<std::pair<PolyP, PolyP>> reduce_components(
    const std::vector<std::pair<PolyQ, PolyQ>>& comps, std::uint64_t p) {
  RingPtr fp_ring = make_ring_fp(comps.front().first.ring()->vars, p);
  std::vector<std::pair<PolyP, PolyP>> out;
  out.reserve(comps.size());
  for (const auto& [num, den] : comps) {
    PolyP dp = reduce_mod(den, fp_ring);
    if (dp.is_zero())
      throw ZeroDenominator("denominator vanishes mod " + std::to_string(p));
    out.emplace_back(reduce_mod(num, fp_ring), std::move(dp));
  }
  return out;
}

IdealPresentation<Rational> conormal_ideal(const ImplicitVariety& variety,
                                           const std::vector<std::string>& dual_names) {
  const RingPtr& base = variety.ideal.ring;
  const std::size_t n = base->nvars();
  const int c = variety.codim;

  std::vector<std::string> duals = dual_names;
  if (duals.empty()) {
    for (std::size_t i = 0; i < n; ++i) duals.push_back("u" + std::to_string(i + 1));
  }
  if (duals.size() != n)
    throw InternalError("need one dual variable per ambient variable");
  auto vars = base->vars;
  for (auto& name : duals) {
    while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
    vars.push_back(name);
  }
  RingPtr ext = make_ring_q(vars);

  std::vector<PolyQ> gens;
  gens.reserve(variety.ideal.generators.size());
  for (const auto& g : variety.ideal.generators) gens.push_back(embed(g, ext));

  // Rank condition: the covector row stacked on the Jacobian (z-columns
  // only) drops to rank <= c.
  std::vector<std::vector<PolyQ>> rows;
  std::vector<PolyQ> covector;
  covector.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    covector.push_back(PolyQ::variable(ext, n + i));
  rows.push_back(std::move(covector));
  for (const auto& g : gens) {
    std::vector<PolyQ> row;
    row.reserve(n);
    for (std::size_t v = 0; v < n; ++v) row.push_back(g.differentiate(v));
    rows.push_back(std::move(row));
  }
  auto minors = critical_detail::all_minors(rows, static_cast<std::size_t>(c) + 1);

  std::vector<PolyQ> out = std::move(gens);
  for (auto& m : minors) out.push_back(std::move(m));
  return IdealPresentation<Rational>::make(ext, std::move(out));
}

bool codimension_consistent(const ImplicitVariety& variety) {
  auto G = groebner_basis(variety.ideal, MonomialOrder::degrevlex());
  const int n = static_cast<int>(variety.ambient_dimension());
  return ideal_dimension(G) == n - variety.codim;
}

EDCertificate certify(std::vector<Trial> trials) {
  bool ok = !trials.empty();
  for (const auto& t : trials)
    ok = ok && t.raw.is_finite() && t.raw == trials.front().raw;
  if (!ok) {
    std::vector<long long> raw;
    std::ostringstream msg;
    msg << "trials disagree:";
    for (const auto& t : trials) {
      raw.push_back(t.raw.encoded());
      msg << " (p=" << t.prime << ", seed=" << t.seed << ") -> "
          << t.raw.to_string();
    }
    throw NonGeneric(msg.str(), std::move(raw));
  }
  EDCertificate cert;
  cert.count = trials.front().raw.value();
  cert.trials = std::move(trials);
  cert.agreed = true;
  return cert;
}

EDCertificate linear_critical_count(
    const ImplicitVariety& variety, const Protocol& protocol,
    const std::optional<LinearFunctional<Rational>>& functional) {
  const auto& gens_q = variety.ideal.generators;
  const int c = variety.codim;
  const std::size_t n = variety.ambient_dimension();

  std::vector<Trial> trials;
  for (int i = 0; i < protocol.trials; ++i) {
    const std::uint64_t p = protocol.primes[i % protocol.primes.size()];
    const std::uint64_t trial_seed = Rng::mix(protocol.seed, static_cast<std::uint64_t>(i));
    Rng rng(trial_seed);
    auto gens = reduce_generators(gens_q, p);
    const RingPtr& ring = gens.front().ring();

    std::vector<Fp> coeffs;
    if (functional) {
      for (const auto& x : functional->coefficients) coeffs.push_back(fp_of_rational(x, p));
    } else {
      do {
        coeffs = random_point(rng, ring, n);
      } while (std::all_of(coeffs.begin(), coeffs.end(),
                           [](const Fp& x) { return x.is_zero(); }));
    }
    std::vector<PolyP> gradient;
    gradient.reserve(n);
    for (const auto& x : coeffs) gradient.push_back(PolyP::constant(ring, x));

    auto critical = bordered_critical_generators(gens, gradient, c);
    PolyP ineq = critical_detail::smooth_locus_inequation(gens, c, rng);
    Count raw = count_with_inequation(
        IdealPresentation<Fp>::make(ring, std::move(critical)), ineq,
        protocol.groebner);
    trials.push_back(Trial{p, trial_seed, raw});
  }
  return certify(std::move(trials));
}

EDCertificate ed_degree(const VarietyPresentation& variety, const Protocol& protocol) {
  std::vector<Trial> trials;
  for (int i = 0; i < protocol.trials; ++i) {
    const std::uint64_t p = protocol.primes[i % protocol.primes.size()];
    const std::uint64_t trial_seed = Rng::mix(protocol.seed, static_cast<std::uint64_t>(i));
    Rng rng(trial_seed);
    Count raw = Count::infinite();

    if (variety.mode() == VarietyMode::implicit) {
      const auto& data = variety.implicit_data();
      if (protocol.over_rationals) {
        auto alpha = random_rational_point(rng, data.ambient_dimension());
        auto [ideal, ineq] =
            ed_critical_ideal(data.ideal.generators, data.codim, alpha, rng);
        raw = count_with_inequation(ideal, ineq, protocol.groebner);
      } else {
        auto gens = reduce_generators(data.ideal.generators, p);
        auto alpha = random_point(rng, gens.front().ring(), data.ambient_dimension());
        auto [ideal, ineq] = ed_critical_ideal(gens, data.codim, alpha, rng);
        raw = count_with_inequation(ideal, ineq, protocol.groebner);
      }
    } else {
      const auto& data = variety.parametric_data();
      if (protocol.over_rationals) {
        auto alpha = random_rational_point(rng, data.ambient_dimension());
        auto [system, ineq] =
            parametric_critical_system(data.domain, data.components, alpha);
        raw = count_with_inequation(system, ineq, protocol.groebner);
      } else {
        auto comps = reduce_components(data.components, p);
        const RingPtr& domain = comps.front().first.ring();
        auto alpha = random_point(rng, domain, data.ambient_dimension());
        auto [system, ineq] = parametric_critical_system(domain, comps, alpha);
        raw = count_with_inequation(system, ineq, protocol.groebner);
      }
    }
    trials.push_back(Trial{protocol.over_rationals ? 0 : p, trial_seed, raw});
  }
  return certify(std::move(trials));
}

}  // namespace eddeg
