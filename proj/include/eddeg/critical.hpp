#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eddeg/groebner.hpp"
#include "eddeg/rng.hpp"
#include "eddeg/variety.hpp"

namespace eddeg {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// Linear function plus the level defining its hyperplane.
template <class K>
struct LinearFunctional {
  std::vector<K> coefficients;
  K constant;
};

struct Trial {
  std::uint64_t prime;
  std::uint64_t seed;
  Count raw;
};

// Agreement certificate for a randomized count. `count` is meaningful only
// when `agreed` is true; disagreeing runs raise NonGeneric instead.
struct EDCertificate {
  std::int64_t count = 0;
  std::vector<Trial> trials;
  bool agreed = false;
};

// Randomized counting configuration: trial i runs over primes[i % #primes]
// with a seed derived from `seed`. Counting defaults to prime fields;
// rational runs are opt-in.
struct Protocol {
  int trials = 3;
  std::vector<std::uint64_t> primes = {kDefaultModulus, kAlternateModulus};
  std::uint64_t seed = kDefaultSeed;
  bool over_rationals = false;
  GroebnerOptions groebner = {/*use_chain_criterion=*/true};
};

namespace critical_detail {

// Determinant by Laplace expansion along the first row; fine at minor sizes.
template <class K>
Polynomial<K> determinant(const std::vector<std::vector<Polynomial<K>>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  const RingPtr& ring = m[0][0].ring();
  Polynomial<K> det(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial<K>>> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial<K>> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial<K> term = m[0][j] * determinant(sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline void combinations(
    std::size_t n, std::size_t k,
    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

// All size x size minors of a stacked matrix given as rows of polynomials.
template <class K>
std::vector<Polynomial<K>> all_minors(
    const std::vector<std::vector<Polynomial<K>>>& rows, std::size_t size) {
  std::vector<Polynomial<K>> out;
  const std::size_t nrows = rows.size();
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  if (size == 0 || size > nrows || size > ncols) return out;
  combinations(nrows, size, [&](const std::vector<std::size_t>& ri) {
    combinations(ncols, size, [&](const std::vector<std::size_t>& ci) {
      std::vector<std::vector<Polynomial<K>>> sub(size);
      for (std::size_t a = 0; a < size; ++a) {
        sub[a].reserve(size);
        for (std::size_t b = 0; b < size; ++b) sub[a].push_back(rows[ri[a]][ci[b]]);
      }
      Polynomial<K> d = determinant(sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

template <class K>
std::vector<std::vector<Polynomial<K>>> jacobian(
    const std::vector<Polynomial<K>>& gens) {
  std::vector<std::vector<Polynomial<K>>> jac;
  jac.reserve(gens.size());
  for (const auto& f : gens) {
    std::vector<Polynomial<K>> row;
    const std::size_t n = f.ring()->nvars();
    row.reserve(n);
    for (std::size_t v = 0; v < n; ++v) row.push_back(f.differentiate(v));
    jac.push_back(std::move(row));
  }
  return jac;
}

// Random linear combination of the c x c Jacobian minors; vanishes exactly
// on the locus where the Jacobian drops below full rank (for generic
// coefficients), so it certifies membership in the smooth locus.
template <class K>
Polynomial<K> smooth_locus_inequation(const std::vector<Polynomial<K>>& gens,
                                      int codim, Rng& rng) {
  const RingPtr& ring = gens.front().ring();
  auto jac = jacobian(gens);
  auto minors = all_minors(jac, static_cast<std::size_t>(codim));
  Polynomial<K> combo(ring);
  for (auto& m : minors) {
    K r = FieldOps<K>::random_nonzero(rng, *ring);
    combo += m.scaled(r);
  }
  return combo;
}

}  // namespace critical_detail

// Critical-point equations for a linear objective with the given gradient
// row: the generators plus the (c+1) minors of the gradient row stacked on
// the Jacobian.
template <class K>
std::vector<Polynomial<K>> bordered_critical_generators(
    const std::vector<Polynomial<K>>& gens,
    const std::vector<Polynomial<K>>& gradient_row, int codim) {
  const RingPtr& ring = gens.front().ring();
  const std::size_t n = ring->nvars();
  if (codim < 1 || codim > static_cast<int>(n))
    throw CodimensionOutOfRange("codimension " + std::to_string(codim) +
                                " out of range");
  std::vector<std::vector<Polynomial<K>>> rows;
  rows.push_back(gradient_row);
  for (auto& row : critical_detail::jacobian(gens)) rows.push_back(std::move(row));
  auto minors =
      critical_detail::all_minors(rows, static_cast<std::size_t>(codim) + 1);
  std::vector<Polynomial<K>> out = gens;
  for (auto& m : minors) out.push_back(std::move(m));
  return out;
}

// Ideal of the conormal variety in 2n variables: the original generators
// plus the rank condition tying the covector row (u_1..u_n) to the Jacobian.
IdealPresentation<Rational> conormal_ideal(
    const ImplicitVariety& variety,
    const std::vector<std::string>& dual_names = {});

// Debug cross-check of the presented codimension against ideal_dimension;
// exact but potentially slow, so it sits behind an explicit call.
bool codimension_consistent(const ImplicitVariety& variety);

// Critical ideal of the squared distance from alpha, together with the
// inequation certifying smooth-locus rank (to pass to count_with_inequation).
template <class K>
std::pair<IdealPresentation<K>, Polynomial<K>> ed_critical_ideal(
    const std::vector<Polynomial<K>>& gens, int codim, const std::vector<K>& alpha,
    Rng& rng) {
  const RingPtr& ring = gens.front().ring();
  const std::size_t n = ring->nvars();
  if (alpha.size() != n) throw InternalError("alpha has wrong length");
  // The distance gradient is 2(z - alpha); the factor 2 drops out.
  std::vector<Polynomial<K>> gradient;
  gradient.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    gradient.push_back(Polynomial<K>::variable(ring, i) -
                       Polynomial<K>::constant(ring, alpha[i]));
  auto critical = bordered_critical_generators(gens, gradient, codim);
  Polynomial<K> ineq = critical_detail::smooth_locus_inequation(gens, codim, rng);
  return {IdealPresentation<K>::make(ring, std::move(critical)), std::move(ineq)};
}

// Critical system of the squared distance pulled back through a rational
// parametrization, cleared of denominators: one polynomial per domain
// variable, plus the product of the distinct denominators as inequation.
// The parametrization is taken to be generically one-to-one onto its image;
// otherwise every downstream count is scaled by the degree of the map.
template <class K>
std::pair<IdealPresentation<K>, Polynomial<K>> parametric_critical_system(
    const RingPtr& domain, const std::vector<std::pair<Polynomial<K>, Polynomial<K>>>& comps,
    const std::vector<K>& alpha) {
  const std::size_t d = domain->nvars();
  const std::size_t n = comps.size();
  if (alpha.size() != n) throw InternalError("alpha has wrong length");
  for (const auto& [num, den] : comps)
    if (den.is_zero()) throw ZeroDenominator("component denominator is zero");

  // Group components sharing a denominator; the cleared equation scales each
  // group's contribution by the cubes of the other groups' denominators.
  std::vector<Polynomial<K>> dens;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t g = 0; g < dens.size() && !found; ++g) {
      if (dens[g] == comps[i].second) {
        members[g].push_back(i);
        found = true;
      }
    }
    if (!found) {
      dens.push_back(comps[i].second);
      members.push_back({i});
    }
  }
  const std::size_t groups = dens.size();

  std::vector<Polynomial<K>> den_cubed;
  den_cubed.reserve(groups);
  for (const auto& q : dens) den_cubed.push_back(q.pow(3));

  // cofactor[g] = prod of den_cubed over the other groups.
  std::vector<Polynomial<K>> cofactor(groups, Polynomial<K>::constant(
                                                  domain, FieldOps<K>::one(*domain)));
  for (std::size_t g = 0; g < groups; ++g)
    for (std::size_t h = 0; h < groups; ++h)
      if (h != g) cofactor[g] = cofactor[g] * den_cubed[h];

  std::vector<Polynomial<K>> equations;
  equations.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    Polynomial<K> eq(domain);
    for (std::size_t g = 0; g < groups; ++g) {
      const Polynomial<K>& q = dens[g];
      Polynomial<K> dq = q.differentiate(j);
      Polynomial<K> group_sum(domain);
      for (std::size_t i : members[g]) {
        const Polynomial<K>& p = comps[i].first;
        // (p - alpha*q) * (p' q - p q'), the numerator of the chain rule
        // over q^3.
        Polynomial<K> offset = p - q.scaled(alpha[i]);
        Polynomial<K> rate = p.differentiate(j) * q - p * dq;
        group_sum += offset * rate;
      }
      eq += group_sum * cofactor[g];
    }
    equations.push_back(std::move(eq));
  }

  Polynomial<K> ineq = Polynomial<K>::constant(domain, FieldOps<K>::one(*domain));
  for (const auto& q : dens) ineq = ineq * q;
  return {IdealPresentation<K>::make(domain, std::move(equations)), std::move(ineq)};
}

// Reductions of a rational presentation to F_p.
std::vector<PolyP> reduce_generators(const std::vector<PolyQ>& gens, std::uint64_t p);
std::vector<std::pair<PolyP, PolyP>> reduce_components(
    const std::vector<std::pair<PolyQ, PolyQ>>& comps, std::uint64_t p);

// Number of critical points of a generic (or given) linear function on the
// smooth locus, with the agreement protocol across trials.
EDCertificate linear_critical_count(
    const ImplicitVariety& variety, const Protocol& protocol,
    const std::optional<LinearFunctional<Rational>>& functional = std::nullopt);

// ED degree by the symbolic critical route, for either presentation mode.
EDCertificate ed_degree(const VarietyPresentation& variety, const Protocol& protocol);

// Assembles a certificate; throws NonGeneric unless all trials agree on a
// finite count.
EDCertificate certify(std::vector<Trial> trials);

}  // namespace eddeg
