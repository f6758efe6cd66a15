#pragma once

#include <string>
#include <vector>

#include "eddeg/polynomial.hpp"
#include "eddeg/rng.hpp"

namespace eddeg::testing {

// Random sparse polynomial with small support, for property tests.
template <class K>
Polynomial<K> random_poly(Rng& rng, const RingPtr& ring, int max_terms = 5,
                          std::uint32_t max_exp = 3) {
  std::vector<typename Polynomial<K>::Term> terms;
  const int nterms = static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < nterms; ++t) {
    Monomial m(ring->nvars());
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      m[v] = static_cast<std::uint32_t>(rng.below(max_exp + 1));
    terms.emplace_back(std::move(m), FieldOps<K>::random(rng, *ring));
  }
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

inline Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint32_t max_exp = 4) {
  Monomial m(nvars);
  for (std::size_t v = 0; v < nvars; ++v)
    m[v] = static_cast<std::uint32_t>(rng.below(max_exp + 1));
  return m;
}

}  // namespace eddeg::testing
