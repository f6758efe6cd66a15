#include "eddeg/polynomial.hpp"

namespace eddeg {

PolyP reduce_mod(const PolyQ& f, const RingPtr& fp_ring) {
  if (fp_ring->modulus == 0)
    throw RingMismatch("reduction target must be a prime-field ring");
  if (f.ring()->vars != fp_ring->vars)
    throw RingMismatch("reduction must preserve the variable list");
  const std::uint64_t p = fp_ring->modulus;
  std::vector<PolyP::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    mpz_class num = c.numerator();
    mpz_class den = c.denominator();
    std::uint64_t dn = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (dn == 0)
      throw DivisionByZero("denominator divisible by the modulus " +
                           std::to_string(p));
    std::uint64_t nm = mpz_fdiv_ui(num.get_mpz_t(), p);
    Fp value = Fp(nm, p) * Fp(dn, p).inverse();
    if (!value.is_zero()) terms.emplace_back(m, value);
  }
  return PolyP::from_terms(fp_ring, std::move(terms));
}

}  // namespace eddeg
