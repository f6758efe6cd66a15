#include "eddeg/monomial.hpp"

namespace eddeg {

namespace {

// Degrevlex on the exponent slice [lo, hi): higher total degree wins; on
// ties the monomial whose last differing exponent is smaller wins.
int degrevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind) {
    case OrderKind::degrevlex:
      return degrevlex_cmp(a, b, 0, n);
    case OrderKind::lex:
      return lex_cmp(a, b);
    case OrderKind::block: {
      const std::size_t k = block_size < n ? block_size : n;
      int c = degrevlex_cmp(a, b, 0, k);
      if (c != 0) return c;
      return degrevlex_cmp(a, b, k, n);
    }
  }
  return 0;
}

const char* MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::degrevlex:
      return "degrevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::block:
      return "block";
  }
  return "?";
}

}  // namespace eddeg
